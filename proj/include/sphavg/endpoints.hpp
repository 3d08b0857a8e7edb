#pragma once

#include <string>
#include <vector>

#include "sphavg/region.hpp"

namespace sphavg::region {

enum class Verdict { Yes, No, Unknown };

std::string verdict_string(Verdict v);

/// Boundedness verdicts at an exponent point. The implication lattice
/// strong => restricted, weak and (restricted or weak) => restricted_weak is
/// enforced on construction.
struct Classification {
    Verdict strong = Verdict::Unknown;
    Verdict restricted = Verdict::Unknown;
    Verdict weak = Verdict::Unknown;
    Verdict restricted_weak = Verdict::Unknown;
    std::string source;
};

Classification make_classification(Verdict strong, Verdict restricted, Verdict weak,
                                   Verdict restricted_weak, std::string source);

struct EndpointRecord {
    ExponentPoint point;
    std::string name;   // "G", "G'", "K#3", ...
    std::string orbit;  // name stem shared by the whole orbit
    Classification cls;
};

/// The named catalogue with all coordinate-permutation orbits expanded.
/// For n = 2 this is the thirteen classical points plus their verdicts; for
/// n >= 3 the general endpoint families, and for n = 3 also the boundary
/// points N, N*1, N*3 (N is not a vertex but carries a strong-type result).
std::vector<EndpointRecord> named_endpoints(int n);

struct not_a_member : error {
    not_a_member(std::string what, Containment cert)
        : error(std::move(what)), certificate(std::move(cert)) {}
    Containment certificate;
};

/// Verdict lookup for a member point: named records first, then the segment
/// and face results known for n = 2, then interior-by-interpolation. Boundary
/// points without a recorded result come back all-unknown. Throws
/// not_a_member (with the violated facet list) on non-members.
Classification classify(const NecessaryRegion& region, const ExponentPoint& point);

}  // namespace sphavg::region

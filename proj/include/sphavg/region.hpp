#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sphavg/rational.hpp"

namespace sphavg::region {

/// A point (1/p_1,...,1/p_n ; 1/r) in reciprocal-exponent coordinates.
/// Every coordinate lies in [0,1]; 1/infinity is stored as 0.
struct ExponentPoint {
    int n = 0;
    std::vector<Rational> x;  // size n, x[j] = 1/p_{j+1}
    Rational xr;              // 1/r

    ExponentPoint() = default;
    ExponentPoint(int n, std::vector<Rational> x, Rational xr);

    bool operator==(const ExponentPoint&) const = default;
    /// Lexicographic on (x..., xr); used for canonical vertex ordering.
    bool operator<(const ExponentPoint& o) const;

    std::string str() const;  // "(a/b, c/d ; e/f)"
};

/// Convenience builder from {num,den} int pairs, e.g. pt(2, {{3,5},{3,5}}, {2,5}).
ExponentPoint pt(int n, std::vector<std::pair<long long, long long>> xs,
                 std::pair<long long, long long> xr);

enum class FacetKind { TotalMass, SingleIndex, PairIndex, BoxLower, BoxUpper };

/// One inequality a.x + c*(1/r) <= b with exact rational data.
struct LinearInequality {
    std::vector<Rational> coeff_x;
    Rational coeff_xr;
    Rational rhs;
    FacetKind kind;
    int k = 0;      // 1-based, SingleIndex and PairIndex
    int l = 0;      // 1-based, PairIndex only
    int axis = -1;  // 0-based coordinate for box facets; axis == n means 1/r

    Rational lhs(const ExponentPoint& p) const;
    Rational slack(const ExponentPoint& p) const { return rhs - lhs(p); }
    bool is_box() const { return kind == FacetKind::BoxLower || kind == FacetKind::BoxUpper; }
    std::string label(int n) const;  // "(ii) k=2", "x1 >= 0", ...
};

struct NecessaryRegion {
    int n = 0;
    std::vector<LinearInequality> inequalities;
};

/// All inequalities of the necessary region: one total-mass, n single-index,
/// n(n-1)/2 pair-index, and 2(n+1) box bounds. Rejects n < 2.
NecessaryRegion build_region(int n);

struct Containment {
    bool member = false;
    std::vector<std::size_t> tight;     // indices into region.inequalities
    std::vector<std::size_t> violated;  // ditto
    std::vector<Rational> slack;        // per inequality, rhs - lhs
};

/// Exact membership certificate. Throws dimension_mismatch on n mismatch.
Containment contains(const NecessaryRegion& region, const ExponentPoint& point);

/// Exact vertex set, canonically (lexicographically) sorted. Every (n+1)-subset
/// of facet equalities with a nonsingular normal matrix is solved and the
/// feasible solutions are kept. Rejects n > 6.
std::vector<ExponentPoint> enumerate_vertices(const NecessaryRegion& region);

/// Adjoint exponent map in slot j (1-based): swaps 1/p_j with 1 - 1/r and
/// replaces 1/r by 1 - 1/p_j. An involution on the unit cube.
ExponentPoint dual_point(const ExponentPoint& point, int j);

/// perm has size n with 1-based entries; result.x[i] = x[perm[i]-1], xr kept.
ExponentPoint permute(const ExponentPoint& point, const std::vector<int>& perm);

/// All distinct coordinate permutations of a point.
std::vector<ExponentPoint> orbit(const ExponentPoint& point);

/// Intersection of the region with the diagonal x_1 = ... = x_n, as a polygon
/// in (1/p, 1/r) coordinates, counterclockwise starting at O = (0,0).
struct DiagonalSlice {
    int n = 0;
    std::vector<std::pair<Rational, Rational>> vertices;
    std::vector<std::string> names;  // O, B, M, A, F when recognized
};
DiagonalSlice diagonal_slice(const NecessaryRegion& region);

/// Lifts a slice vertex (u, v) to the diagonal point (u,...,u ; v).
ExponentPoint lift_diagonal(int n, const Rational& u, const Rational& v);

/// Rank over the rationals of the facet normals (coeff_x..., coeff_xr).
int normal_rank(const NecessaryRegion& region, const std::vector<std::size_t>& facets);

}  // namespace sphavg::region

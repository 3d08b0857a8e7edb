#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphavg/endpoints.hpp"
#include "sphavg/region.hpp"

namespace sphavg::io {

/// Diagonal-slice figure: the (1/p, 1/r) pentagon on [0,1]^2, 1/r increasing
/// upward, vertices labeled O, B, M, A, F.
std::string slice_svg(const region::DiagonalSlice& slice);

/// Three coordinate-plane projections of the n = 2 polytope with the thirteen
/// labeled vertices, each panel on [0,1]^2 with the vertical axis flipped.
std::string region_n2_svg(const std::vector<region::EndpointRecord>& vertices);

}  // namespace sphavg::io

#pragma once

#include <complex>
#include <vector>

#include "sphavg/region.hpp"
#include "sphavg/sphere.hpp"
#include "sphavg/testfunction.hpp"

namespace sphavg::op {

using funcs::TestFunction;
using sphere::SphereGrid;
using sphere::TruncationMask;
using sphere::VectorFamily;

/// Uniform 1D grid with left-endpoint nodes xmin + m*dx covering [xmin, xmax).
struct XGrid {
    double xmin;
    double xmax;
    double dx;
    long count() const;
    double node(long m) const { return xmin + static_cast<double>(m) * dx; }
};

/// T(f_1,...,f_n)(x): quadrature of the product f_j(x - sigma_j) over the
/// grid. Nodes hitting a PowerLog center exactly are skipped (measure zero).
double eval_T(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid);

/// Generalized average with arguments x - v_j . sigma; the standard basis
/// reproduces eval_T with bitwise-equal summands.
double eval_T_v(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid,
                const VectorFamily& v);

/// Truncated average over {|v_j . sigma| > eps}; always <= eval_T_v.
double eval_U(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid,
              const VectorFamily& v, const TruncationMask& mask);

/// eval_T_v at every node of xs (one grid pass; nodes are pre-filtered by the
/// narrowest function support, so concentrated families sweep cheaply).
std::vector<double> eval_T_v_sweep(const std::vector<TestFunction>& fs,
                                   const std::vector<double>& xs, const SphereGrid& grid,
                                   const VectorFamily& v);

/// dx * sum_m T_v(fs)(x_m) h(x_m). All supports must lie in [xmin+2, xmax-2].
double pairing(const std::vector<TestFunction>& fs, const TestFunction& h, const SphereGrid& grid,
               const VectorFamily& v, const XGrid& xgrid);

/// (discrete L^r norm of x -> T(fs)(x) over xgrid) / prod_j ||f_j||_{p_j},
/// reading the exponents off `point` (coordinate 0 means an infinite exponent,
/// handled with the sup norm / grid max). Throws when a denominator factor is
/// zero or infinite.
double norm_ratio(const std::vector<TestFunction>& fs, const region::ExponentPoint& point,
                  const SphereGrid& grid, const XGrid& xgrid);

struct FourierSample {
    std::complex<double> value;
    bool resolution_warning = false;  // |xi| > resolution / 8
};

/// Fourier transform of the normalized surface measure at frequency xi.
FourierSample sphere_fourier(const std::vector<double>& xi, const SphereGrid& grid);

}  // namespace sphavg::op

#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "sphavg/errors.hpp"

namespace sphavg::sphere {

/// n linearly independent row vectors in R^n defining the generalized average.
struct VectorFamily {
    int n = 0;
    std::vector<std::vector<double>> rows;

    static VectorFamily standard(int n);
    /// |det| of the matrix with rows scaled to unit length.
    double normalized_det() const;
    bool independent() const { return normalized_det() > 1e-10; }
    void require_independent() const;
};

/// Vector family realizing the j-th adjoint (1-based): w_j = -v_j and
/// w_i = v_i - v_j, so that pairing T against h in slot j transposes exactly.
VectorFamily adjoint_family(const VectorFamily& v, int j);

struct TruncationMask {
    int j = 0;    // 1-based slot
    double eps;   // in (0, 1)
};

/// Quadrature nodes and weights on S^(n-1) with total mass 1. Nodes are
/// generated on the fly (memory stays O(n * resolution) even for huge grids):
///   n = 2: midpoint angles theta_k = 2pi(k+1/2)/N, equal weights 1/N;
///   n >= 3: the polar slicing sigma = (sin(phi) eta, sgn(phi) cos(phi)) with
///   eta on S^(n-2), midpoint phi grid on (-pi/2, pi/2) weighted by
///   |sin(phi)|^(n-2) and normalized per level, then symmetrized over all n!
///   coordinate relabelings (weight w/n! each) so permuting the inputs is an
///   exact relabeling of the node set rather than a quadrature perturbation.
/// Midpoint offsets keep nodes off the poles, the coordinate axes, and phi = 0.
class SphereGrid {
  public:
    /// resolution is rounded up to the next even value; n in [2,5], resolution >= 8.
    static SphereGrid build(int n, long resolution);

    int dim() const { return n_; }
    long resolution() const { return res_; }
    long size() const;

    /// fn(const double* node /* n doubles */, double weight), every node once,
    /// in a fixed deterministic order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        if (n_ == 2) {
            double node[8];
            circle(1.0, 1.0, node, fn);
            return;
        }
        const double wperm = 1.0 / static_cast<double>(perms_.size());
        double node[8];
        double image[8];
        visit(static_cast<int>(levels_.size()) - 1, 1.0, wperm, node, [&](const double* base,
                                                                          double w) {
            for (const auto& perm : perms_) {
                for (int i = 0; i < n_; ++i) image[i] = base[perm[i]];
                fn(static_cast<const double*>(image), w);
            }
        });
    }

  private:
    struct Level {
        std::vector<double> s;  // sin(phi_i), signed
        std::vector<double> c;  // sgn(phi_i) cos(phi_i)
        std::vector<double> w;  // normalized |sin(phi_i)|^(d-2) weights
    };

    template <class Fn>
    void visit(int level, double scale, double wacc, double* node, Fn&& fn) const {
        if (level < 0) {
            circle(scale, wacc, node, fn);
            return;
        }
        const Level& L = levels_[level];
        const int d = level + 3;  // this level fills coordinate d-1
        for (long i = 0; i < res_; ++i) {
            node[d - 1] = scale * L.c[i];
            visit(level - 1, scale * L.s[i], wacc * L.w[i], node, fn);
        }
    }

    /// Base circle sweep; incremental rotation re-anchored every block so the
    /// accumulated drift stays below ~1e-13.
    template <class Fn>
    void circle(double scale, double wacc, double* node, Fn&& fn) const {
        const double two_pi = 2.0 * M_PI;
        const double dtheta = two_pi / static_cast<double>(res_);
        const double rc = std::cos(dtheta), rs = std::sin(dtheta);
        const double w = wacc / static_cast<double>(res_);
        constexpr long kBlock = 4096;
        for (long k0 = 0; k0 < res_; k0 += kBlock) {
            const double theta0 = two_pi * (static_cast<double>(k0) + 0.5) /
                                  static_cast<double>(res_);
            double c = std::cos(theta0), s = std::sin(theta0);
            const long kend = std::min(res_, k0 + kBlock);
            for (long k = k0; k < kend; ++k) {
                node[0] = scale * c;
                node[1] = scale * s;
                fn(static_cast<const double*>(node), w);
                const double cn = c * rc - s * rs;
                s = c * rs + s * rc;
                c = cn;
            }
        }
    }

    int n_ = 2;
    long res_ = 0;
    std::vector<Level> levels_;             // levels_[k] belongs to dimension k+3
    std::vector<std::array<int, 8>> perms_;  // coordinate relabelings, n >= 3
};

}  // namespace sphavg::sphere

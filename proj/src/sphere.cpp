#include "sphavg/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace sphavg::sphere {

VectorFamily VectorFamily::standard(int n) {
    VectorFamily v;
    v.n = n;
    v.rows.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v.rows[i][i] = 1.0;
    return v;
}

double VectorFamily::normalized_det() const {
    std::vector<std::vector<double>> m = rows;
    for (auto& row : m) {
        double norm = 0;
        for (double x : row) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0) return 0.0;
        for (double& x : row) x /= norm;
    }
    double det = 1.0;
    const int d = n;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < d; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int j = col; j < d; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return std::abs(det);
}

void VectorFamily::require_independent() const {
    if (static_cast<int>(rows.size()) != n)
        throw dimension_mismatch("VectorFamily: expected n row vectors");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw dimension_mismatch("VectorFamily: row length mismatch");
    if (!independent()) throw error("VectorFamily: rows are not linearly independent");
}

VectorFamily adjoint_family(const VectorFamily& v, int j) {
    if (j < 1 || j > v.n) throw error("adjoint_family: slot out of range");
    VectorFamily w = v;
    const auto& vj = v.rows[j - 1];
    for (int i = 0; i < v.n; ++i) {
        if (i == j - 1) {
            for (int c = 0; c < v.n; ++c) w.rows[i][c] = -vj[c];
        } else {
            for (int c = 0; c < v.n; ++c) w.rows[i][c] = v.rows[i][c] - vj[c];
        }
    }
    return w;
}

long SphereGrid::size() const {
    long total = res_;
    for (std::size_t i = 0; i < levels_.size(); ++i) total *= res_;
    if (!perms_.empty()) total *= static_cast<long>(perms_.size());
    return total;
}

SphereGrid SphereGrid::build(int n, long resolution) {
    if (n < 2) throw error("SphereGrid: n must be >= 2");
    if (n > 5) throw error("SphereGrid: n > 5 exceeds the node-count guard");
    if (resolution < 8) throw error("SphereGrid: resolution must be >= 8");
    if (resolution % 2) ++resolution;  // keeps phi = 0 and the poles off the grid

    SphereGrid g;
    g.n_ = n;
    g.res_ = resolution;
    double total_nodes = 1.0;
    for (int d = 2; d <= n; ++d) total_nodes *= static_cast<double>(resolution);
    if (n >= 3) {
        std::array<int, 8> perm{};
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            g.perms_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
        total_nodes *= static_cast<double>(g.perms_.size());
    }
    if (total_nodes > 1.8e10) throw resolution_error("SphereGrid: node count exceeds 1.8e10");

    for (int d = 3; d <= n; ++d) {
        Level lvl;
        lvl.s.resize(resolution);
        lvl.c.resize(resolution);
        lvl.w.resize(resolution);
        double wsum = 0;
        for (long i = 0; i < resolution; ++i) {
            const double phi = -M_PI_2 + M_PI * (static_cast<double>(i) + 0.5) /
                                             static_cast<double>(resolution);
            lvl.s[i] = std::sin(phi);
            lvl.c[i] = (phi < 0 ? -1.0 : 1.0) * std::cos(phi);
            lvl.w[i] = std::pow(std::abs(lvl.s[i]), d - 2);
            wsum += lvl.w[i];
        }
        for (long i = 0; i < resolution; ++i) lvl.w[i] /= wsum;
        g.levels_.push_back(std::move(lvl));
    }
    return g;
}

}  // namespace sphavg::sphere

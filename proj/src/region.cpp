#include "sphavg/region.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "sphavg/errors.hpp"

namespace sphavg::region {

ExponentPoint::ExponentPoint(int n_, std::vector<Rational> x_, Rational xr_)
    : n(n_), x(std::move(x_)), xr(std::move(xr_)) {
    if (n < 1) throw error("ExponentPoint: n must be >= 1");
    if (static_cast<int>(x.size()) != n)
        throw dimension_mismatch("ExponentPoint: coordinate count does not match n");
    for (const auto& c : x)
        if (c < 0 || c > 1) throw error("ExponentPoint: coordinate outside [0,1]");
    if (xr < 0 || xr > 1) throw error("ExponentPoint: 1/r outside [0,1]");
}

bool ExponentPoint::operator<(const ExponentPoint& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; ++i)
        if (x[i] != o.x[i]) return x[i] < o.x[i];
    return xr < o.xr;
}

std::string ExponentPoint::str() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ", ";
        s += rational_string(x[i]);
    }
    s += " ; " + rational_string(xr) + ")";
    return s;
}

ExponentPoint pt(int n, std::vector<std::pair<long long, long long>> xs,
                 std::pair<long long, long long> xr) {
    std::vector<Rational> x;
    x.reserve(xs.size());
    for (auto& [a, b] : xs) x.emplace_back(a, b);
    return ExponentPoint(n, std::move(x), Rational(xr.first, xr.second));
}

Rational LinearInequality::lhs(const ExponentPoint& p) const {
    Rational acc = coeff_xr * p.xr;
    for (std::size_t i = 0; i < coeff_x.size(); ++i) acc += coeff_x[i] * p.x[i];
    return acc;
}

std::string LinearInequality::label(int n) const {
    auto coord = [&](int a) { return a == n ? std::string("1/r") : "x" + std::to_string(a + 1); };
    switch (kind) {
        case FacetKind::TotalMass: return "(i)";
        case FacetKind::SingleIndex: return "(ii) k=" + std::to_string(k);
        case FacetKind::PairIndex:
            return "(iii) k=" + std::to_string(k) + ",l=" + std::to_string(l);
        case FacetKind::BoxLower: return coord(axis) + " >= 0";
        case FacetKind::BoxUpper: return coord(axis) + " <= 1";
    }
    return "?";
}

NecessaryRegion build_region(int n) {
    if (n < 2) throw error("build_region: n must be >= 2");
    NecessaryRegion r;
    r.n = n;
    auto zeros = [&] { return std::vector<Rational>(n, Rational(0)); };

    {  // (i)  1/r <= sum_j x_j   <=>  -sum x_j + xr <= 0
        LinearInequality q;
        q.coeff_x = std::vector<Rational>(n, Rational(-1));
        q.coeff_xr = 1;
        q.rhs = 0;
        q.kind = FacetKind::TotalMass;
        r.inequalities.push_back(std::move(q));
    }
    for (int k = 1; k <= n; ++k) {  // (ii)  sum_{j!=k} x_j + 2 x_k - 2 xr <= n-1
        LinearInequality q;
        q.coeff_x = std::vector<Rational>(n, Rational(1));
        q.coeff_x[k - 1] = 2;
        q.coeff_xr = -2;
        q.rhs = n - 1;
        q.kind = FacetKind::SingleIndex;
        q.k = k;
        r.inequalities.push_back(std::move(q));
    }
    for (int k = 1; k <= n; ++k)  // (iii)  sum_{j!=k,l} x_j + 2 x_k + 2 x_l - xr <= n
        for (int l = k + 1; l <= n; ++l) {
            LinearInequality q;
            q.coeff_x = std::vector<Rational>(n, Rational(1));
            q.coeff_x[k - 1] = 2;
            q.coeff_x[l - 1] = 2;
            q.coeff_xr = -1;
            q.rhs = n;
            q.kind = FacetKind::PairIndex;
            q.k = k;
            q.l = l;
            r.inequalities.push_back(std::move(q));
        }
    for (int a = 0; a <= n; ++a) {  // box bounds on every coordinate
        LinearInequality lo;
        lo.coeff_x = zeros();
        lo.coeff_xr = 0;
        if (a == n)
            lo.coeff_xr = -1;
        else
            lo.coeff_x[a] = -1;
        lo.rhs = 0;
        lo.kind = FacetKind::BoxLower;
        lo.axis = a;
        r.inequalities.push_back(std::move(lo));

        LinearInequality hi;
        hi.coeff_x = zeros();
        hi.coeff_xr = 0;
        if (a == n)
            hi.coeff_xr = 1;
        else
            hi.coeff_x[a] = 1;
        hi.rhs = 1;
        hi.kind = FacetKind::BoxUpper;
        hi.axis = a;
        r.inequalities.push_back(std::move(hi));
    }
    return r;
}

Containment contains(const NecessaryRegion& region, const ExponentPoint& point) {
    if (point.n != region.n)
        throw dimension_mismatch("contains: point dimension " + std::to_string(point.n) +
                                 " vs region dimension " + std::to_string(region.n));
    Containment c;
    c.member = true;
    c.slack.reserve(region.inequalities.size());
    for (std::size_t i = 0; i < region.inequalities.size(); ++i) {
        Rational s = region.inequalities[i].slack(point);
        if (s == 0)
            c.tight.push_back(i);
        else if (s < 0) {
            c.violated.push_back(i);
            c.member = false;
        }
        c.slack.push_back(std::move(s));
    }
    return c;
}

namespace {

/// Solves M y = b exactly by Gauss elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> M,
                                                  std::vector<Rational> b) {
    const std::size_t d = M.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && M[piv][col] == 0) ++piv;
        if (piv == d) return std::nullopt;
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = Rational(1) / M[col][col];
        for (std::size_t j = col; j < d; ++j) M[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < d; ++row) {
            if (row == col || M[row][col] == 0) continue;
            const Rational f = M[row][col];
            for (std::size_t j = col; j < d; ++j) M[row][j] -= f * M[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

std::vector<Rational> normal_row(const LinearInequality& q) {
    std::vector<Rational> row = q.coeff_x;
    row.push_back(q.coeff_xr);
    return row;
}

bool feasible(const NecessaryRegion& region, const std::vector<Rational>& y) {
    const int n = region.n;
    for (const auto& q : region.inequalities) {
        Rational acc = q.coeff_xr * y[n];
        for (int i = 0; i < n; ++i) acc += q.coeff_x[i] * y[i];
        if (acc > q.rhs) return false;
    }
    return true;
}

}  // namespace

std::vector<ExponentPoint> enumerate_vertices(const NecessaryRegion& region) {
    const int n = region.n;
    if (n > 6) throw error("enumerate_vertices: n > 6 exceeds the combinatorial guard");
    const int d = n + 1;
    const std::size_t f = region.inequalities.size();

    std::set<ExponentPoint> found;
    std::vector<std::size_t> idx(d);
    // iterate over all d-subsets of facets
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> b;
        M.reserve(d);
        b.reserve(d);
        for (int i = 0; i < d; ++i) {
            M.push_back(normal_row(region.inequalities[idx[i]]));
            b.push_back(region.inequalities[idx[i]].rhs);
        }
        if (auto y = solve_square(std::move(M), std::move(b)); y && feasible(region, *y)) {
            std::vector<Rational> x(y->begin(), y->begin() + n);
            found.insert(ExponentPoint(n, std::move(x), (*y)[n]));
        }
        // next subset
        int i = d - 1;
        while (i >= 0 && idx[i] == f - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

ExponentPoint dual_point(const ExponentPoint& point, int j) {
    if (j < 1 || j > point.n) throw error("dual_point: slot out of range");
    ExponentPoint q = point;
    q.x[j - 1] = Rational(1) - point.xr;
    q.xr = Rational(1) - point.x[j - 1];
    return q;
}

ExponentPoint permute(const ExponentPoint& point, const std::vector<int>& perm) {
    const int n = point.n;
    if (static_cast<int>(perm.size()) != n) throw error("permute: permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v - 1]) throw error("permute: not a bijection on {1..n}");
        seen[v - 1] = true;
    }
    ExponentPoint q = point;
    for (int i = 0; i < n; ++i) q.x[i] = point.x[perm[i] - 1];
    return q;
}

std::vector<ExponentPoint> orbit(const ExponentPoint& point) {
    std::vector<int> perm(point.n);
    for (int i = 0; i < point.n; ++i) perm[i] = i + 1;
    std::set<ExponentPoint> out;
    do {
        out.insert(permute(point, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {out.begin(), out.end()};
}

ExponentPoint lift_diagonal(int n, const Rational& u, const Rational& v) {
    return ExponentPoint(n, std::vector<Rational>(n, u), v);
}

DiagonalSlice diagonal_slice(const NecessaryRegion& region) {
    const int n = region.n;
    // Substituting x_j = u collapses the inequalities to rows (cu, cv | rhs).
    struct Row {
        Rational cu, cv, rhs;
    };
    std::vector<Row> rows;
    for (const auto& q : region.inequalities) {
        Rational cu = 0;
        for (const auto& c : q.coeff_x) cu += c;
        Row row{cu, q.coeff_xr, q.rhs};
        bool dup = false;
        for (const auto& r : rows)
            if (r.cu == row.cu && r.cv == row.cv && r.rhs == row.rhs) {
                dup = true;
                break;
            }
        if (!dup) rows.push_back(std::move(row));
    }

    auto feasible2 = [&](const Rational& u, const Rational& v) {
        for (const auto& r : rows)
            if (r.cu * u + r.cv * v > r.rhs) return false;
        return true;
    };

    std::set<std::pair<Rational, Rational>> verts;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Rational det = rows[i].cu * rows[j].cv - rows[j].cu * rows[i].cv;
            if (det == 0) continue;
            Rational u = (rows[i].rhs * rows[j].cv - rows[j].rhs * rows[i].cv) / det;
            Rational v = (rows[i].cu * rows[j].rhs - rows[j].cu * rows[i].rhs) / det;
            if (feasible2(u, v)) verts.insert({std::move(u), std::move(v)});
        }

    // counterclockwise order around the centroid, rotated to start at O
    std::vector<std::pair<Rational, Rational>> vs(verts.begin(), verts.end());
    Rational cu = 0, cv = 0;
    for (auto& [u, v] : vs) {
        cu += u;
        cv += v;
    }
    const auto m = static_cast<long long>(vs.size());
    cu /= m;
    cv /= m;
    auto half = [&](const std::pair<Rational, Rational>& p) {
        // 0 for the lower half-plane sweep start (angle in (-pi, 0] U {0+}), 1 above
        Rational dy = p.second - cv;
        Rational dx = p.first - cu;
        if (dy != 0) return dy > 0 ? 1 : 0;
        return dx > 0 ? 1 : 0;  // on the horizontal: right comes between halves
    };
    std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cross = (a.first - cu) * (b.second - cv) - (b.first - cu) * (a.second - cv);
        return cross > 0;
    });
    auto o = std::find(vs.begin(), vs.end(), std::pair<Rational, Rational>{Rational(0), Rational(0)});
    if (o != vs.end()) std::rotate(vs.begin(), o, vs.end());

    DiagonalSlice slice;
    slice.n = n;
    slice.vertices = vs;
    const Rational B_u(n - 1, n + 1), M_u(n + 1, n + 3), M_v(2, n + 3), A_u(n + 1, n + 2),
        F_u(1, n);
    for (auto& [u, v] : slice.vertices) {
        std::string name;
        if (u == 0 && v == 0)
            name = "O";
        else if (u == B_u && v == 0)
            name = "B";
        else if (u == M_u && v == M_v)
            name = "M";
        else if (u == A_u && v == 1)
            name = "A";
        else if (u == F_u && v == 1)
            name = "F";
        slice.names.push_back(name);
    }
    return slice;
}

int normal_rank(const NecessaryRegion& region, const std::vector<std::size_t>& facets) {
    std::vector<std::vector<Rational>> M;
    for (auto i : facets) M.push_back(normal_row(region.inequalities[i]));
    const std::size_t cols = region.n + 1;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
        std::size_t piv = row;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[row]);
        for (std::size_t r2 = 0; r2 < M.size(); ++r2) {
            if (r2 == row || M[r2][col] == 0) continue;
            const Rational f = M[r2][col] / M[row][col];
            for (std::size_t j = col; j < cols; ++j) M[r2][j] -= f * M[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace sphavg::region

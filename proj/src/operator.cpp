#include "sphavg/operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sphavg/norms.hpp"

namespace sphavg::op {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_args(const std::vector<TestFunction>& fs, const SphereGrid& grid) {
    if (static_cast<int>(fs.size()) != grid.dim())
        throw dimension_mismatch("operator: expected " + std::to_string(grid.dim()) +
                                 " functions, got " + std::to_string(fs.size()));
}

inline double dot(const std::vector<double>& row, const double* node) {
    double acc = 0;
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * node[i];
    return acc;
}

/// Product of f_j(x - t_j); 0 when any factor vanishes, NaN flags an exact
/// PowerLog-center hit (the node is then skipped).
inline double product_at(const std::vector<TestFunction>& fs, const double* t, double x) {
    double prod = 1.0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const double val = funcs::evaluate(fs[j], x - t[j]);
        if (val == 0.0) return 0.0;
        if (std::isinf(val)) return std::numeric_limits<double>::quiet_NaN();
        prod *= val;
    }
    return prod;
}

}  // namespace

long XGrid::count() const {
    if (!(dx > 0) || !(xmax > xmin)) throw error("XGrid: requires xmax > xmin and dx > 0");
    return static_cast<long>(std::floor((xmax - xmin) / dx + 1e-9));
}

double eval_T(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid) {
    check_args(fs, grid);
    double acc = 0;
    grid.for_each([&](const double* node, double w) {
        const double p = product_at(fs, node, x);
        if (!std::isnan(p)) acc += w * p;
    });
    return acc;
}

double eval_T_v(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid,
                const VectorFamily& v) {
    check_args(fs, grid);
    if (v.n != grid.dim()) throw dimension_mismatch("eval_T_v: vector family dimension mismatch");
    v.require_independent();
    const int n = grid.dim();
    double acc = 0;
    double t[8];
    grid.for_each([&](const double* node, double w) {
        for (int j = 0; j < n; ++j) t[j] = dot(v.rows[j], node);
        const double p = product_at(fs, t, x);
        if (!std::isnan(p)) acc += w * p;
    });
    return acc;
}

double eval_U(const std::vector<TestFunction>& fs, double x, const SphereGrid& grid,
              const VectorFamily& v, const TruncationMask& mask) {
    check_args(fs, grid);
    v.require_independent();
    if (mask.j < 1 || mask.j > grid.dim()) throw error("eval_U: mask slot out of range");
    if (!(mask.eps > 0 && mask.eps < 1)) throw error("eval_U: eps must be in (0,1)");
    const int n = grid.dim();
    double acc = 0;
    double t[8];
    grid.for_each([&](const double* node, double w) {
        for (int j = 0; j < n; ++j) t[j] = dot(v.rows[j], node);
        if (std::abs(t[mask.j - 1]) <= mask.eps) return;
        const double p = product_at(fs, t, x);
        if (!std::isnan(p)) acc += w * p;
    });
    return acc;
}

std::vector<double> eval_T_v_sweep(const std::vector<TestFunction>& fs,
                                   const std::vector<double>& xs, const SphereGrid& grid,
                                   const VectorFamily& v) {
    check_args(fs, grid);
    v.require_independent();
    const int n = grid.dim();

    // narrowest-support function gates which x can see a given node
    int filter = -1;
    double best = kInf;
    std::vector<funcs::Interval> sup;
    for (int j = 0; j < n; ++j) {
        sup.push_back(funcs::support_bounds(fs[j]));
        const double len = sup[j].hi - sup[j].lo;
        if (std::isfinite(len) && len < best) {
            best = len;
            filter = j;
        }
    }

    std::vector<double> out(xs.size(), 0.0);
    double t[8];
    grid.for_each([&](const double* node, double w) {
        for (int j = 0; j < n; ++j) t[j] = dot(v.rows[j], node);
        std::size_t m0 = 0, m1 = xs.size();
        if (filter >= 0) {
            const double xlo = t[filter] + sup[filter].lo;
            const double xhi = t[filter] + sup[filter].hi;
            m0 = std::lower_bound(xs.begin(), xs.end(), xlo) - xs.begin();
            m1 = std::upper_bound(xs.begin(), xs.end(), xhi) - xs.begin();
        }
        for (std::size_t m = m0; m < m1; ++m) {
            const double p = product_at(fs, t, xs[m]);
            if (!std::isnan(p)) out[m] += w * p;
        }
    });
    return out;
}

double pairing(const std::vector<TestFunction>& fs, const TestFunction& h, const SphereGrid& grid,
               const VectorFamily& v, const XGrid& xgrid) {
    auto in_window = [&](const TestFunction& f) {
        const auto sb = funcs::support_bounds(f);
        if (sb.lo > sb.hi) return true;  // zero function
        return sb.lo >= xgrid.xmin + 2.0 && sb.hi <= xgrid.xmax - 2.0;
    };
    for (const auto& f : fs)
        if (!in_window(f)) throw error("pairing: a function support escapes the window");
    if (!in_window(h)) throw error("pairing: the pairing function support escapes the window");

    const long m = xgrid.count();
    std::vector<double> xs(m);
    for (long i = 0; i < m; ++i) xs[i] = xgrid.node(i);
    const auto sweep = eval_T_v_sweep(fs, xs, grid, v);
    double acc = 0;
    for (long i = 0; i < m; ++i) acc += sweep[i] * funcs::evaluate(h, xs[i]);
    return acc * xgrid.dx;
}

double norm_ratio(const std::vector<TestFunction>& fs, const region::ExponentPoint& point,
                  const SphereGrid& grid, const XGrid& xgrid) {
    check_args(fs, grid);
    if (point.n != grid.dim()) throw dimension_mismatch("norm_ratio: point dimension mismatch");

    double denom = 1.0;
    for (int j = 0; j < point.n; ++j) {
        const double p = point.x[j] == 0 ? kInf : to_double(Rational(1) / point.x[j]);
        const auto nv = funcs::lp_norm(fs[j], p);
        if (!nv.finite() || nv.value <= 0.0)
            throw error("norm_ratio: ||f_" + std::to_string(j + 1) +
                        "||_p is zero or infinite at this exponent");
        denom *= nv.value;
    }

    const long m = xgrid.count();
    std::vector<double> xs(m);
    for (long i = 0; i < m; ++i) xs[i] = xgrid.node(i);
    const auto sweep = eval_T_v_sweep(fs, xs, grid, sphere::VectorFamily::standard(point.n));

    double num;
    if (point.xr == 0) {
        num = *std::max_element(sweep.begin(), sweep.end());
    } else {
        const double r = to_double(Rational(1) / point.xr);
        double acc = 0;
        for (double vval : sweep) acc += std::pow(vval, r);
        num = std::pow(xgrid.dx * acc, 1.0 / r);
    }
    return num / denom;
}

FourierSample sphere_fourier(const std::vector<double>& xi, const SphereGrid& grid) {
    if (static_cast<int>(xi.size()) != grid.dim())
        throw dimension_mismatch("sphere_fourier: frequency dimension mismatch");
    const int n = grid.dim();
    double re = 0, im = 0;
    grid.for_each([&](const double* node, double w) {
        double phase = 0;
        for (int i = 0; i < n; ++i) phase += xi[i] * node[i];
        phase *= -2.0 * M_PI;
        re += w * std::cos(phase);
        im += w * std::sin(phase);
    });
    double norm = 0;
    for (double c : xi) norm += c * c;
    FourierSample s;
    s.value = {re, im};
    s.resolution_warning = std::sqrt(norm) > static_cast<double>(grid.resolution()) / 8.0;
    return s;
}

}  // namespace sphavg::op

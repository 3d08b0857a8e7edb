#include "sphavg/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sphavg::funcs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-8;
constexpr double kDivergenceCap = 1e12;  // every genuinely finite norm here is O(10)
constexpr long kMaxIntervals = 1'000'000;
constexpr double kBoundaryTol = 1e-13;  // ap == 1 and kappa == 0 detection

struct Quad {
    double value = 0;
    double error = 0;
    bool diverged = false;
};

/// Adaptive Simpson with a divergence cap. The integrand must be finite on [a,b].
template <class F>
Quad adaptive_simpson(F&& f, double a, double b, double abs_tol) {
    struct Seg {
        double a, b, fa, fm, fb, s;
        int depth;
    };
    auto simpson = [](double a, double b, double fa, double fm, double fb) {
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    };
    Quad out;
    if (!(a < b)) return out;
    const double m0 = 0.5 * (a + b);
    double fa = f(a), fm = f(m0), fb = f(b);
    std::vector<Seg> stack{{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 0}};
    long used = 0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double m = 0.5 * (s.a + s.b);
        const double lm = 0.5 * (s.a + m), rm = 0.5 * (m + s.b);
        const double flm = f(lm), frm = f(rm);
        const double sl = simpson(s.a, m, s.fa, flm, s.fm);
        const double sr = simpson(m, s.b, s.fm, frm, s.fb);
        const double diff = sl + sr - s.s;
        ++used;
        if (std::abs(diff) <= 15.0 * abs_tol * (s.b - s.a) / (b - a) || s.depth >= 48 ||
            used >= kMaxIntervals) {
            out.value += sl + sr + diff / 15.0;
            out.error += std::abs(diff) / 15.0;
            if (out.value > kDivergenceCap) {
                out.diverged = true;
                return out;
            }
        } else {
            stack.push_back({s.a, m, s.fa, flm, s.fm, sl, s.depth + 1});
            stack.push_back({m, s.b, s.fm, frm, s.fb, sr, s.depth + 1});
        }
    }
    return out;
}

/// Integral with relative tolerance: one coarse pass fixes the scale.
template <class F>
Quad integrate(F&& f, double a, double b) {
    Quad coarse = adaptive_simpson(f, a, b, kInf);
    const double scale = std::max(std::abs(coarse.value), 1e-300);
    return adaptive_simpson(f, a, b, kRelTol * scale);
}

/// Integral over (0, hi] of an integrand integrable at 0, by dyadic blocks.
template <class F>
Quad integrate_to_zero(F&& f, double hi) {
    Quad acc;
    double right = hi;
    for (int block = 0; block < 400; ++block) {
        const double left = right * 0.5;
        Quad q = integrate(f, left, right);
        acc.value += q.value;
        acc.error += q.error;
        if (acc.value > kDivergenceCap) {
            acc.diverged = true;
            return acc;
        }
        if (block > 6 && q.value <= kRelTol * std::max(acc.value, 1e-300)) break;
        right = left;
    }
    return acc;
}

NormValue analytic(double v) { return {v, NormValue::Method::Analytic, 0.0}; }
NormValue divergent() { return {kInf, NormValue::Method::Analytic, 0.0}; }
NormValue numeric(double v, double err) { return {v, NormValue::Method::Numeric, err}; }

// ---------------------------------------------------------------------------
// PowerLog profile: g(s) = s^{-a} (-log s)^{-b} on (0, rho], the distance
// profile of the function about its center. For a > 0 it decreases on
// (0, s_dip] and increases on [s_dip, rho] where s_dip = min(e^{-b/a}, rho);
// for a = 0, b > 0 it is increasing.
// ---------------------------------------------------------------------------
struct PLProfile {
    double a, b, rho;
    double s_dip;     // end of the decreasing branch (== rho when monotone)
    double lam_rho;   // g(rho)
    double lam_dip;   // g(s_dip)
    bool has_dip;     // s_dip < rho
    double s_edge;    // left-branch root at level lam_rho (== rho when monotone)

    explicit PLProfile(const PowerLog& f) : a(f.power), b(f.logpow), rho(f.radius) {
        s_dip = rho;
        if (a > 0 && b > 0) s_dip = std::min(std::exp(-b / a), rho);
        lam_rho = g(rho);
        lam_dip = g(s_dip);
        has_dip = s_dip < rho;
        s_edge = has_dip ? left_root(lam_rho) : rho;
    }

    double g(double s) const { return std::pow(s, -a) * std::pow(-std::log(s), -b); }

    // root of g = lam on the decreasing branch (0, s_dip]; needs lam >= lam_dip
    double left_root(double lam) const {
        double hi = s_dip;
        double lo = s_dip;
        while (g(lo) < lam) {
            lo *= 0.5;
            if (lo < 1e-300) return 0.0;
        }
        for (int i = 0; i < 200 && hi - lo > 0; ++i) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) >= lam ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    // root of g = lam on the increasing branch [s_dip, rho]; lam in [lam_dip, lam_rho]
    double right_root(double lam) const {
        double lo = s_dip, hi = rho;
        for (int i = 0; i < 200 && hi - lo > 0; ++i) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) <= lam ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    // distribution function m(lam) = |{|f| > lam}|
    double dist(double lam) const {
        if (a == 0) {  // increasing profile only
            if (b == 0) return lam < 1.0 ? 2.0 * rho : 0.0;
            if (lam >= lam_rho) return 0.0;
            const double s2 = std::exp(-std::pow(lam, -1.0 / b));
            return 2.0 * (rho - s2);
        }
        if (lam >= lam_rho) return 2.0 * left_root(lam);
        if (!has_dip || lam <= lam_dip) return 2.0 * rho;
        return 2.0 * (left_root(lam) + rho - right_root(lam));
    }

    double t_cross() const { return 2.0 * s_edge; }  // f*(t) = g(t/2) for t < t_cross

    double f_star(double t) const {
        if (t >= 2.0 * rho) return 0.0;
        if (a == 0) {
            if (b == 0) return 1.0;
            return g(rho - 0.5 * t);  // exact inverse of the increasing branch
        }
        if (t < t_cross()) return g(0.5 * t);
        // invert m on [lam_dip, lam_rho]
        double lo = lam_dip, hi = lam_rho;
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            (dist(mid) > t ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
};

// int_{u_lo}^{inf} e^{-kappa u} u^{-beta} du, kappa > 0, u_lo > 0, by adaptive
// quadrature on a truncated window plus an explicit tail bound.
Quad exp_power_tail_integral(double kappa, double beta, double u_lo) {
    const double window = std::max(60.0 / kappa, 10.0);
    Quad q = integrate([&](double u) { return std::exp(-kappa * u) * std::pow(u, -beta); }, u_lo,
                       u_lo + window);
    // tail bound, valid since u^{-beta} is nonincreasing for beta >= 0
    const double u_hi = u_lo + window;
    q.error += std::exp(-kappa * u_hi) * std::pow(u_hi, -beta) / kappa;
    return q;
}

NormValue lp_norm_powerlog(const PowerLog& f, double p) {
    const PLProfile pr(f);
    if (std::isinf(p)) {
        if (f.power > 0) return divergent();
        if (f.logpow > 0) return analytic(pr.lam_rho);
        return analytic(1.0);
    }
    const double ap = f.power * p, bp = f.logpow * p;
    const double u0 = -std::log(f.radius);
    if (ap > 1.0 + kBoundaryTol) return divergent();
    if (std::abs(ap - 1.0) <= kBoundaryTol) {
        if (bp <= 1.0 + kBoundaryTol) return divergent();
        return analytic(std::pow(2.0 * std::pow(u0, 1.0 - bp) / (bp - 1.0), 1.0 / p));
    }
    const double kappa = 1.0 - ap;
    Quad q = exp_power_tail_integral(kappa, bp, u0);
    if (q.diverged) return divergent();
    const double value = std::pow(2.0 * q.value, 1.0 / p);
    const double rel = q.value > 0 ? q.error / q.value : 0.0;
    return numeric(value, value * rel / p);
}

NormValue lorentz_powerlog(const PowerLog& f, double p, double q) {
    const PLProfile pr(f);
    if (f.power == 0 && f.logpow == 0)
        return std::isinf(q) ? analytic(std::pow(2.0 * f.radius, 1.0 / p))
                             : analytic(std::pow(p / q, 1.0 / q) * std::pow(2.0 * f.radius, 1.0 / p));

    if (std::isinf(q)) {  // weak quasi-norm: sup over lam of lam * m(lam)^{1/p}
        if (1.0 / p < f.power - kBoundaryTol) return divergent();
        double best = pr.lam_rho * std::pow(pr.dist(pr.lam_rho), 1.0 / p);
        const double lam_lo = std::max(pr.lam_dip * 1e-4, 1e-12);
        const int samples = 4096;
        for (int i = 0; i <= samples; ++i) {
            const double lam =
                lam_lo * std::pow(pr.lam_rho / lam_lo, static_cast<double>(i) / samples);
            best = std::max(best, lam * std::pow(pr.dist(lam), 1.0 / p));
        }
        return numeric(best, best * 1e-6);
    }

    // small-t branch via u = log(2/t):  2^{q/p} int e^{-kappa u} u^{-bq} du
    const double bq = f.logpow * q;
    double part1 = 0, err1 = 0;
    bool part1_analytic = true;
    if (f.power > 0) {
        const double kappa = q * (1.0 / p - f.power);
        const double u_edge = -std::log(pr.s_edge);
        if (kappa < -kBoundaryTol) return divergent();
        if (std::abs(kappa) <= kBoundaryTol) {
            if (bq <= 1.0 + kBoundaryTol) return divergent();
            part1 = std::pow(2.0, q / p) * std::pow(u_edge, 1.0 - bq) / (bq - 1.0);
        } else {
            Quad t = exp_power_tail_integral(kappa, bq, u_edge);
            if (t.diverged) return divergent();
            part1 = std::pow(2.0, q / p) * t.value;
            err1 = std::pow(2.0, q / p) * t.error;
            part1_analytic = false;
        }
    }

    // remainder over [t_cross, 2 rho) with the inverted rearrangement
    double part2 = 0, err2 = 0;
    bool part2_used = false;
    const double t_lo = f.power > 0 ? pr.t_cross() : 0.0;
    const double t_hi = 2.0 * f.radius;
    if (t_lo < t_hi) {
        part2_used = true;
        auto integrand = [&](double t) {
            if (t <= 0) return 0.0;
            const double fs = pr.f_star(t);
            return std::pow(t, q / p - 1.0) * std::pow(fs, q);
        };
        Quad t = t_lo > 0 ? integrate(integrand, t_lo, t_hi) : integrate_to_zero(integrand, t_hi);
        if (t.diverged) return divergent();
        part2 = t.value;
        err2 = t.error;
    }

    const double total = part1 + part2;
    const double value = std::pow(total, 1.0 / q);
    if (part1_analytic && !part2_used) return analytic(value);
    const double rel = total > 0 ? (err1 + err2) / total : 0.0;
    return numeric(value, value * rel / q);
}

}  // namespace

bool NormValue::finite() const { return std::isfinite(value); }

std::vector<Step> decreasing_rearrangement(const TestFunction& f) {
    auto profile = step_profile(f);
    std::sort(profile.begin(), profile.end(),
              [](const Step& a, const Step& b) { return a.height > b.height; });
    std::vector<Step> out;
    double t = 0;
    for (const auto& s : profile) {
        const double len = s.iv.length();
        if (!out.empty() && out.back().height == s.height)
            out.back().iv.hi += len;
        else
            out.push_back({{t, t + len}, s.height});
        t += len;
    }
    return out;
}

NormValue lp_norm(const TestFunction& f, double p) {
    if (!(p >= 1.0)) throw error("lp_norm: p must be >= 1");
    validate(f);
    if (const auto* c = std::get_if<Constant>(&f)) {
        if (std::isinf(p)) return analytic(c->c);
        return c->c == 0 ? analytic(0.0) : divergent();
    }
    if (const auto* ind = std::get_if<Indicator>(&f)) {
        if (std::isinf(p)) return analytic(1.0);
        return analytic(std::pow(ind->iv.length(), 1.0 / p));
    }
    if (const auto* pl = std::get_if<PowerLog>(&f)) return lp_norm_powerlog(*pl, p);
    const auto profile = step_profile(f);
    if (std::isinf(p)) {
        double top = 0;
        for (const auto& s : profile) top = std::max(top, s.height);
        return analytic(top);
    }
    double acc = 0;
    for (const auto& s : profile) acc += std::pow(s.height, p) * s.iv.length();
    return analytic(std::pow(acc, 1.0 / p));
}

NormValue lorentz_norm(const TestFunction& f, double p, double q) {
    if (!(p > 0) || std::isinf(p)) throw error("lorentz_norm: p must be in (0, inf)");
    if (!(q > 0)) throw error("lorentz_norm: q must be in (0, inf]");
    validate(f);
    if (const auto* c = std::get_if<Constant>(&f))
        return c->c == 0 ? analytic(0.0) : divergent();
    if (const auto* ind = std::get_if<Indicator>(&f)) {
        const double len = ind->iv.length();
        if (std::isinf(q)) return analytic(std::pow(len, 1.0 / p));
        return analytic(std::pow(p / q, 1.0 / q) * std::pow(len, 1.0 / p));
    }
    if (const auto* pl = std::get_if<PowerLog>(&f)) return lorentz_powerlog(*pl, p, q);

    const auto rearr = decreasing_rearrangement(f);
    if (std::isinf(q)) {
        double best = 0;
        for (const auto& s : rearr) best = std::max(best, s.height * std::pow(s.iv.hi, 1.0 / p));
        return analytic(best);
    }
    double acc = 0;
    for (const auto& s : rearr)
        acc += std::pow(s.height, q) * (p / q) *
               (std::pow(s.iv.hi, q / p) - std::pow(s.iv.lo, q / p));
    return analytic(std::pow(acc, 1.0 / q));
}

}  // namespace sphavg::funcs

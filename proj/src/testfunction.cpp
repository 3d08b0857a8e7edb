#include "sphavg/testfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sphavg::funcs {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void validate(const TestFunction& f) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                if (!(v.c >= 0)) throw error("Constant: c must be >= 0");
            } else if constexpr (std::is_same_v<T, Indicator>) {
                if (!(v.iv.lo < v.iv.hi)) throw error("Indicator: requires lo < hi");
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                if (!(v.power >= 0 && v.power < 1)) throw error("PowerLog: power must be in [0,1)");
                if (!(v.logpow >= 0)) throw error("PowerLog: logpow must be >= 0");
                if (!(v.radius > 0 && v.radius < 1)) throw error("PowerLog: radius must be in (0,1)");
            } else {
                for (const auto& s : v.steps) {
                    if (!(s.iv.lo < s.iv.hi)) throw error("StepSum: requires lo < hi");
                    if (!(s.height >= 0)) throw error("StepSum: heights must be >= 0");
                }
            }
        },
        f);
}

double evaluate(const TestFunction& f, double t) {
    return std::visit(
        [&](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return v.c;
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return v.iv.contains(t) ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                const double s = std::abs(t - v.center);
                if (s > v.radius) return 0.0;
                if (s == 0.0) return kInf;
                return std::pow(s, -v.power) * std::pow(-std::log(s), -v.logpow);
            } else {
                double acc = 0.0;
                for (const auto& s : v.steps)
                    if (s.iv.contains(t)) acc += s.height;
                return acc;
            }
        },
        f);
}

Interval support_bounds(const TestFunction& f) {
    return std::visit(
        [](const auto& v) -> Interval {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                if (v.c == 0) return {1.0, -1.0};
                return {-kInf, kInf};
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return v.iv;
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                return {v.center - v.radius, v.center + v.radius};
            } else {
                double lo = kInf, hi = -kInf;
                for (const auto& s : v.steps) {
                    if (s.height == 0) continue;
                    lo = std::min(lo, s.iv.lo);
                    hi = std::max(hi, s.iv.hi);
                }
                if (lo > hi) return {1.0, -1.0};
                return {lo, hi};
            }
        },
        f);
}

TestFunction translate_scale(const TestFunction& f, double shift, double dilation) {
    if (!(dilation > 0)) throw error("translate_scale: dilation must be positive");
    return std::visit(
        [&](const auto& v) -> TestFunction {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return v;
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return Indicator{{v.iv.lo * dilation + shift, v.iv.hi * dilation + shift}};
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                if (dilation != 1.0)
                    throw error(
                        "translate_scale: PowerLog admits shifts only; its log factor does not "
                        "rescale within the variant algebra");
                PowerLog w = v;
                w.center += shift;
                return w;
            } else {
                StepSum w;
                w.steps.reserve(v.steps.size());
                for (const auto& s : v.steps)
                    w.steps.push_back(
                        {{s.iv.lo * dilation + shift, s.iv.hi * dilation + shift}, s.height});
                return w;
            }
        },
        f);
}

std::vector<Step> step_profile(const TestFunction& f) {
    std::vector<Step> steps;
    if (const auto* ind = std::get_if<Indicator>(&f)) {
        steps.push_back({ind->iv, 1.0});
    } else if (const auto* ss = std::get_if<StepSum>(&f)) {
        steps = ss->steps;
    } else {
        throw error("step_profile: only Indicator and StepSum have a step profile");
    }
    std::vector<double> cuts;
    for (const auto& s : steps) {
        cuts.push_back(s.iv.lo);
        cuts.push_back(s.iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Step> profile;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double level = 0;
        for (const auto& s : steps)
            if (s.iv.lo <= cuts[i] && cuts[i + 1] <= s.iv.hi) level += s.height;
        if (level > 0) profile.push_back({{cuts[i], cuts[i + 1]}, level});
    }
    return profile;
}

std::string describe(const TestFunction& f) {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                os << "constant(" << v.c << ")";
            } else if constexpr (std::is_same_v<T, Indicator>) {
                os << "indicator[" << v.iv.lo << "," << v.iv.hi << ")";
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                os << "powerlog(center=" << v.center << ", a=" << v.power << ", b=" << v.logpow
                   << ", rho=" << v.radius << ")";
            } else {
                os << "steps{";
                for (std::size_t i = 0; i < v.steps.size(); ++i) {
                    if (i) os << ", ";
                    os << v.steps[i].height << " on [" << v.steps[i].iv.lo << ","
                       << v.steps[i].iv.hi << ")";
                }
                os << "}";
            }
        },
        f);
    return os.str();
}

}  // namespace sphavg::funcs

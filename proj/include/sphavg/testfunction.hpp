#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sphavg/errors.hpp"

namespace sphavg::funcs {

/// Half-open interval [lo, hi).
struct Interval {
    double lo;
    double hi;
    double length() const { return hi - lo; }
    bool contains(double t) const { return lo <= t && t < hi; }
};

struct Constant {
    double c;  // >= 0
};

struct Indicator {
    Interval iv;
};

/// t -> |t - center|^(-power) * |log|t - center||^(-logpow) on 0 < |t - center| <= radius,
/// zero elsewhere. radius < 1 keeps the log factor nonzero on the support.
struct PowerLog {
    double center;
    double power;   // a in [0, 1)
    double logpow;  // b >= 0
    double radius;  // rho in (0, 1)
};

struct Step {
    Interval iv;
    double height;  // >= 0
};

/// Sum of weighted indicators; overlaps add.
struct StepSum {
    std::vector<Step> steps;
};

using TestFunction = std::variant<Constant, Indicator, PowerLog, StepSum>;

/// Throws on parameter-domain violations (wider domains are rejected, not
/// silently supported).
void validate(const TestFunction& f);

/// Pointwise value; +infinity exactly at a PowerLog center (a measure-zero
/// set that quadrature nodes must skip).
double evaluate(const TestFunction& f, double t);

/// Smallest interval [lo, hi] outside which f vanishes; (-inf, inf) for a
/// positive Constant, empty (lo > hi) for the zero function.
Interval support_bounds(const TestFunction& f);

/// t -> f((t - shift) / dilation), dilation > 0, represented exactly in the
/// variant algebra. A PowerLog admits shifts only (its log factor does not
/// rescale); dilation != 1 on a PowerLog throws.
TestFunction translate_scale(const TestFunction& f, double shift, double dilation);

/// Exact piecewise-constant profile of Indicator/StepSum inputs: disjoint
/// pieces with positive values, covering the support. Throws on other variants.
std::vector<Step> step_profile(const TestFunction& f);

std::string describe(const TestFunction& f);

}  // namespace sphavg::funcs

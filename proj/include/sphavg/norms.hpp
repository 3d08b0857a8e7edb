#pragma once

#include <vector>

#include "sphavg/testfunction.hpp"

namespace sphavg::funcs {

struct NormValue {
    double value = 0;  // +infinity marks a divergent norm
    enum class Method { Analytic, Numeric } method = Method::Analytic;
    double estimated_error = 0;  // 0 for analytic results; ignored when value is infinite
    bool finite() const;
};

/// L^p norm, p in [1, infinity]. Closed forms for Constant, Indicator and
/// StepSum. A PowerLog reduces, via u = log(1/|t - t0|), to
/// int e^{-(1-ap)u} u^{-bp} du over [log(1/rho), inf): divergent when ap > 1
/// or (ap = 1 and bp <= 1), in closed form when ap = 1 < bp, and by adaptive
/// quadrature otherwise. Rejects p < 1.
NormValue lp_norm(const TestFunction& f, double p);

/// Lorentz quasi-norm (int_0^inf (t^{1/p} f*(t))^q dt/t)^{1/q}, with the sup
/// form for q = infinity, where f* is the decreasing rearrangement.
/// Analytic for Indicator and StepSum. For a PowerLog the rearrangement is
/// exact on the small-t branch (f*(t) = f(center + t/2) there) and obtained by
/// inverting the distribution function elsewhere. Requires p in (0, inf),
/// q in (0, inf].
NormValue lorentz_norm(const TestFunction& f, double p, double q);

/// Decreasing rearrangement of a step-variant function as explicit steps on
/// [0, measure of support). Throws for Constant and PowerLog.
std::vector<Step> decreasing_rearrangement(const TestFunction& f);

}  // namespace sphavg::funcs

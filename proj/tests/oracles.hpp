#pragma once

// Independent reference computations used by the tests. Everything here is
// derived from closed forms or classical series, never from the library's own
// evaluation paths.

#include <cmath>
#include <vector>

namespace oracles {

/// Bessel J0 via the ascending power series (|z| < 16) and the Hankel
/// asymptotic expansion truncated at its smallest term (|z| >= 16).
/// Absolute error below 1e-11 over the range used in tests.
inline double bessel_j0(double z) {
    z = std::abs(z);
    if (z < 16.0) {
        double term = 1.0, acc = 1.0;
        for (int m = 1; m <= 200; ++m) {
            term *= -(z * z / 4.0) / (static_cast<double>(m) * m);
            acc += term;
            if (std::abs(term) < 1e-19 * std::max(1.0, std::abs(acc))) break;
        }
        return acc;
    }
    // a_m = a_{m-1} (2m-1)^2 / (8m);  P = a0 - a2/z^2 + ...,  Q = -a1/z + a3/z^3 - ...
    double a[40];
    a[0] = 1.0;
    for (int m = 1; m < 40; ++m)
        a[m] = a[m - 1] * (2.0 * m - 1.0) * (2.0 * m - 1.0) / (8.0 * m);
    double P = 0.0, Q = 0.0, sign = 1.0, prev = HUGE_VAL;
    for (int m = 0; 2 * m + 1 < 40; ++m) {
        const double t_even = a[2 * m] / std::pow(z, 2 * m);
        if (t_even > prev) break;  // smallest-term truncation
        P += sign * t_even;
        Q += -sign * a[2 * m + 1] / std::pow(z, 2 * m + 1);
        prev = t_even;
        sign = -sign;
    }
    const double w = z - M_PI / 4.0;
    return std::sqrt(2.0 / (M_PI * z)) * (P * std::cos(w) - Q * std::sin(w));
}

/// T(chi_[-e,e), chi_[1-2e^2,1+2e^2))(0) for the near-pole pair on the circle:
/// the exact arc is |theta - 3pi/2| <= arcsin(e), normalized by 2pi.
inline double near_pole_value(double eps) { return std::asin(eps) / M_PI; }

/// <T(chi,chi), chi> with chi = chi_[-2,2) on the circle, via the exact arc
/// measure m(x) of {cos > x-2, sin > x-2}: 2 + 2 * int_1^2 m.
inline double box_pairing_value() {
    // m as a function of w = |x-2| in (0,1):
    //   w <= sqrt(1/2):  m = 1/4 + arcsin(w)/pi
    //   w >  sqrt(1/2):  m = 2 arcsin(w)/pi
    // with antiderivative  A(w) = w arcsin w + sqrt(1-w^2).
    auto A = [](double w) { return w * std::asin(w) + std::sqrt(1.0 - w * w); };
    const double s = std::sqrt(0.5);
    const double part1 = 0.25 * s + (A(s) - A(0.0)) / M_PI;
    const double part2 = 2.0 * (A(1.0) - A(s)) / M_PI;
    return 2.0 + 2.0 * (part1 + part2);
}

/// Arc fraction of {|cos theta| > eps} on the circle.
inline double truncated_constant_value(double eps) { return 1.0 - 2.0 * std::asin(eps) / M_PI; }

}  // namespace oracles

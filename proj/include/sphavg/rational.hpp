#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "sphavg/errors.hpp"

namespace sphavg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "a" or "a/b", always with a canonical (reduced, positive-denominator) form.
std::string rational_string(const Rational& q);

/// Parses "a" or "a/b" with optional surrounding whitespace. Decimal points are
/// rejected so exact certificates stay exact. `offset` shifts reported error
/// positions when the token is a slice of a larger input.
Rational parse_rational(const std::string& token, std::size_t offset = 0);

/// Numerator/denominator as int64, throwing if they do not fit. Region data is
/// tiny, so this only trips on malicious inputs.
long long rational_num_i64(const Rational& q);
long long rational_den_i64(const Rational& q);

}  // namespace sphavg

#include "sphavg/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <limits>

namespace sphavg {

std::string rational_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& token, std::size_t offset) {
    std::size_t i = 0;
    const std::size_t n = token.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(token[i]))) ++i;
    };
    auto read_int = [&]() -> BigInt {
        std::size_t start = i;
        bool negative = false;
        if (i < n && (token[i] == '+' || token[i] == '-')) {
            negative = token[i] == '-';
            ++i;
        }
        std::size_t digits_from = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
        if (i == digits_from) throw parse_error("expected integer", offset + start);
        if (i < n && token[i] == '.')
            throw parse_error("decimal numbers are not accepted here, use a/b", offset + i);
        BigInt v(token.substr(digits_from, i - digits_from));
        return negative ? -v : v;
    };

    skip_ws();
    BigInt num = read_int();
    skip_ws();
    BigInt den = 1;
    if (i < n && token[i] == '/') {
        ++i;
        skip_ws();
        den = read_int();
        skip_ws();
        if (den == 0) throw parse_error("zero denominator", offset + i);
    }
    if (i != n) throw parse_error("trailing characters after rational", offset + i);
    return Rational(num, den);
}

namespace {
long long to_i64(const BigInt& v, const char* what) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw error(std::string(what) + " does not fit in 64 bits: " + v.str());
    return v.convert_to<long long>();
}
}  // namespace

long long rational_num_i64(const Rational& q) {
    return to_i64(boost::multiprecision::numerator(q), "numerator");
}
long long rational_den_i64(const Rational& q) {
    return to_i64(boost::multiprecision::denominator(q), "denominator");
}

}  // namespace sphavg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bollobas {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with positive denominator, always in lowest terms.
// Every weight verdict in this library is an integer comparison on these;
// no floating point is involved anywhere.
using Rational = boost::multiprecision::cpp_rational;

// C(n, k). Total on n >= 0: returns 0 for k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// (a_1 + ... + a_d)! / (a_1! ... a_d!), all parts >= 0.
BigInt multinomial(const std::vector<std::int64_t>& parts);

// "p/q" with q > 0, e.g. "3/1", "-5/6". Inverse of parse_rational.
std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(num, den);
}

}  // namespace bollobas

#include "bollobas/rational.hpp"

#include <stdexcept>

namespace bollobas {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    // C(n,k) = prod_{i=1..k} (n-k+i)/i; every partial product is integral.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt multinomial(const std::vector<std::int64_t>& parts) {
    BigInt result = 1;
    std::int64_t total = 0;
    for (std::int64_t a : parts) {
        if (a < 0) throw std::invalid_argument("multinomial: parts must be >= 0");
        total += a;
        result *= binomial(total, a);
    }
    return result;
}

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

}  // namespace bollobas

#include "bollobas/field.hpp"

#include <stdexcept>

namespace bollobas {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 32))
        throw std::invalid_argument("PrimeField: modulus must be below 2^32");
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::from_int(std::int64_t a) const {
    std::int64_t m = a % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t r0 = static_cast<std::int64_t>(a), r1 = static_cast<std::int64_t>(p_);
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return from_int(s0);
}

}  // namespace bollobas

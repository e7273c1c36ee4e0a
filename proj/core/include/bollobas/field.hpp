#pragma once

#include <cstdint>
#include <vector>

namespace bollobas {

// Arithmetic mod a prime p, 2 <= p < 2^32. Elements are canonical
// representatives in [0, p). The default modulus is 2^31 - 1: large enough
// that general-position sampling succeeds overwhelmingly at desk scale.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 2147483647ull;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::uint64_t a) const { return a % p_; }
    std::uint64_t from_int(std::int64_t a) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t inv(std::uint64_t a) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

}  // namespace bollobas

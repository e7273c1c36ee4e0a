#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "bollobas/rational.hpp"

namespace bollobas {

// Number of elements of the ground set {1, ..., n}. Capped at 64 so that
// subsets are single machine words and intersection tests are one AND.
struct GroundSize {
    int n = 0;

    GroundSize() = default;
    explicit GroundSize(int size);

    // Mask with the low n bits set.
    std::uint64_t universe() const {
        return n == 64 ? ~0ull : (1ull << n) - 1;
    }
    auto operator<=>(const GroundSize&) const = default;
};

// Subset of {1, ..., n}: bit j-1 set iff element j is in the subset.
struct SubsetMask {
    std::uint64_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}
    // From 1-based element labels, e.g. SubsetMask::of({1, 3}).
    static SubsetMask of(std::initializer_list<int> elements);

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int element) const { return (bits >> (element - 1)) & 1; }
    bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
    bool fits(GroundSize g) const { return (bits & ~g.universe()) == 0; }
    std::vector<int> elements() const;  // ascending, 1-based

    auto operator<=>(const SubsetMask&) const = default;
};

constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & b.bits}; }
constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits | b.bits}; }
constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & ~b.bits}; }

inline SubsetMask complement(SubsetMask a, GroundSize g) { return SubsetMask{~a.bits & g.universe()}; }
inline bool intersects(SubsetMask a, SubsetMask b) { return (a.bits & b.bits) != 0; }

std::string to_string(SubsetMask m);  // "{1,3}" style, for diagnostics

struct SetPair {
    SubsetMask A;
    SubsetMask B;
    auto operator<=>(const SetPair&) const = default;
};

// Ordered sequence of set pairs over a common ground set. Order is
// semantically significant: the skew conditions quantify over i < j.
struct SetPairSystem {
    GroundSize ground;
    std::vector<SetPair> pairs;

    std::size_t size() const { return pairs.size(); }
    bool well_formed() const;
    auto operator<=>(const SetPairSystem&) const = default;
};

// Ordered tuple of pairwise disjoint subsets. Disjointness is intrinsic;
// validate() reports the first violating block pair.
struct DPartition {
    std::vector<SubsetMask> blocks;

    int d() const { return static_cast<int>(blocks.size()); }
    SubsetMask support() const;
    bool disjoint() const;
    auto operator<=>(const DPartition&) const = default;
};

struct DPartitionSystem {
    GroundSize ground;
    int d = 0;
    std::vector<DPartition> members;

    std::size_t size() const { return members.size(); }
    bool well_formed() const;
    auto operator<=>(const DPartitionSystem&) const = default;
};

// ---------------------------------------------------------------------------
// Verifiers. The *_detail variants report the first violated condition as a
// (i, j) cell, 0-based; i == j flags a diagonal violation.

struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    std::string what;
};
using VerifyResult = std::optional<Violation>;  // nullopt == verified

// Strong Bollobas system: A_i disjoint from B_i, A_i meets B_j for all i != j.
bool is_bollobas(const SetPairSystem& system);
VerifyResult check_bollobas(const SetPairSystem& system);

// Skew variant: the cross condition only for i < j.
bool is_skew_bollobas(const SetPairSystem& system);
VerifyResult check_skew_bollobas(const SetPairSystem& system);

// t-intersecting variant: |A_i & B_i| <= t, |A_i & B_j| > t off-diagonal
// (both directions, or only i < j when skew). At t = 0 this coincides with
// the plain verifiers above.
bool is_t_system(const SetPairSystem& system, int t, bool skew);
VerifyResult check_t_system(const SetPairSystem& system, int t, bool skew);

// No member of the family contained in another distinct member.
bool is_antichain(const std::vector<SubsetMask>& family);

// Orderly overlap of two d-partitions: exists p < q with
// P.blocks[p] meeting Q.blocks[q]. Asymmetric in (P, Q).
bool orderly_overlap(const DPartition& P, const DPartition& Q);

// skew: members i < j orderly overlap as (i, j).
// strong (skew = false): additionally as (j, i).
bool is_dpartition_system(const DPartitionSystem& system, bool skew);
VerifyResult check_dpartition_system(const DPartitionSystem& system, bool skew);

// ---------------------------------------------------------------------------
// Exact weight functionals. These are pure: they accept systems that are not
// valid Bollobas systems (search needs weights of partial candidates).

// sum_i 1 / C(|A_i| + |B_i|, |A_i|)
Rational weight(const SetPairSystem& system);
Rational pair_weight(const SetPair& pair);

// sum_i 1 / C(n, |F_i|)
Rational lym_weight(const std::vector<SubsetMask>& family, GroundSize ground);

// sum_i 1 / multinomial(block sizes of member i)
Rational dweight(const DPartitionSystem& system);
Rational dpartition_weight(const DPartition& member);

}  // namespace bollobas

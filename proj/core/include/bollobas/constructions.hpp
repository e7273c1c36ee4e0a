#pragma once

#include <functional>

#include "bollobas/sets.hpp"

namespace bollobas {

// The 2^n pairs (A, [n]\A) over all subsets A, ordered by |A| non-increasing
// with ties broken by ascending mask value. Skew Bollobas with weight n + 1.
// Rejects n > 20 (2^n pairs are materialized).
SetPairSystem full_power_set_system(GroundSize ground);

// True iff {(A_i, [n]\A_i)} in the given order is skew Bollobas. The input
// must be a permutation of the full power set of [n]. Evaluates both the
// direct skew check and the equivalent no-forward-containment criterion
// (A_i not a subset of A_j for i < j) and verifies they agree.
bool valid_complement_ordering(const std::vector<SubsetMask>& subsets, GroundSize ground);

// Pairs (A, [t] | ([t+1, a+b+t] \ A)) over all A of size a + t containing
// [t], on ground [a+b+t], in ascending mask order of A. A skew (indeed
// strong) Bollobas t-system of size C(a+b, a).
SetPairSystem furedi_construction(int a, int b, int t);

// Pairs (A_i, [t] | ([t+1, n] \ A_i)) over all supersets A_i of [t],
// ordered by |A_i| non-increasing then ascending mask. A skew Bollobas
// t-system of size 2^(n-t). Rejects n - t > 20.
SetPairSystem t_system_construction(GroundSize ground, int t);

// All d^n full d-partitions of [n], ordered with lexicographically larger
// block-size vectors first (the first differing coordinate decides,
// larger earlier) and ascending concatenated-mask order within equal size
// vectors. Skew Bollobas with dweight C(n+d-1, d-1). Rejects d^n > 2^20.
DPartitionSystem lex_full_dpartitions(GroundSize ground, int d);

// All full d-partitions of [b], b = sum of parts, with |block p| = parts[p].
// Strong Bollobas with dweight exactly 1. Parts must be positive, b <= 12.
DPartitionSystem all_full_dpartitions(const std::vector<int>& parts);

// Repeatedly replaces the lowest-index pair with A_i | B_i != [n] by the two
// pairs (A_i | {x}, B_i), (A_i, B_i | {x}) in this order, x the lowest
// missing element, until B_i = [n]\A_i everywhere. Input must be skew
// Bollobas; so is the result, and weight strictly increases at every step.
// The observer, when given, sees the system after each move.
using SaturateObserver = std::function<void(const SetPairSystem&)>;
SetPairSystem saturate(const SetPairSystem& system);
SetPairSystem saturate(const SetPairSystem& system, const SaturateObserver& on_step);

}  // namespace bollobas

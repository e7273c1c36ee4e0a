#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bollobas/sets.hpp"

namespace bollobas {

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    std::int64_t max_millis = 0;  // 0 = unlimited
};

enum class SkewSearchMode {
    // Only candidate pairs with B = [n]\A. Any family of those admits the
    // size-decreasing order, so this is a family search; the optimum over
    // all systems lands here by the saturation argument.
    FullPairsOnly,
    // All disjoint pairs, ordered-sequence search with the admissible
    // interval-capacity bound (strict pruning, ties kept).
    Unrestricted,
    // All disjoint pairs, no weight pruning at all.
    UnrestrictedNoPrune,
};

struct SearchReport {
    std::string query;
    int n = 0;
    int t = 0;
    int d = 0;
    bool skew = true;
    std::string mode;

    Rational optimum_weight;
    std::int64_t optimum_size = 0;
    std::optional<SetPairSystem> witness_pairs;
    std::optional<DPartitionSystem> witness_members;

    std::uint64_t nodes = 0;
    double wall_ms = 0;
    bool exhaustive = false;  // search space fully covered within budget

    // Strong d-partition searches only: how the optimum compares to d - 1.
    // The comparison is reported, never presumed.
    std::string conjecture_comparison;  // "below_bound" | "equals_bound" | "violates_bound"
    std::int64_t aux_max_size = -1;     // largest system size seen (strong d-partitions)
};

// Maximum weight over skew Bollobas systems on [n]. Caps: n <= 4 for
// FullPairsOnly, n <= 3 for Unrestricted, n <= 2 for UnrestrictedNoPrune.
SearchReport max_skew_weight(GroundSize ground,
                             SkewSearchMode mode = SkewSearchMode::FullPairsOnly,
                             SearchBudget budget = {});

// True iff every system attaining the optimum weight n + 1 consists of
// pairs with B_i = [n]\A_i, folded over all optimal nodes of the
// unrestricted search. n <= 3.
bool equality_structure(GroundSize ground);

// Maximum weight over strong Bollobas systems on [n]. n <= 3; prune = false
// disables the bound pruning for plain-exhaustive cross-checks (n <= 2).
SearchReport max_strong_weight(GroundSize ground, bool prune = true, SearchBudget budget = {});

// Maximum size m over skew Bollobas t-systems on [n], n <= 4.
SearchReport max_t_system_size(GroundSize ground, int t, SearchBudget budget = {});

// Maximum dweight over d-partition systems of the requested variant,
// (d+1)^n <= 256. Strong reports carry the conjecture comparison and the
// auxiliary maximum size.
SearchReport max_dpartition_weight(GroundSize ground, int d, bool skew, SearchBudget budget = {});

// An ordering of the given pairs making the system skew Bollobas, if one
// exists. At most 24 pairs.
std::optional<std::vector<std::size_t>> ordering_feasible(const std::vector<SetPair>& pairs,
                                                          GroundSize ground);

}  // namespace bollobas

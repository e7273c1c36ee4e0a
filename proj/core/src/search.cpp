#include "bollobas/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bollobas/constructions.hpp"

namespace bollobas {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {};

struct BudgetState {
    SearchBudget budget;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;
    bool exceeded = false;

    // Counts a node; false once either limit is hit.
    bool tick() {
        if (exceeded) return false;
        ++nodes;
        if (budget.max_nodes && nodes > budget.max_nodes) exceeded = true;
        if (budget.max_millis && (nodes & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (ms.count() > budget.max_millis) exceeded = true;
        }
        return !exceeded;
    }
    void tick_or_throw() {
        if (!tick()) throw BudgetExceeded{};
    }
    double wall_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

std::vector<std::uint64_t> submasks_ascending(std::uint64_t mask) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        out.push_back(sub);
        if (sub == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// All disjoint pairs over [n]: A ascending, then B ascending over subsets
// of the complement. 3^n candidates.
std::vector<SetPair> disjoint_pair_candidates(GroundSize ground) {
    std::vector<SetPair> out;
    for (std::uint64_t a = 0; a <= ground.universe(); ++a) {
        SubsetMask A{a};
        for (std::uint64_t b : submasks_ascending(complement(A, ground).bits))
            out.push_back({A, SubsetMask{b}});
        if (ground.n == 0) break;
    }
    return out;
}

// Total LYM mass of the lattice interval [A, [n]\B]: an upper bound on the
// weight the pair can contribute after saturation. The intervals of the
// pairs of one skew system are pairwise disjoint, which makes the
// remaining-capacity bound in the sequence search admissible.
Rational interval_mass(const SetPair& pair, GroundSize ground) {
    const int a = pair.A.size(), b = pair.B.size();
    const int slack = ground.n - a - b;
    Rational mass = 0;
    for (int k = 0; k <= slack; ++k)
        mass += Rational(binomial(slack, k), binomial(ground.n, a + k));
    return mass;
}

bool all_pairs_full(const SetPairSystem& system) {
    for (const SetPair& p : system.pairs)
        if ((p.A | p.B) != SubsetMask{system.ground.universe()}) return false;
    return true;
}

struct SkewEngineResult {
    Rational optimum;
    SetPairSystem witness;
    std::uint64_t nodes = 0;
    double wall_ms = 0;
    bool completed = true;
    bool all_optima_full = true;  // folded over every node attaining the optimum
};

// Ordered-sequence DFS over all disjoint pairs. A candidate may follow the
// placed prefix iff its B meets every placed A. With `prune`, children whose
// remaining interval capacity cannot reach the incumbent are cut -- strictly,
// so ties survive and every optimum-attaining node is still visited.
SkewEngineResult skew_sequence_search(GroundSize ground, bool prune, SearchBudget budget,
                                      const Rational& warm_weight,
                                      const SetPairSystem& warm_witness) {
    const std::vector<SetPair> candidates = disjoint_pair_candidates(ground);
    std::vector<Rational> masses, weights;
    masses.reserve(candidates.size());
    weights.reserve(candidates.size());
    for (const SetPair& c : candidates) {
        masses.push_back(interval_mass(c, ground));
        weights.push_back(pair_weight(c));
    }
    const Rational total_mass = Rational(ground.n + 1);

    SkewEngineResult result;
    result.optimum = warm_weight;
    result.witness = warm_witness;
    BudgetState bs{budget};

    SetPairSystem current{ground, {}};
    Rational current_weight = 0;
    Rational placed_mass = 0;

    std::function<void()> visit = [&]() {
        if (!bs.tick()) return;
        if (current_weight > result.optimum) {
            result.optimum = current_weight;
            result.witness = current;
            result.all_optima_full = all_pairs_full(current);
        } else if (current_weight == result.optimum) {
            result.all_optima_full = result.all_optima_full && all_pairs_full(current);
        }
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const SetPair& cand = candidates[c];
            bool feasible = true;
            for (const SetPair& placed : current.pairs)
                if (!intersects(placed.A, cand.B)) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            if (prune) {
                const Rational bound =
                    current_weight + weights[c] + (total_mass - placed_mass - masses[c]);
                if (bound < result.optimum) continue;
            }
            current.pairs.push_back(cand);
            current_weight += weights[c];
            placed_mass += masses[c];
            visit();
            placed_mass -= masses[c];
            current_weight -= weights[c];
            current.pairs.pop_back();
            if (bs.exceeded) return;
        }
    };
    visit();

    result.nodes = bs.nodes;
    result.wall_ms = bs.wall_ms();
    result.completed = !bs.exceeded;
    return result;
}

// Family search over the 2^n full pairs in size-decreasing order (that
// order is always skew-feasible, so include/exclude covers every family).
SkewEngineResult full_pair_family_search(GroundSize ground, SearchBudget budget) {
    const SetPairSystem all = full_power_set_system(ground);
    std::vector<Rational> weights;
    weights.reserve(all.pairs.size());
    for (const SetPair& p : all.pairs) weights.push_back(pair_weight(p));
    std::vector<Rational> suffix(all.pairs.size() + 1, Rational(0));
    for (std::size_t i = all.pairs.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

    SkewEngineResult result;
    result.optimum = 0;
    result.witness = SetPairSystem{ground, {}};
    BudgetState bs{budget};

    SetPairSystem current{ground, {}};
    Rational current_weight = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t idx) {
        if (!bs.tick()) return;
        if (current_weight > result.optimum) {
            result.optimum = current_weight;
            result.witness = current;
        }
        if (idx == all.pairs.size()) return;
        if (current_weight + suffix[idx] < result.optimum) return;
        current.pairs.push_back(all.pairs[idx]);
        current_weight += weights[idx];
        visit(idx + 1);
        current_weight -= weights[idx];
        current.pairs.pop_back();
        if (bs.exceeded) return;
        visit(idx + 1);
    };
    visit(0);

    result.nodes = bs.nodes;
    result.wall_ms = bs.wall_ms();
    result.completed = !bs.exceeded;
    return result;
}

}  // namespace

SearchReport max_skew_weight(GroundSize ground, SkewSearchMode mode, SearchBudget budget) {
    SearchReport report;
    report.query = "max_skew_weight";
    report.n = ground.n;
    report.skew = true;

    SkewEngineResult engine;
    switch (mode) {
        case SkewSearchMode::FullPairsOnly:
            if (ground.n > 4) throw std::invalid_argument("max_skew_weight: n > 4 (full-pair mode)");
            report.mode = "full_pairs_only";
            engine = full_pair_family_search(ground, budget);
            break;
        case SkewSearchMode::Unrestricted: {
            if (ground.n > 3) throw std::invalid_argument("max_skew_weight: n > 3 (unrestricted)");
            report.mode = "unrestricted";
            SetPairSystem warm = full_power_set_system(ground);
            engine = skew_sequence_search(ground, true, budget, weight(warm), warm);
            break;
        }
        case SkewSearchMode::UnrestrictedNoPrune:
            if (ground.n > 2) throw std::invalid_argument("max_skew_weight: n > 2 (no-prune)");
            report.mode = "unrestricted_no_prune";
            engine =
                skew_sequence_search(ground, false, budget, Rational(0), SetPairSystem{ground, {}});
            break;
    }

    if (!is_skew_bollobas(engine.witness))
        throw std::logic_error("max_skew_weight: witness fails re-verification");
    if (weight(engine.witness) != engine.optimum)
        throw std::logic_error("max_skew_weight: witness weight mismatch");

    report.optimum_weight = engine.optimum;
    report.optimum_size = static_cast<std::int64_t>(engine.witness.size());
    report.witness_pairs = std::move(engine.witness);
    report.nodes = engine.nodes;
    report.wall_ms = engine.wall_ms;
    report.exhaustive = engine.completed;
    return report;
}

bool equality_structure(GroundSize ground) {
    if (ground.n > 3) throw std::invalid_argument("equality_structure: n > 3");
    SkewEngineResult engine;
    if (ground.n <= 2) {
        engine = skew_sequence_search(ground, false, SearchBudget{}, Rational(0),
                                      SetPairSystem{ground, {}});
    } else {
        SetPairSystem warm = full_power_set_system(ground);
        engine = skew_sequence_search(ground, true, SearchBudget{}, weight(warm), warm);
    }
    if (!engine.completed) throw std::logic_error("equality_structure: search did not complete");
    return engine.optimum == Rational(ground.n + 1) && engine.all_optima_full;
}

SearchReport max_strong_weight(GroundSize ground, bool prune, SearchBudget budget) {
    if (ground.n > 3) throw std::invalid_argument("max_strong_weight: n > 3");
    const std::vector<SetPair> candidates = disjoint_pair_candidates(ground);
    std::vector<Rational> weights;
    weights.reserve(candidates.size());
    for (const SetPair& c : candidates) weights.push_back(pair_weight(c));
    std::vector<Rational> suffix(candidates.size() + 1, Rational(0));
    for (std::size_t i = candidates.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

    Rational best = 0;
    std::vector<std::size_t> best_chosen;
    std::vector<std::size_t> chosen;
    Rational current_weight = 0;
    BudgetState bs{budget};

    std::function<void(std::size_t)> visit = [&](std::size_t idx) {
        if (!bs.tick()) return;
        if (current_weight > best) {
            best = current_weight;
            best_chosen = chosen;
        }
        if (idx == candidates.size()) return;
        if (prune && current_weight + suffix[idx] < best) return;
        bool compatible = true;
        for (std::size_t c : chosen)
            if (!intersects(candidates[c].A, candidates[idx].B) ||
                !intersects(candidates[idx].A, candidates[c].B)) {
                compatible = false;
                break;
            }
        if (compatible) {
            chosen.push_back(idx);
            current_weight += weights[idx];
            visit(idx + 1);
            current_weight -= weights[idx];
            chosen.pop_back();
            if (bs.exceeded) return;
        }
        visit(idx + 1);
    };
    visit(0);

    SetPairSystem witness{ground, {}};
    for (std::size_t c : best_chosen) witness.pairs.push_back(candidates[c]);
    if (!is_bollobas(witness))
        throw std::logic_error("max_strong_weight: witness fails re-verification");
    if (weight(witness) != best) throw std::logic_error("max_strong_weight: witness weight mismatch");

    SearchReport report;
    report.query = "max_strong_weight";
    report.n = ground.n;
    report.skew = false;
    report.mode = prune ? "branch_and_bound" : "exhaustive";
    report.optimum_weight = best;
    report.optimum_size = static_cast<std::int64_t>(witness.size());
    report.witness_pairs = std::move(witness);
    report.nodes = bs.nodes;
    report.exhaustive = !bs.exceeded;
    report.wall_ms = bs.wall_ms();
    return report;
}

namespace {

// A family of A-sets extends by A iff some B with |A & B| <= t meets every
// placed A_i in more than t elements. The maximal such B is ([n]\A) | T
// with T a subset of A of size <= t, so only T is searched:
// |A_i & B| = |A_i \ A| + |A_i & T|.
bool t_extension_feasible(SubsetMask A, std::uint32_t used,
                          const std::vector<SubsetMask>& subsets, int t) {
    for (std::uint64_t tbits : submasks_ascending(A.bits)) {
        SubsetMask T{tbits};
        if (T.size() > t) continue;
        bool ok = true;
        for (std::size_t i = 0; i < subsets.size() && ok; ++i)
            if (used & (1u << i))
                ok = (subsets[i] - A).size() + (subsets[i] & T).size() > t;
        if (ok) return true;
    }
    return false;
}

SubsetMask t_extension_witness_b(SubsetMask A, std::uint32_t used,
                                 const std::vector<SubsetMask>& subsets, int t,
                                 GroundSize ground) {
    for (std::uint64_t tbits : submasks_ascending(A.bits)) {
        SubsetMask T{tbits};
        if (T.size() > t) continue;
        bool ok = true;
        for (std::size_t i = 0; i < subsets.size() && ok; ++i)
            if (used & (1u << i))
                ok = (subsets[i] - A).size() + (subsets[i] & T).size() > t;
        if (ok) return complement(A, ground) | T;
    }
    throw std::logic_error("t_extension_witness_b: no witness B exists");
}

}  // namespace

SearchReport max_t_system_size(GroundSize ground, int t, SearchBudget budget) {
    if (ground.n > 4) throw std::invalid_argument("max_t_system_size: n > 4");
    if (t < 0 || t > ground.n) throw std::invalid_argument("max_t_system_size: t out of [0, n]");
    const std::size_t subset_count = 1ull << ground.n;
    std::vector<SubsetMask> subsets;
    subsets.reserve(subset_count);
    for (std::uint64_t a = 0; a < subset_count; ++a) subsets.push_back(SubsetMask{a});

    // Extension feasibility depends only on the set of placed A-sets, so
    // optimal completions are memoized per family. The state space is capped
    // at 2^(2^n) <= 2^16, which always completes; the budget only meters it.
    std::unordered_map<std::uint32_t, int> memo;
    BudgetState bs{budget};

    std::function<int(std::uint32_t)> best_additional = [&](std::uint32_t used) -> int {
        auto hit = memo.find(used);
        if (hit != memo.end()) return hit->second;
        ++bs.nodes;
        int best = 0;
        for (std::size_t a = 0; a < subset_count; ++a) {
            if (used & (1u << a)) continue;
            if (!t_extension_feasible(subsets[a], used, subsets, t)) continue;
            best = std::max(best, 1 + best_additional(used | (1u << a)));
        }
        memo.emplace(used, best);
        return best;
    };
    const int optimum = best_additional(0);

    // Rebuild one optimal ordered witness by walking the memo greedily.
    SetPairSystem witness{ground, {}};
    std::uint32_t used = 0;
    for (int remaining = optimum; remaining > 0;) {
        bool advanced = false;
        for (std::size_t a = 0; a < subset_count && !advanced; ++a) {
            if (used & (1u << a)) continue;
            if (!t_extension_feasible(subsets[a], used, subsets, t)) continue;
            if (1 + best_additional(used | (1u << a)) != remaining) continue;
            witness.pairs.push_back(
                {subsets[a], t_extension_witness_b(subsets[a], used, subsets, t, ground)});
            used |= 1u << a;
            --remaining;
            advanced = true;
        }
        if (!advanced) throw std::logic_error("max_t_system_size: witness reconstruction failed");
    }

    if (!is_t_system(witness, t, true))
        throw std::logic_error("max_t_system_size: witness fails re-verification");

    SearchReport report;
    report.query = "max_t_system_size";
    report.n = ground.n;
    report.t = t;
    report.skew = true;
    report.mode = "memoized_family_search";
    report.optimum_size = optimum;
    report.optimum_weight = weight(witness);
    report.witness_pairs = std::move(witness);
    report.nodes = bs.nodes;
    report.exhaustive = true;
    report.wall_ms = bs.wall_ms();
    return report;
}

namespace {

using FamilyKey = std::array<std::uint64_t, 4>;  // up to 256 candidates

bool key_test(const FamilyKey& k, std::size_t i) { return (k[i >> 6] >> (i & 63)) & 1; }
FamilyKey key_set(FamilyKey k, std::size_t i) {
    k[i >> 6] |= 1ull << (i & 63);
    return k;
}

std::vector<DPartition> dpartition_candidates(GroundSize ground, int d) {
    std::uint64_t total = 1;
    for (int i = 0; i < ground.n; ++i) {
        total *= static_cast<std::uint64_t>(d + 1);
        if (total > 256) throw std::invalid_argument("dpartition search: (d+1)^n > 256");
    }
    std::vector<DPartition> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        DPartition part;
        part.blocks.assign(static_cast<std::size_t>(d), SubsetMask{});
        std::uint64_t c = code;
        for (int e = 0; e < ground.n; ++e) {
            const int slot = static_cast<int>(c % static_cast<std::uint64_t>(d + 1));
            if (slot > 0) part.blocks[static_cast<std::size_t>(slot - 1)].bits |= 1ull << e;
            c /= static_cast<std::uint64_t>(d + 1);
        }
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace

SearchReport max_dpartition_weight(GroundSize ground, int d, bool skew, SearchBudget budget) {
    if (d < 1) throw std::invalid_argument("max_dpartition_weight: d must be >= 1");
    const std::vector<DPartition> candidates = dpartition_candidates(ground, d);
    std::vector<Rational> weights;
    weights.reserve(candidates.size());
    for (const DPartition& p : candidates) weights.push_back(dpartition_weight(p));

    BudgetState bs{budget};
    Rational best = 0;
    std::vector<std::size_t> best_chosen;
    std::int64_t aux_max_size = -1;
    bool completed = true;

    if (skew) {
        // Ordered-sequence search; extension feasibility depends only on the
        // placed set, so optimal completions are memoized per family.
        std::map<FamilyKey, Rational> memo;
        std::vector<std::size_t> prefix;
        Rational prefix_weight = 0;

        auto appendable = [&](const FamilyKey& used, std::size_t c) {
            if (key_test(used, c)) return false;
            for (std::size_t p = 0; p < candidates.size(); ++p)
                if (key_test(used, p) && !orderly_overlap(candidates[p], candidates[c]))
                    return false;
            return true;
        };

        std::function<Rational(const FamilyKey&)> best_additional =
            [&](const FamilyKey& used) -> Rational {
            auto hit = memo.find(used);
            if (hit != memo.end()) return hit->second;
            bs.tick_or_throw();
            if (prefix_weight > best) {
                best = prefix_weight;
                best_chosen = prefix;
            }
            Rational value = 0;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (!appendable(used, c)) continue;
                prefix.push_back(c);
                prefix_weight += weights[c];
                value = std::max(value, weights[c] + best_additional(key_set(used, c)));
                prefix_weight -= weights[c];
                prefix.pop_back();
            }
            memo.emplace(used, value);
            return value;
        };

        try {
            const Rational optimum = best_additional(FamilyKey{});
            best = optimum;
            best_chosen.clear();
            FamilyKey used{};
            Rational remaining = optimum;
            while (remaining != 0) {
                bool advanced = false;
                for (std::size_t c = 0; c < candidates.size() && !advanced; ++c) {
                    if (!appendable(used, c)) continue;
                    if (weights[c] + best_additional(key_set(used, c)) != remaining) continue;
                    best_chosen.push_back(c);
                    used = key_set(used, c);
                    remaining -= weights[c];
                    advanced = true;
                }
                if (!advanced)
                    throw std::logic_error("max_dpartition_weight: witness reconstruction failed");
            }
        } catch (const BudgetExceeded&) {
            completed = false;  // best/best_chosen hold the deepest incumbent prefix
        }
    } else {
        // order-free: include/exclude over the canonical candidate order,
        // one pass maximizing weight and one maximizing size
        std::vector<Rational> suffix(candidates.size() + 1, Rational(0));
        for (std::size_t i = candidates.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];
        std::vector<std::size_t> chosen;
        Rational current_weight = 0;

        auto compatible_with_chosen = [&](std::size_t idx) {
            for (std::size_t c : chosen)
                if (!orderly_overlap(candidates[c], candidates[idx]) ||
                    !orderly_overlap(candidates[idx], candidates[c]))
                    return false;
            return true;
        };

        std::function<void(std::size_t)> weight_pass = [&](std::size_t idx) {
            if (!bs.tick()) return;
            if (current_weight > best) {
                best = current_weight;
                best_chosen = chosen;
            }
            if (idx == candidates.size()) return;
            if (current_weight + suffix[idx] < best) return;
            if (compatible_with_chosen(idx)) {
                chosen.push_back(idx);
                current_weight += weights[idx];
                weight_pass(idx + 1);
                current_weight -= weights[idx];
                chosen.pop_back();
                if (bs.exceeded) return;
            }
            weight_pass(idx + 1);
        };
        weight_pass(0);

        std::int64_t best_size = 0;
        std::function<void(std::size_t)> size_pass = [&](std::size_t idx) {
            if (!bs.tick()) return;
            best_size = std::max(best_size, static_cast<std::int64_t>(chosen.size()));
            if (idx == candidates.size()) return;
            if (static_cast<std::int64_t>(chosen.size() + (candidates.size() - idx)) <= best_size)
                return;
            if (compatible_with_chosen(idx)) {
                chosen.push_back(idx);
                size_pass(idx + 1);
                chosen.pop_back();
                if (bs.exceeded) return;
            }
            size_pass(idx + 1);
        };
        size_pass(0);
        aux_max_size = best_size;
        completed = !bs.exceeded;
    }

    DPartitionSystem witness{ground, d, {}};
    for (std::size_t c : best_chosen) witness.members.push_back(candidates[c]);
    if (!is_dpartition_system(witness, skew))
        throw std::logic_error("max_dpartition_weight: witness fails re-verification");
    if (dweight(witness) != best)
        throw std::logic_error("max_dpartition_weight: witness weight mismatch");

    SearchReport report;
    report.query = "max_dpartition_weight";
    report.n = ground.n;
    report.d = d;
    report.skew = skew;
    report.mode = skew ? "memoized_sequence_search" : "exhaustive_family_search";
    report.optimum_weight = best;
    report.optimum_size = static_cast<std::int64_t>(witness.size());
    report.witness_members = std::move(witness);
    report.nodes = bs.nodes;
    report.exhaustive = completed;
    report.wall_ms = bs.wall_ms();
    if (!skew) {
        const Rational conj_bound(d - 1);
        report.conjecture_comparison = best < conj_bound    ? "below_bound"
                                       : best == conj_bound ? "equals_bound"
                                                            : "violates_bound";
        report.aux_max_size = aux_max_size;
    }
    return report;
}

std::optional<std::vector<std::size_t>> ordering_feasible(const std::vector<SetPair>& pairs,
                                                          GroundSize ground) {
    (void)ground;
    if (pairs.size() > 24) throw std::invalid_argument("ordering_feasible: more than 24 pairs");
    for (const SetPair& p : pairs)
        if (intersects(p.A, p.B)) return std::nullopt;  // diagonal disjointness is unfixable

    // Whether a completion exists depends only on the set of placed pairs;
    // dead families are remembered to keep the backtracking tame.
    std::unordered_set<std::uint32_t> dead;
    std::vector<std::size_t> order;
    std::function<bool(std::uint32_t)> place = [&](std::uint32_t used) -> bool {
        if (order.size() == pairs.size()) return true;
        if (dead.count(used)) return false;
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            if (used & (1u << c)) continue;
            bool feasible = true;
            for (std::size_t p : order)
                if (!intersects(pairs[p].A, pairs[c].B)) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            order.push_back(c);
            if (place(used | (1u << c))) return true;
            order.pop_back();
        }
        if (dead.size() < (1u << 22)) dead.insert(used);
        return false;
    };
    if (place(0)) return order;
    return std::nullopt;
}

}  // namespace bollobas

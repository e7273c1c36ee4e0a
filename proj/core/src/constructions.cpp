#include "bollobas/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bollobas {

namespace {

// |A| non-increasing, ties ascending mask value.
bool canonical_pair_order(SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits < b.bits;
}

SubsetMask initial_segment(int t) {
    if (t == 0) return SubsetMask{};
    return SubsetMask{t >= 64 ? ~0ull : (1ull << t) - 1};
}

// All k-subsets of the low `width` bit positions, ascending numeric order.
std::vector<std::uint64_t> fixed_size_masks(int width, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > width) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t s = (1ull << k) - 1;
    const std::uint64_t limit = width >= 64 ? ~0ull : (1ull << width) - 1;
    while (true) {
        out.push_back(s);
        std::uint64_t low = s & (~s + 1);
        std::uint64_t carry = s + low;
        if (carry > limit || carry == 0) break;
        s = carry | (((s ^ carry) / low) >> 2);
    }
    return out;
}

}  // namespace

SetPairSystem full_power_set_system(GroundSize ground) {
    if (ground.n > 20)
        throw std::invalid_argument("full_power_set_system: n > 20 materializes too many pairs");
    std::vector<SubsetMask> subsets;
    subsets.reserve(1ull << ground.n);
    for (std::uint64_t a = 0; a <= ground.universe(); ++a)
        subsets.push_back(SubsetMask{a});
    std::sort(subsets.begin(), subsets.end(), canonical_pair_order);
    SetPairSystem system{ground, {}};
    system.pairs.reserve(subsets.size());
    for (SubsetMask a : subsets) system.pairs.push_back({a, complement(a, ground)});
    return system;
}

bool valid_complement_ordering(const std::vector<SubsetMask>& subsets, GroundSize ground) {
    if (ground.n > 20)
        throw std::invalid_argument("valid_complement_ordering: n > 20 unsupported");
    if (subsets.size() != (1ull << ground.n))
        throw std::invalid_argument("valid_complement_ordering: not a permutation of the power set");
    std::unordered_set<std::uint64_t> seen;
    for (SubsetMask a : subsets) {
        if (!a.fits(ground) || !seen.insert(a.bits).second)
            throw std::invalid_argument("valid_complement_ordering: not a permutation of the power set");
    }

    SetPairSystem system{ground, {}};
    system.pairs.reserve(subsets.size());
    for (SubsetMask a : subsets) system.pairs.push_back({a, complement(a, ground)});
    bool direct = is_skew_bollobas(system);

    bool no_forward_containment = true;
    for (std::size_t i = 0; i + 1 < subsets.size() && no_forward_containment; ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (subsets[i].subset_of(subsets[j])) {
                no_forward_containment = false;
                break;
            }

    if (direct != no_forward_containment)
        throw std::logic_error("valid_complement_ordering: criteria disagree");
    return direct;
}

SetPairSystem furedi_construction(int a, int b, int t) {
    if (a < 0 || b < 0 || t < 0) throw std::invalid_argument("furedi_construction: negative parameter");
    if (a + b + t > 64) throw std::invalid_argument("furedi_construction: a+b+t > 64");
    GroundSize ground(a + b + t);
    SubsetMask head = initial_segment(t);
    SubsetMask tail = complement(head, ground);  // [t+1, a+b+t]

    SetPairSystem system{ground, {}};
    // ascending mask order of A = head | (free bits shifted past [t])
    for (std::uint64_t free : fixed_size_masks(a + b, a)) {
        SubsetMask A = head | SubsetMask{free << t};
        system.pairs.push_back({A, head | (tail - A)});
    }
    return system;
}

SetPairSystem t_system_construction(GroundSize ground, int t) {
    if (t < 0 || t > ground.n) throw std::invalid_argument("t_system_construction: t out of [0, n]");
    if (ground.n - t > 20)
        throw std::invalid_argument("t_system_construction: n - t > 20 materializes too many pairs");
    SubsetMask head = initial_segment(t);
    SubsetMask tail = complement(head, ground);

    std::vector<SubsetMask> supersets;
    supersets.reserve(1ull << (ground.n - t));
    if (ground.n == t) {
        supersets.push_back(head);
    } else {
        for (std::uint64_t free = 0; free <= (tail.bits >> t); ++free)
            supersets.push_back(head | SubsetMask{free << t});
    }
    std::sort(supersets.begin(), supersets.end(), canonical_pair_order);

    SetPairSystem system{ground, {}};
    system.pairs.reserve(supersets.size());
    for (SubsetMask A : supersets) system.pairs.push_back({A, head | (tail - A)});
    return system;
}

DPartitionSystem lex_full_dpartitions(GroundSize ground, int d) {
    if (d < 1) throw std::invalid_argument("lex_full_dpartitions: d must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < ground.n; ++i) {
        total *= static_cast<std::uint64_t>(d);
        if (total > (1ull << 20))
            throw std::invalid_argument("lex_full_dpartitions: d^n > 2^20");
    }

    std::vector<DPartition> members;
    members.reserve(total);
    // every assignment [n] -> [d] in base-d counting order
    for (std::uint64_t code = 0; code < total; ++code) {
        DPartition part;
        part.blocks.assign(d, SubsetMask{});
        std::uint64_t c = code;
        for (int e = 0; e < ground.n; ++e) {
            part.blocks[c % d].bits |= 1ull << e;
            c /= d;
        }
        members.push_back(std::move(part));
    }

    auto size_vector = [](const DPartition& p) {
        std::vector<int> sv;
        sv.reserve(p.blocks.size());
        for (SubsetMask b : p.blocks) sv.push_back(b.size());
        return sv;
    };
    std::sort(members.begin(), members.end(), [&](const DPartition& x, const DPartition& y) {
        auto sx = size_vector(x), sy = size_vector(y);
        if (sx != sy) return sx > sy;  // larger first differing coordinate earlier
        for (std::size_t k = 0; k < x.blocks.size(); ++k)
            if (x.blocks[k].bits != y.blocks[k].bits) return x.blocks[k].bits < y.blocks[k].bits;
        return false;
    });

    return DPartitionSystem{ground, d, std::move(members)};
}

namespace {

void enumerate_sized_blocks(SubsetMask remaining, const std::vector<int>& parts, std::size_t next,
                            DPartition& current, std::vector<DPartition>& out) {
    if (next == parts.size()) {
        out.push_back(current);
        return;
    }
    std::uint64_t rem = remaining.bits;
    for (std::uint64_t sub = rem;; sub = (sub - 1) & rem) {
        if (std::popcount(sub) == parts[next]) {
            current.blocks[next] = SubsetMask{sub};
            enumerate_sized_blocks(remaining - SubsetMask{sub}, parts, next + 1, current, out);
        }
        if (sub == 0) break;
    }
}

}  // namespace

DPartitionSystem all_full_dpartitions(const std::vector<int>& parts) {
    std::int64_t b = 0;
    std::vector<std::int64_t> sizes;
    for (int a : parts) {
        if (a < 1) throw std::invalid_argument("all_full_dpartitions: parts must be positive");
        b += a;
        sizes.push_back(a);
    }
    if (b > 12) throw std::invalid_argument("all_full_dpartitions: sum of parts > 12");
    if (multinomial(sizes) > (1 << 20))
        throw std::invalid_argument("all_full_dpartitions: more than 2^20 members");
    GroundSize ground(static_cast<int>(b));

    std::vector<DPartition> members;
    DPartition scratch;
    scratch.blocks.assign(parts.size(), SubsetMask{});
    enumerate_sized_blocks(SubsetMask{ground.universe()}, parts, 0, scratch, members);
    std::reverse(members.begin(), members.end());
    return DPartitionSystem{ground, static_cast<int>(parts.size()), std::move(members)};
}

SetPairSystem saturate(const SetPairSystem& system, const SaturateObserver& on_step) {
    if (!system.well_formed() || !is_skew_bollobas(system))
        throw std::invalid_argument("saturate: input is not a skew Bollobas system");
    if (system.ground.n > 20)
        throw std::invalid_argument("saturate: n > 20 can materialize too many pairs");

    SetPairSystem out = system;
    const SubsetMask universe{out.ground.universe()};
    for (std::size_t i = 0; i < out.pairs.size();) {
        SubsetMask used = out.pairs[i].A | out.pairs[i].B;
        if (used == universe) {
            ++i;
            continue;
        }
        SubsetMask missing = universe - used;
        SubsetMask x{missing.bits & (~missing.bits + 1)};  // lowest missing element
        SetPair original = out.pairs[i];
        out.pairs[i] = {original.A | x, original.B};
        out.pairs.insert(out.pairs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                         {original.A, original.B | x});
        if (on_step) on_step(out);
        // stay on index i: the first replacement pair may still be deficient
    }
    return out;
}

SetPairSystem saturate(const SetPairSystem& system) { return saturate(system, {}); }

}  // namespace bollobas

#include "bollobas/sets.hpp"

#include <stdexcept>

namespace bollobas {

GroundSize::GroundSize(int size) : n(size) {
    if (size < 0 || size > 64)
        throw std::invalid_argument("ground size must be in [0, 64]");
}

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
    SubsetMask m;
    for (int e : elements) {
        if (e < 1 || e > 64) throw std::invalid_argument("element out of [1, 64]");
        m.bits |= 1ull << (e - 1);
    }
    return m;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string to_string(SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (int e : m.elements()) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

bool SetPairSystem::well_formed() const {
    for (const SetPair& p : pairs)
        if (!p.A.fits(ground) || !p.B.fits(ground)) return false;
    return true;
}

SubsetMask DPartition::support() const {
    SubsetMask u;
    for (SubsetMask b : blocks) u = u | b;
    return u;
}

bool DPartition::disjoint() const {
    std::uint64_t seen = 0;
    for (SubsetMask b : blocks) {
        if (seen & b.bits) return false;
        seen |= b.bits;
    }
    return true;
}

bool DPartitionSystem::well_formed() const {
    for (const DPartition& m : members) {
        if (m.d() != d) return false;
        if (!m.support().fits(ground)) return false;
        if (!m.disjoint()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

VerifyResult check_bollobas(const SetPairSystem& system) {
    const auto& p = system.pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (intersects(p[i].A, p[i].B))
            return Violation{i, i, "A_i and B_i are not disjoint"};
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j && !intersects(p[i].A, p[j].B))
                return Violation{i, j, "A_i does not meet B_j"};
    return std::nullopt;
}

VerifyResult check_skew_bollobas(const SetPairSystem& system) {
    const auto& p = system.pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (intersects(p[i].A, p[i].B))
            return Violation{i, i, "A_i and B_i are not disjoint"};
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (!intersects(p[i].A, p[j].B))
                return Violation{i, j, "A_i does not meet B_j"};
    return std::nullopt;
}

VerifyResult check_t_system(const SetPairSystem& system, int t, bool skew) {
    if (t < 0) throw std::invalid_argument("t must be >= 0");
    const auto& p = system.pairs;
    for (std::size_t i = 0; i < p.size(); ++i)
        if ((p[i].A & p[i].B).size() > t)
            return Violation{i, i, "|A_i & B_i| exceeds t"};
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t j_begin = skew ? i + 1 : 0;
        for (std::size_t j = j_begin; j < p.size(); ++j)
            if (i != j && (p[i].A & p[j].B).size() <= t)
                return Violation{i, j, "|A_i & B_j| not above t"};
    }
    return std::nullopt;
}

bool is_bollobas(const SetPairSystem& s) { return !check_bollobas(s); }
bool is_skew_bollobas(const SetPairSystem& s) { return !check_skew_bollobas(s); }
bool is_t_system(const SetPairSystem& s, int t, bool skew) { return !check_t_system(s, t, skew); }

bool is_antichain(const std::vector<SubsetMask>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (i != j && family[i].subset_of(family[j])) return false;
    return true;
}

bool orderly_overlap(const DPartition& P, const DPartition& Q) {
    // exists p < q with P[p] & Q[q] != 0, i.e. some block of Q meets the
    // union of the strictly earlier blocks of P.
    SubsetMask prefix;
    int d = P.d();
    for (int q = 1; q < d; ++q) {
        prefix = prefix | P.blocks[q - 1];
        if (intersects(prefix, Q.blocks[q])) return true;
    }
    return false;
}

VerifyResult check_dpartition_system(const DPartitionSystem& system, bool skew) {
    const auto& m = system.members;
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!orderly_overlap(m[i], m[j]))
                return Violation{i, j, "members do not orderly overlap as (i, j)"};
            if (!skew && !orderly_overlap(m[j], m[i]))
                return Violation{j, i, "members do not orderly overlap as (j, i)"};
        }
    return std::nullopt;
}

bool is_dpartition_system(const DPartitionSystem& s, bool skew) {
    return !check_dpartition_system(s, skew);
}

// ---------------------------------------------------------------------------

Rational pair_weight(const SetPair& pair) {
    int a = pair.A.size(), b = pair.B.size();
    return Rational(1, binomial(a + b, a));
}

Rational weight(const SetPairSystem& system) {
    Rational w = 0;
    for (const SetPair& p : system.pairs) w += pair_weight(p);
    return w;
}

Rational lym_weight(const std::vector<SubsetMask>& family, GroundSize ground) {
    Rational w = 0;
    for (SubsetMask f : family) w += Rational(1, binomial(ground.n, f.size()));
    return w;
}

Rational dpartition_weight(const DPartition& member) {
    std::vector<std::int64_t> sizes;
    sizes.reserve(member.blocks.size());
    for (SubsetMask b : member.blocks) sizes.push_back(b.size());
    return Rational(1, multinomial(sizes));
}

Rational dweight(const DPartitionSystem& system) {
    Rational w = 0;
    for (const DPartition& m : system.members) w += dpartition_weight(m);
    return w;
}

}  // namespace bollobas

#include "bollobas/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace bollobas {

MultiVector basis_blade(int ambient, SubsetMask indices, std::uint64_t coeff) {
    MultiVector mv;
    mv.ambient = ambient;
    if (coeff != 0) mv.terms[indices.bits] = coeff;
    return mv;
}

MultiVector multivector_scale(const PrimeField& field, const MultiVector& u, std::uint64_t c) {
    MultiVector out;
    out.ambient = u.ambient;
    if (c == 0) return out;
    for (const auto& [mask, coeff] : u.terms) out.terms[mask] = field.mul(coeff, c);
    return out;
}

MultiVector multivector_add(const PrimeField& field, const MultiVector& u, const MultiVector& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("multivector_add: ambient mismatch");
    MultiVector out = u;
    for (const auto& [mask, coeff] : v.terms) {
        std::uint64_t sum = field.add(out.terms.count(mask) ? out.terms[mask] : 0, coeff);
        if (sum == 0)
            out.terms.erase(mask);
        else
            out.terms[mask] = sum;
    }
    return out;
}

int blade_inversions(SubsetMask A, SubsetMask B) {
    int inversions = 0;
    for (std::uint64_t b = B.bits; b != 0; b &= b - 1) {
        int pos = std::countr_zero(b);
        // elements of A strictly above this element of B
        std::uint64_t above = pos == 63 ? 0 : (A.bits >> (pos + 1));
        inversions += std::popcount(above);
    }
    return inversions;
}

MultiVector wedge(const PrimeField& field, const MultiVector& u, const MultiVector& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("wedge: ambient mismatch");
    MultiVector out;
    out.ambient = u.ambient;
    for (const auto& [ma, ca] : u.terms) {
        for (const auto& [mb, cb] : v.terms) {
            if (ma & mb) continue;  // repeated index kills the blade
            std::uint64_t coeff = field.mul(ca, cb);
            if (blade_inversions(SubsetMask{ma}, SubsetMask{mb}) & 1) coeff = field.neg(coeff);
            const std::uint64_t mask = ma | mb;
            std::uint64_t sum = field.add(out.terms.count(mask) ? out.terms[mask] : 0, coeff);
            if (sum == 0)
                out.terms.erase(mask);
            else
                out.terms[mask] = sum;
        }
    }
    return out;
}

MultiVector subspace_wedge(const PrimeField& field, const Subspace& S) {
    MultiVector product = basis_blade(S.ambient, SubsetMask{}, 1);
    for (const FieldVec& row : S.basis) {
        MultiVector factor;
        factor.ambient = S.ambient;
        for (int j = 0; j < S.ambient; ++j)
            if (row[static_cast<std::size_t>(j)] != 0)
                factor.terms[1ull << j] = row[static_cast<std::size_t>(j)];
        product = wedge(field, product, factor);
    }
    return product;
}

int multivector_rank(const PrimeField& field, const std::vector<MultiVector>& vectors) {
    // sparse elimination keyed on the smallest blade of each pivot row
    std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> pivots;
    int rank = 0;
    for (const MultiVector& v : vectors) {
        std::map<std::uint64_t, std::uint64_t> row = v.terms;
        while (!row.empty()) {
            const std::uint64_t lead = row.begin()->first;
            auto pivot = pivots.find(lead);
            if (pivot == pivots.end()) {
                const std::uint64_t scale = field.inv(row.begin()->second);
                for (auto& [mask, coeff] : row) coeff = field.mul(coeff, scale);
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            const std::uint64_t factor = row.begin()->second;
            for (const auto& [mask, coeff] : pivot->second) {
                const std::uint64_t delta = field.mul(factor, coeff);
                auto it = row.find(mask);
                const std::uint64_t value = field.sub(it == row.end() ? 0 : it->second, delta);
                if (value == 0) {
                    if (it != row.end()) row.erase(it);
                } else {
                    row[mask] = value;
                }
            }
        }
    }
    return rank;
}

bool triangular_independence(const PrimeField& field, const std::vector<MultiVector>& vectors,
                             const std::vector<MultiVector>& witnesses) {
    if (vectors.size() != witnesses.size())
        throw std::invalid_argument("triangular_independence: length mismatch");
    const std::size_t m = vectors.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const bool nonzero = !wedge(field, vectors[i], witnesses[j]).is_zero();
            if (i == j && !nonzero) return false;
            if (i < j && nonzero) return false;
        }
    return multivector_rank(field, vectors) == static_cast<int>(m);
}

bool trivial_intersection(const PrimeField& field, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("trivial_intersection: ambient mismatch");
    const bool by_wedge = !wedge(field, subspace_wedge(field, U), subspace_wedge(field, V)).is_zero();
    const bool by_rank = intersection_dim(field, U, V) == 0;
    if (by_wedge != by_rank)
        throw std::logic_error("trivial_intersection: wedge and rank criteria disagree");
    return by_wedge;
}

}  // namespace bollobas

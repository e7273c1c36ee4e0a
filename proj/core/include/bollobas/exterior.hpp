#pragma once

#include <cstdint>
#include <map>

#include "bollobas/linalg.hpp"
#include "bollobas/sets.hpp"

namespace bollobas {

// Sparse element of the 2^n-dimensional exterior algebra over F_p, written
// in the basis indexed by subsets of [n]. Zero coefficients are never
// stored, so is_zero() is just an emptiness test.
struct MultiVector {
    int ambient = 0;
    std::map<std::uint64_t, std::uint64_t> terms;  // subset mask -> nonzero coeff

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MultiVector&) const = default;
};

MultiVector basis_blade(int ambient, SubsetMask indices, std::uint64_t coeff = 1);
MultiVector multivector_scale(const PrimeField& field, const MultiVector& u, std::uint64_t c);
MultiVector multivector_add(const PrimeField& field, const MultiVector& u, const MultiVector& v);

// Number of pairs a in A, b in B with a > b; its parity is the sign picked
// up when merging the index lists of two disjoint blades.
int blade_inversions(SubsetMask A, SubsetMask B);

// Bilinear extension of f_A ^ f_B = 0 if A meets B, else +-f_{A|B}.
MultiVector wedge(const PrimeField& field, const MultiVector& u, const MultiVector& v);

// Wedge of the canonical (reduced echelon) basis of S, taken in order.
// dim 0 yields the scalar blade f_{} with coefficient 1. Nonzero for any
// genuine subspace; changing the basis only rescales the result.
MultiVector subspace_wedge(const PrimeField& field, const Subspace& S);

// Rank of the given multivectors as vectors over the 2^n blade coordinates.
int multivector_rank(const PrimeField& field, const std::vector<MultiVector>& vectors);

// Checks the triangular wedge pattern (diagonal nonzero, strict upper
// triangle zero) and, when it holds, confirms independence by computing the
// rank of `vectors`. False as soon as the pattern fails.
bool triangular_independence(const PrimeField& field, const std::vector<MultiVector>& vectors,
                             const std::vector<MultiVector>& witnesses);

// True iff U and V meet only in 0. Evaluates the wedge criterion
// ((^U)^(^V) != 0) and the rank formula dim U + dim V - dim(U+V) == 0 and
// insists they agree; a mismatch would falsify the wedge criterion itself
// and throws logic_error.
bool trivial_intersection(const PrimeField& field, const Subspace& U, const Subspace& V);

}  // namespace bollobas

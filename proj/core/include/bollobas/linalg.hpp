#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bollobas/field.hpp"

namespace bollobas {

using FieldVec = std::vector<std::uint64_t>;
using FieldMatrix = std::vector<FieldVec>;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> row_reduce(const PrimeField& field, FieldMatrix& rows);

int matrix_rank(const PrimeField& field, FieldMatrix rows);

// Subspace of F^ambient in canonical form: the basis rows are the reduced
// row echelon form, so equal subspaces compare equal.
struct Subspace {
    int ambient = 0;
    FieldMatrix basis;

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const Subspace&) const = default;
};

Subspace make_subspace(const PrimeField& field, int ambient, const FieldMatrix& rows);
Subspace zero_subspace(int ambient);
Subspace full_space(int ambient);
// Coordinate subspace span{e_j : j in elements}, 1-based labels.
Subspace coordinate_subspace(int ambient, const std::vector<int>& elements);

bool subspace_contains(const PrimeField& field, const Subspace& space, const FieldVec& v);

Subspace subspace_sum(const PrimeField& field, const Subspace& U, const Subspace& V);
// Zassenhaus: sum and intersection from one elimination over [u|u], [v|0].
Subspace subspace_intersection(const PrimeField& field, const Subspace& U, const Subspace& V);

// dim U + dim V - dim(U + V), via the rank of the stacked bases.
int intersection_dim(const PrimeField& field, const Subspace& U, const Subspace& V);

// Uniformly random k-dimensional subspace (resamples on rank deficiency).
Subspace random_subspace(const PrimeField& field, int ambient, int dim, std::mt19937_64& rng);

}  // namespace bollobas

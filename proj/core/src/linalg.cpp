#include "bollobas/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bollobas {

std::vector<int> row_reduce(const PrimeField& field, FieldMatrix& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows[0].size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < width && next_row < rows.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[next_row], rows[pivot]);
        const std::uint64_t scale = field.inv(rows[next_row][col]);
        for (std::size_t c = col; c < width; ++c)
            rows[next_row][c] = field.mul(rows[next_row][c], scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || rows[r][col] == 0) continue;
            const std::uint64_t factor = rows[r][col];
            for (std::size_t c = col; c < width; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[next_row][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++next_row;
    }
    rows.resize(next_row);
    return pivots;
}

int matrix_rank(const PrimeField& field, FieldMatrix rows) {
    row_reduce(field, rows);
    return static_cast<int>(rows.size());
}

Subspace make_subspace(const PrimeField& field, int ambient, const FieldMatrix& rows) {
    for (const FieldVec& r : rows)
        if (static_cast<int>(r.size()) != ambient)
            throw std::invalid_argument("make_subspace: row width != ambient");
    FieldMatrix reduced = rows;
    for (FieldVec& r : reduced)
        for (std::uint64_t& x : r) x = field.reduce(x);
    row_reduce(field, reduced);
    return Subspace{ambient, std::move(reduced)};
}

Subspace zero_subspace(int ambient) { return Subspace{ambient, {}}; }

Subspace full_space(int ambient) {
    FieldMatrix rows(static_cast<std::size_t>(ambient), FieldVec(static_cast<std::size_t>(ambient), 0));
    for (int i = 0; i < ambient; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return Subspace{ambient, std::move(rows)};
}

Subspace coordinate_subspace(int ambient, const std::vector<int>& elements) {
    FieldMatrix rows;
    rows.reserve(elements.size());
    for (int e : elements) {
        if (e < 1 || e > ambient) throw std::invalid_argument("coordinate_subspace: label out of range");
        FieldVec row(static_cast<std::size_t>(ambient), 0);
        row[static_cast<std::size_t>(e - 1)] = 1;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return Subspace{ambient, std::move(rows)};
}

bool subspace_contains(const PrimeField& field, const Subspace& space, const FieldVec& v) {
    FieldMatrix rows = space.basis;
    rows.push_back(v);
    return matrix_rank(field, std::move(rows)) == space.dim();
}

Subspace subspace_sum(const PrimeField& field, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    FieldMatrix rows = U.basis;
    rows.insert(rows.end(), V.basis.begin(), V.basis.end());
    return make_subspace(field, U.ambient, rows);
}

Subspace subspace_intersection(const PrimeField& field, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("subspace_intersection: ambient mismatch");
    const std::size_t n = static_cast<std::size_t>(U.ambient);
    FieldMatrix block;
    block.reserve(U.basis.size() + V.basis.size());
    for (const FieldVec& u : U.basis) {
        FieldVec row(2 * n, 0);
        for (std::size_t c = 0; c < n; ++c) row[c] = row[n + c] = u[c];
        block.push_back(std::move(row));
    }
    for (const FieldVec& v : V.basis) {
        FieldVec row(2 * n, 0);
        for (std::size_t c = 0; c < n; ++c) row[c] = v[c];
        block.push_back(std::move(row));
    }
    row_reduce(field, block);
    FieldMatrix inter;
    for (const FieldVec& row : block) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = row[c] == 0;
        if (!left_zero) continue;
        FieldVec w(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
        bool right_zero = true;
        for (std::uint64_t x : w)
            if (x != 0) { right_zero = false; break; }
        if (!right_zero) inter.push_back(std::move(w));
    }
    return make_subspace(field, U.ambient, inter);
}

int intersection_dim(const PrimeField& field, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("intersection_dim: ambient mismatch");
    FieldMatrix rows = U.basis;
    rows.insert(rows.end(), V.basis.begin(), V.basis.end());
    return U.dim() + V.dim() - matrix_rank(field, std::move(rows));
}

Subspace random_subspace(const PrimeField& field, int ambient, int dim, std::mt19937_64& rng) {
    if (dim < 0 || dim > ambient) throw std::invalid_argument("random_subspace: dim out of [0, ambient]");
    while (true) {
        FieldMatrix rows(static_cast<std::size_t>(dim), FieldVec(static_cast<std::size_t>(ambient), 0));
        for (FieldVec& row : rows)
            for (std::uint64_t& x : row) x = rng() % field.modulus();
        Subspace s = make_subspace(field, ambient, rows);
        if (s.dim() == dim) return s;
    }
}

}  // namespace bollobas

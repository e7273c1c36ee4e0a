#include "bollobas/certify.hpp"

#include <algorithm>

#include "bollobas/rational.hpp"

namespace bollobas {

std::vector<SubspacePair> lift_set_system(const SetPairSystem& system) {
    if (!system.well_formed()) throw std::invalid_argument("lift_set_system: malformed system");
    if (system.ground.n > 20) throw std::invalid_argument("lift_set_system: n > 20");
    std::vector<SubspacePair> out;
    out.reserve(system.pairs.size());
    for (const SetPair& p : system.pairs)
        out.emplace_back(coordinate_subspace(system.ground.n, p.A.elements()),
                         coordinate_subspace(system.ground.n, p.B.elements()));
    return out;
}

GeneralPositionSample random_general_position_subspace(const PrimeField& field, int ambient,
                                                       const std::vector<Subspace>& constraints,
                                                       int codim, std::mt19937_64& rng,
                                                       int max_tries) {
    if (codim < 0 || codim > ambient)
        throw std::invalid_argument("random_general_position_subspace: codim out of [0, ambient]");
    for (const Subspace& w : constraints) {
        if (w.ambient != ambient)
            throw std::invalid_argument("random_general_position_subspace: ambient mismatch");
        if (w.dim() >= ambient)
            throw std::invalid_argument("random_general_position_subspace: constraint is not proper");
    }
    const int k = ambient - codim;
    std::vector<int> violated;
    for (int attempt = 1; attempt <= max_tries; ++attempt) {
        FieldMatrix rows(static_cast<std::size_t>(k), FieldVec(static_cast<std::size_t>(ambient), 0));
        for (FieldVec& row : rows)
            for (std::uint64_t& x : row) x = rng() % field.modulus();
        Subspace candidate = make_subspace(field, ambient, rows);
        violated.clear();
        if (candidate.dim() != k) {
            violated.push_back(-1);  // rank-deficient sample
            continue;
        }
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            const int want = std::max(constraints[i].dim() - codim, 0);
            if (intersection_dim(field, constraints[i], candidate) != want)
                violated.push_back(static_cast<int>(i));
        }
        if (violated.empty()) return GeneralPositionSample{std::move(candidate), attempt};
    }
    throw SamplingError("general-position sampling exhausted its tries", violated);
}

namespace {

// Coordinates of S relative to the echelon basis of W0. Requires S <= W0.
Subspace express_in_basis(const PrimeField& field, const Subspace& S, const Subspace& w0,
                          const std::vector<int>& pivots) {
    FieldMatrix coords;
    coords.reserve(S.basis.size());
    for (const FieldVec& s : S.basis) {
        FieldVec c(static_cast<std::size_t>(w0.dim()), 0);
        for (int j = 0; j < w0.dim(); ++j)
            c[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(pivots[static_cast<std::size_t>(j)])];
        // reconstruct and compare: catches any S not inside W0
        FieldVec rebuilt(static_cast<std::size_t>(w0.ambient), 0);
        for (int j = 0; j < w0.dim(); ++j)
            for (int col = 0; col < w0.ambient; ++col)
                rebuilt[static_cast<std::size_t>(col)] =
                    field.add(rebuilt[static_cast<std::size_t>(col)],
                              field.mul(c[static_cast<std::size_t>(j)],
                                        w0.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)]));
        if (rebuilt != s)
            throw std::logic_error("reduce_to_zero: subspace escapes the general-position subspace");
        coords.push_back(std::move(c));
    }
    return make_subspace(field, w0.dim(), coords);
}

void append_constraint(std::vector<Subspace>& constraints, Subspace candidate, int ambient) {
    if (candidate.dim() >= ambient) return;  // full space: vacuous for general position
    if (std::find(constraints.begin(), constraints.end(), candidate) == constraints.end())
        constraints.push_back(std::move(candidate));
}

}  // namespace

ReducedSystem reduce_to_zero(const PrimeField& field, const std::vector<SubspacePair>& pairs, int t,
                             std::mt19937_64& rng, int max_tries) {
    if (t < 0) throw std::invalid_argument("reduce_to_zero: t must be >= 0");
    int ambient = pairs.empty() ? 0 : pairs[0].first.ambient;
    for (const auto& [u, v] : pairs)
        if (u.ambient != ambient || v.ambient != ambient)
            throw std::invalid_argument("reduce_to_zero: ambient mismatch");
    if (t > ambient) throw std::invalid_argument("reduce_to_zero: t exceeds ambient dimension");

    if (t == 0) {
        ReducedSystem identity{pairs, full_space(ambient), ambient, ambient, 0};
        return identity;
    }

    std::vector<Subspace> diag;
    diag.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        Subspace meet = subspace_intersection(field, u, v);
        if (meet.dim() > t)
            throw std::invalid_argument("reduce_to_zero: dim(U_i & V_i) exceeds t");
        diag.push_back(std::move(meet));
    }

    std::vector<Subspace> constraints;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        append_constraint(constraints, pairs[i].first, ambient);
        append_constraint(constraints, pairs[i].second, ambient);
        append_constraint(constraints, diag[i], ambient);
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (i != j)
                append_constraint(constraints,
                                  subspace_intersection(field, pairs[i].first, pairs[j].second),
                                  ambient);
    }

    GeneralPositionSample sample =
        random_general_position_subspace(field, ambient, constraints, t, rng, max_tries);
    const Subspace& w0 = sample.subspace;
    FieldMatrix w0_rows = w0.basis;
    std::vector<int> pivots = row_reduce(field, w0_rows);  // basis already reduced; collect pivots

    ReducedSystem out;
    out.w0 = w0;
    out.ambient = ambient;
    out.reduced_ambient = ambient - t;
    out.tries = sample.tries;
    out.pairs.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Subspace u_cut = subspace_intersection(field, pairs[i].first, w0);
        Subspace v_cut = subspace_intersection(field, pairs[i].second, w0);
        if (intersection_dim(field, u_cut, v_cut) != 0)
            throw std::logic_error("reduce_to_zero: diagonal intersection survived the cut");
        out.pairs.emplace_back(express_in_basis(field, u_cut, w0, pivots),
                               express_in_basis(field, v_cut, w0, pivots));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            Subspace cross = subspace_intersection(field, pairs[i].first, pairs[j].second);
            if (cross.dim() > t &&
                intersection_dim(field, out.pairs[i].first, out.pairs[j].second) == 0)
                throw std::logic_error("reduce_to_zero: a cross intersection collapsed");
        }
    return out;
}

Certificate certify_skew_system(const PrimeField& field, const std::vector<SubspacePair>& pairs,
                                int t, std::uint64_t seed, int max_tries) {
    Certificate cert;
    cert.m = static_cast<int>(pairs.size());
    cert.ambient = pairs.empty() ? 0 : pairs[0].first.ambient;
    cert.t = t;
    cert.field_prime = field.modulus();
    cert.seed = seed;
    if (t < 0 || t > cert.ambient)
        throw std::invalid_argument("certify_skew_system: t out of [0, ambient]");
    cert.reduced_ambient = cert.ambient - t;
    cert.bound = 1ull << cert.reduced_ambient;

    std::vector<SubspacePair> working = pairs;
    if (t > 0) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (intersection_dim(field, pairs[i].first, pairs[i].second) > t) {
                cert.offending = {static_cast<int>(i), static_cast<int>(i)};
                cert.verdict = false;
                return cert;
            }
        std::mt19937_64 rng(seed);
        working = reduce_to_zero(field, pairs, t, rng, max_tries).pairs;
    }

    const std::size_t m = working.size();
    std::vector<MultiVector> u_vecs, v_vecs;
    u_vecs.reserve(m);
    v_vecs.reserve(m);
    for (const auto& [u, v] : working) {
        u_vecs.push_back(subspace_wedge(field, u));
        v_vecs.push_back(subspace_wedge(field, v));
    }

    cert.pattern.assign(m, std::vector<std::uint8_t>(m, 0));
    bool pattern_ok = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            cert.pattern[i][j] = wedge(field, u_vecs[i], v_vecs[j]).is_zero() ? 0 : 1;
    for (std::size_t i = 0; i < m && pattern_ok; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const bool nonzero = cert.pattern[i][j] != 0;
            if ((i == j && !nonzero) || (i < j && nonzero)) {
                cert.offending = {static_cast<int>(i), static_cast<int>(j)};
                pattern_ok = false;
                break;
            }
        }

    cert.rank = multivector_rank(field, u_vecs);

    if (!working.empty()) {
        const int grade = working[0].first.dim();
        bool uniform = std::all_of(working.begin(), working.end(),
                                   [&](const SubspacePair& p) { return p.first.dim() == grade; });
        if (uniform) {
            BigInt cap = binomial(cert.reduced_ambient, grade);
            cert.uniform_grade_bound = static_cast<std::uint64_t>(cap);
        }
    }

    cert.verdict = pattern_ok && cert.rank == cert.m &&
                   static_cast<std::uint64_t>(cert.m) <= cert.bound;
    return cert;
}

}  // namespace bollobas

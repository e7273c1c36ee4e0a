#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bollobas/exterior.hpp"
#include "bollobas/linalg.hpp"
#include "bollobas/sets.hpp"

namespace bollobas {

using SubspacePair = std::pair<Subspace, Subspace>;

// (A_i, B_i) -> (span{e_j : j in A_i}, span{e_j : j in B_i}).
// Intersection dimensions of the images equal the set intersection sizes.
std::vector<SubspacePair> lift_set_system(const SetPairSystem& system);

// Raised when general-position sampling exhausts its tries: the modulus is
// too small for the instance, or the seed was unlucky.
class SamplingError : public std::runtime_error {
public:
    SamplingError(std::string message, std::vector<int> violated_constraints)
        : std::runtime_error(std::move(message)), violated(std::move(violated_constraints)) {}
    std::vector<int> violated;
};

struct GeneralPositionSample {
    Subspace subspace;
    int tries = 0;
};

// Uniformly random (n - codim)-dimensional subspace V' with
// dim(W_i & V') == max(dim W_i - codim, 0) for every constraint W_i.
// Constraints must be proper (dim < ambient). Throws SamplingError after
// max_tries failed samples.
GeneralPositionSample random_general_position_subspace(const PrimeField& field, int ambient,
                                                       const std::vector<Subspace>& constraints,
                                                       int codim, std::mt19937_64& rng,
                                                       int max_tries);

struct ReducedSystem {
    std::vector<SubspacePair> pairs;  // re-expressed in W_0 coordinates
    Subspace w0;                      // the general-position subspace used
    int ambient = 0;                  // original n
    int reduced_ambient = 0;          // n - t
    int tries = 0;
};

// Cuts every pair with a codimension-t subspace W_0 in general position
// w.r.t. all U_i, V_i, U_i & V_i and the cross intersections U_i & V_j,
// then rewrites (U_i & W_0, V_i & W_0) in an (n - t)-dimensional coordinate
// system. Requires dim(U_i & V_i) <= t; diagonal intersections vanish and
// cross intersections of dimension > t stay nontrivial.
ReducedSystem reduce_to_zero(const PrimeField& field, const std::vector<SubspacePair>& pairs,
                             int t, std::mt19937_64& rng, int max_tries = 64);

// Machine-checkable record witnessing the independence bound m <= 2^(n-t):
// the wedge-pattern table, the rank of the wedge vectors, and the verdict.
struct Certificate {
    int m = 0;
    int ambient = 0;          // original n
    int reduced_ambient = 0;  // n - t (== ambient when t == 0)
    int t = 0;
    std::uint64_t bound = 0;  // 2^(n-t)
    std::vector<std::vector<std::uint8_t>> pattern;  // 1 = nonzero wedge
    int rank = 0;
    bool verdict = false;
    std::optional<std::pair<int, int>> offending;  // first bad cell, 0-based
    // When every reduced U_i has the same dimension a, the wedge vectors all
    // live in the grade-a component, whose dimension C(n - t, a) is a second
    // (often much smaller) cap on m.
    std::optional<std::uint64_t> uniform_grade_bound;
    std::uint64_t field_prime = PrimeField::kDefaultPrime;
    std::uint64_t seed = 0;
};

// Full certification pipeline: for t = 0 builds the wedge pattern and runs
// the triangular-independence check; for t > 0 first reduces to the t = 0
// case in ambient dimension n - t. Hypothesis violations come back as a
// failed Certificate carrying the offending cell, not as an exception.
// SamplingError propagates.
Certificate certify_skew_system(const PrimeField& field, const std::vector<SubspacePair>& pairs,
                                int t, std::uint64_t seed, int max_tries = 64);

}  // namespace bollobas

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>

#include "qlr/errors.hpp"

namespace qlr {

inline constexpr double kDefaultTol = 1e-9;

// Outcome labels for the two dichotomous observables a and b.
// Labels default to +/-1, the qubit convention; only expectation values use them.
struct Spectrum {
    std::array<double, 2> a_labels{+1.0, -1.0};
    std::array<double, 2> b_labels{+1.0, -1.0};
};

// 2x2 matrix of conditional probabilities p[beta][alpha] = P(b=beta | a=alpha).
// Columns are stochastic; rows must also sum to 1 (double stochasticity).
struct TransitionMatrix {
    std::array<std::array<double, 2>, 2> p{};

    double operator()(int beta, int alpha) const { return p[beta][alpha]; }
};

// Probabilistic data for one context: both marginals plus the transition matrix.
// All probabilities strictly positive.
struct ContextData {
    Spectrum spectrum{};
    std::array<double, 2> pa{};  // (P(a=alpha1), P(a=alpha2))
    std::array<double, 2> pb{};  // (P(b=beta1),  P(b=beta2))
    TransitionMatrix matrix{};
};

// Raw frequency counts from two independent samples plus a-conditioned b counts.
// cond_counts[beta][alpha] = occurrences of b=beta within the sub-sample where a=alpha.
struct SampleCounts {
    std::array<std::int64_t, 2> a_counts{};
    std::array<std::int64_t, 2> b_counts{};
    std::array<std::array<std::int64_t, 2>, 2> cond_counts{};
};

// Checks positivity, normalization of both marginals and matrix columns, and
// double stochasticity of the matrix. Deviations within tol are repaired by
// renormalizing; larger deviations throw.
ContextData validate_context(ContextData c, double tol = kDefaultTol);

// Symmetric doubly stochastic matrix [[P, 1-P], [1-P, P]]. Requires 0 < P < 1.
TransitionMatrix ds_matrix_from_P(double P);

// Relative-frequency estimate of a context from raw counts.
ContextData estimate_context(const SampleCounts& counts, double tol = kDefaultTol);

// Context from the (q, p, P) parametrization: pa=(q,1-q), pb=(p,1-p),
// matrix = ds_matrix_from_P(P).
ContextData make_context(double q, double p, double P, double tol = kDefaultTol);

// Parses the counts JSON format:
//   {"a_counts":[n1,n2], "b_counts":[m1,m2], "cond_counts":[[c11,c12],[c21,c22]]}
SampleCounts read_counts_json(std::istream& in);

}  // namespace qlr

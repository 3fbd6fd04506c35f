#pragma once

#include <array>

#include "qlr/prob_model.hpp"

namespace qlr {

enum class Classification { Trigonometric, Hyperbolic };

// The +/- choice in the phase extraction; selects one of two conjugate states.
enum class SignBranch { Plus, Minus };

// Interference data for one context: coefficients lambda, relative phases
// (only meaningful when trigonometric), classification and chosen branch.
struct InterferenceProfile {
    std::array<double, 2> lambda{};  // (lambda_beta1, lambda_beta2)
    std::array<double, 2> phases{};  // (phi_beta1, phi_beta2) in [0, 2pi)
    Classification classification = Classification::Trigonometric;
    SignBranch sign_branch = SignBranch::Plus;
};

// Classical total-probability prediction sum_alpha p^a_alpha p_{beta,alpha}.
double ftp_prediction(const ContextData& c, int beta);

// Coefficient of interference: normalized deviation of p^b_beta from the
// total-probability prediction.
double interference_coefficient(const ContextData& c, int beta);

// Both coefficients, with lambda_beta2 computed independently and
// cross-checked against -lambda_beta1 (a consequence of double stochasticity).
// Throws InternalConsistencyError on discrepancy > 1e-9.
std::array<double, 2> interference_coefficients(const ContextData& c);

// Trigonometric iff max(|lambda_beta1|, |lambda_beta2|) <= 1 (inclusive
// boundary; values within 1e-12 above 1 are treated as 1).
Classification classify(const ContextData& c);

// Phases with cos(phi_beta1) = lambda1 and phi_beta2 = phi_beta1 + pi (mod 2pi).
// Plus branch takes phi_beta1 = acos(lambda1), Minus takes 2pi - acos(lambda1).
// Requires |lambda1| <= 1 (values within 1e-12 above are clamped).
std::array<double, 2> relative_phases(double lambda1, SignBranch sign);

// Right-hand side of the interference formula; reproduces p^b_beta exactly.
double interference_reconstruct(const ContextData& c, int beta);

// Full profile for a context. Phases are set only for trigonometric data;
// hyperbolic profiles carry NaN phases and the Hyperbolic tag.
InterferenceProfile profile_of(const ContextData& c, SignBranch sign = SignBranch::Plus);

}  // namespace qlr

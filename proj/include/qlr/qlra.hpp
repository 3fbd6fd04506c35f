#pragma once

#include <array>
#include <complex>

#include "qlr/interference.hpp"
#include "qlr/prob_model.hpp"

namespace qlr {

using Complex = std::complex<double>;

// Element of the two-dimensional complex space of amplitudes over X_b.
struct ComplexVector2 {
    std::array<Complex, 2> v{};

    Complex operator[](int i) const { return v[i]; }
};

// <u, v> = sum_beta u(beta) * conj(v(beta)).
Complex inner_product(const ComplexVector2& u, const ComplexVector2& w);

enum class BasisLabel { BStandard, AInterference, ACanonical };

// Orthonormal pair of 2-vectors.
struct OperatorBasis {
    std::array<ComplexVector2, 2> vectors{};
    BasisLabel label = BasisLabel::BStandard;
};

// Hermitian 2x2 operator given by an orthonormal eigenbasis and real eigenvalues.
struct Observable {
    OperatorBasis basis{};
    std::array<double, 2> eigenvalues{};
};

// A constructed state with its provenance: the source context and the
// interference profile it was built from.
struct QLState {
    ComplexVector2 psi{};
    ContextData source{};
    InterferenceProfile profile{};
};

// The representation algorithm itself:
//   psi(beta) = sqrt(p^a_alpha1 p_{beta,alpha1}) + e^{i phi_beta} sqrt(p^a_alpha2 p_{beta,alpha2})
// Born's rule holds for both observables by construction. Throws
// NotTrigonometricError when the context fails condition RC.
QLState represent(const ContextData& c, SignBranch sign = SignBranch::Plus);

// Standard basis {(1,0), (0,1)} for the b-observable.
OperatorBasis b_basis();

// Phase-dependent a-basis: f_alpha1 = (sqrt(p11), sqrt(p21)),
// f_alpha2 = (e^{i phi1} sqrt(p12), e^{i phi2} sqrt(p22)). Orthonormal under
// double stochasticity iff phi2 - phi1 = pi mod 2pi; that constraint is checked.
OperatorBasis a_interference_basis(const ContextData& c, const std::array<double, 2>& phases);

// Phase-free a-basis depending only on the transition matrix:
// e_alpha1 = (sqrt(p11), sqrt(p21)), e_alpha2 = (sqrt(p12), -sqrt(p22)).
OperatorBasis a_canonical_basis(const TransitionMatrix& m, double tol = kDefaultTol);

// Coefficients (<psi, v1>, <psi, v2>) of the state in an orthonormal basis.
std::array<Complex, 2> decompose(const QLState& s, const OperatorBasis& basis);

// Born probabilities (|<psi, v1>|^2, |<psi, v2>|^2).
std::array<double, 2> born_probabilities(const QLState& s, const OperatorBasis& basis);

// Dense Hermitian matrix of an observable: sum_i eigenvalue_i v_i v_i^dagger.
std::array<std::array<Complex, 2>, 2> observable_matrix(const Observable& obs);

// Expectation <op psi, psi> computed through the operator matrix.
double expectation(const QLState& s, const Observable& obs);

// Rebuilds the context from the state via Born probabilities in the standard
// and canonical bases; the matrix is passed through unchanged.
ContextData round_trip(const ContextData& c, SignBranch sign = SignBranch::Plus);

}  // namespace qlr

#include "qlr/qlra.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qlr {

namespace {

constexpr double kPhaseTol = 1e-9;

double wrap_to_pi_distance(double delta) {
    // distance of delta from pi, mod 2pi
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double d = std::fmod(delta - std::numbers::pi, two_pi);
    if (d < 0.0) d += two_pi;
    return std::min(d, two_pi - d);
}

}  // namespace

Complex inner_product(const ComplexVector2& u, const ComplexVector2& w) {
    return u[0] * std::conj(w[0]) + u[1] * std::conj(w[1]);
}

QLState represent(const ContextData& c, SignBranch sign) {
    QLState s;
    s.source = c;
    s.profile = profile_of(c, sign);
    if (s.profile.classification != Classification::Trigonometric) {
        std::ostringstream msg;
        msg << "context is hyperbolic (|lambda| = "
            << std::max(std::abs(s.profile.lambda[0]), std::abs(s.profile.lambda[1]))
            << " > 1); no complex amplitude exists";
        throw NotTrigonometricError(msg.str());
    }
    for (int beta = 0; beta < 2; ++beta) {
        const Complex phase = std::polar(1.0, s.profile.phases[beta]);
        s.psi.v[beta] = std::sqrt(c.pa[0] * c.matrix(beta, 0)) +
                        phase * std::sqrt(c.pa[1] * c.matrix(beta, 1));
    }
    return s;
}

OperatorBasis b_basis() {
    OperatorBasis basis;
    basis.vectors[0].v = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    basis.vectors[1].v = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    basis.label = BasisLabel::BStandard;
    return basis;
}

OperatorBasis a_interference_basis(const ContextData& c, const std::array<double, 2>& phases) {
    if (wrap_to_pi_distance(phases[1] - phases[0]) > kPhaseTol) {
        std::ostringstream msg;
        msg << "phases (" << phases[0] << ", " << phases[1]
            << ") do not differ by pi mod 2pi; basis would not be orthonormal";
        throw PhaseConstraintError(msg.str());
    }
    OperatorBasis basis;
    basis.vectors[0].v = {Complex{std::sqrt(c.matrix(0, 0)), 0.0},
                          Complex{std::sqrt(c.matrix(1, 0)), 0.0}};
    basis.vectors[1].v = {std::polar(std::sqrt(c.matrix(0, 1)), phases[0]),
                          std::polar(std::sqrt(c.matrix(1, 1)), phases[1])};
    basis.label = BasisLabel::AInterference;
    return basis;
}

OperatorBasis a_canonical_basis(const TransitionMatrix& m, double tol) {
    for (int beta = 0; beta < 2; ++beta) {
        const double row = m(beta, 0) + m(beta, 1);
        if (std::abs(row - 1.0) > tol) {
            std::ostringstream msg;
            msg << "matrix row " << beta << " sums to " << row << " (not doubly stochastic)";
            throw NotDoublyStochasticError(msg.str());
        }
    }
    OperatorBasis basis;
    basis.vectors[0].v = {Complex{std::sqrt(m(0, 0)), 0.0}, Complex{std::sqrt(m(1, 0)), 0.0}};
    basis.vectors[1].v = {Complex{std::sqrt(m(0, 1)), 0.0}, Complex{-std::sqrt(m(1, 1)), 0.0}};
    basis.label = BasisLabel::ACanonical;
    return basis;
}

std::array<Complex, 2> decompose(const QLState& s, const OperatorBasis& basis) {
    return {inner_product(s.psi, basis.vectors[0]), inner_product(s.psi, basis.vectors[1])};
}

std::array<double, 2> born_probabilities(const QLState& s, const OperatorBasis& basis) {
    const auto coeff = decompose(s, basis);
    return {std::norm(coeff[0]), std::norm(coeff[1])};
}

std::array<std::array<Complex, 2>, 2> observable_matrix(const Observable& obs) {
    std::array<std::array<Complex, 2>, 2> m{};
    for (int i = 0; i < 2; ++i) {
        const auto& v = obs.basis.vectors[i];
        for (int r = 0; r < 2; ++r) {
            for (int col = 0; col < 2; ++col) {
                m[r][col] += obs.eigenvalues[i] * v[r] * std::conj(v[col]);
            }
        }
    }
    return m;
}

double expectation(const QLState& s, const Observable& obs) {
    const auto m = observable_matrix(obs);
    ComplexVector2 applied;
    for (int r = 0; r < 2; ++r) {
        applied.v[r] = m[r][0] * s.psi[0] + m[r][1] * s.psi[1];
    }
    const Complex value = inner_product(applied, s.psi);
    if (std::abs(value.imag()) > 1e-12) {
        std::ostringstream msg;
        msg << "expectation has imaginary residue " << value.imag();
        throw InternalConsistencyError(msg.str());
    }
    return value.real();
}

ContextData round_trip(const ContextData& c, SignBranch sign) {
    const QLState s = represent(c, sign);
    ContextData out = c;
    out.pb = born_probabilities(s, b_basis());
    out.pa = born_probabilities(s, a_canonical_basis(c.matrix));
    return out;
}

}  // namespace qlr

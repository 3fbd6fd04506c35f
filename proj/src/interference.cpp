#include "qlr/interference.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qlr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClampWindow = 1e-12;  // RC boundary rounding guard
constexpr double kCrossCheckTol = 1e-9;

// |lambda| in (1, 1 + 1e-12] collapses to the boundary so rounding cannot
// flip classification.
double clamp_boundary(double lambda) {
    if (lambda > 1.0 && lambda <= 1.0 + kClampWindow) return 1.0;
    if (lambda < -1.0 && lambda >= -1.0 - kClampWindow) return -1.0;
    return lambda;
}

double wrap_phase(double phi) {
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    return phi;
}

}  // namespace

double ftp_prediction(const ContextData& c, int beta) {
    return c.pa[0] * c.matrix(beta, 0) + c.pa[1] * c.matrix(beta, 1);
}

double interference_coefficient(const ContextData& c, int beta) {
    const double ftp = ftp_prediction(c, beta);
    const double denom =
        2.0 * std::sqrt(c.pa[0] * c.matrix(beta, 0) * c.pa[1] * c.matrix(beta, 1));
    return (c.pb[beta] - ftp) / denom;
}

std::array<double, 2> interference_coefficients(const ContextData& c) {
    const double l1 = interference_coefficient(c, 0);
    const double l2 = interference_coefficient(c, 1);
    if (std::abs(l2 + l1) > kCrossCheckTol) {
        std::ostringstream msg;
        msg << "lambda_beta2 = " << l2 << " is not -lambda_beta1 = " << -l1
            << "; the transition matrix is not doubly stochastic";
        throw InternalConsistencyError(msg.str());
    }
    return {l1, l2};
}

Classification classify(const ContextData& c) {
    const auto lambda = interference_coefficients(c);
    const double worst =
        std::max(std::abs(clamp_boundary(lambda[0])), std::abs(clamp_boundary(lambda[1])));
    return worst <= 1.0 ? Classification::Trigonometric : Classification::Hyperbolic;
}

std::array<double, 2> relative_phases(double lambda1, SignBranch sign) {
    lambda1 = clamp_boundary(lambda1);
    if (std::abs(lambda1) > 1.0) {
        std::ostringstream msg;
        msg << "|lambda| = " << std::abs(lambda1) << " > 1; no trigonometric phase exists";
        throw OutOfRangeError(msg.str());
    }
    double phi1 = std::acos(lambda1);
    if (sign == SignBranch::Minus) phi1 = wrap_phase(kTwoPi - phi1);
    const double phi2 = wrap_phase(phi1 + std::numbers::pi);
    return {phi1, phi2};
}

double interference_reconstruct(const ContextData& c, int beta) {
    const double lambda = interference_coefficient(c, beta);
    return ftp_prediction(c, beta) +
           2.0 * lambda *
               std::sqrt(c.pa[0] * c.matrix(beta, 0) * c.pa[1] * c.matrix(beta, 1));
}

InterferenceProfile profile_of(const ContextData& c, SignBranch sign) {
    InterferenceProfile profile;
    profile.lambda = interference_coefficients(c);
    profile.sign_branch = sign;
    profile.classification = classify(c);
    if (profile.classification == Classification::Trigonometric) {
        profile.phases = relative_phases(profile.lambda[0], sign);
    } else {
        profile.phases = {std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN()};
    }
    return profile;
}

}  // namespace qlr

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qlr/interference.hpp"

using namespace qlr;
using std::numbers::pi;

namespace {

// Independent route: evaluate the interference formula directly from (q,p,P)
// in long double, bypassing the library.
long double lambda_oracle(long double q, long double p, long double P) {
    const long double ftp = q * P + (1.0L - q) * (1.0L - P);
    return (p - ftp) / (2.0L * std::sqrt(q * P * (1.0L - q) * (1.0L - P)));
}

}  // namespace

TEST_CASE("ftp_prediction") {
    CHECK(ftp_prediction(make_context(0.5, 0.3, 0.7), 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ftp_prediction(make_context(0.8, 0.5, 0.1), 0) == doctest::Approx(0.26).epsilon(1e-12));
    CHECK(ftp_prediction(make_context(0.3, 0.5, 0.7), 0) == doctest::Approx(0.42).epsilon(1e-12));
}

TEST_CASE("interference_coefficient frozen values") {
    CHECK(interference_coefficient(make_context(0.5, 0.5, 0.5), 0) == 0.0);
    CHECK(interference_coefficient(make_context(0.5, 0.75, 0.5), 0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // frozen from the long double oracle: 4.92468529477013917
    CHECK(interference_coefficient(make_context(0.5, 0.99, 0.01), 0) ==
          doctest::Approx(4.92468529477013917).epsilon(1e-12));
    CHECK(interference_coefficient(make_context(0.5, 0.99, 0.01), 0) ==
          doctest::Approx(static_cast<double>(lambda_oracle(0.5L, 0.99L, 0.01L))));
}

TEST_CASE("classify") {
    CHECK(classify(make_context(0.5, 0.75, 0.5)) == Classification::Trigonometric);
    CHECK(classify(make_context(0.5, 0.99, 0.01)) == Classification::Hyperbolic);

    // boundary: lambda = (0.8-0.5)/(2 sqrt(0.09*0.25)) = 1 exactly
    const auto c = make_context(0.9, 0.8, 0.5);
    CHECK(interference_coefficient(c, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classify(c) == Classification::Trigonometric);
}

TEST_CASE("relative_phases") {
    const auto at_zero = relative_phases(0.0, SignBranch::Plus);
    CHECK(at_zero[0] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(at_zero[1] == doctest::Approx(3 * pi / 2).epsilon(1e-15));

    const auto at_half = relative_phases(0.5, SignBranch::Plus);
    CHECK(at_half[0] == doctest::Approx(pi / 3).epsilon(1e-15));
    CHECK(at_half[1] == doctest::Approx(4 * pi / 3).epsilon(1e-15));
    CHECK(std::cos(at_half[1]) == doctest::Approx(-0.5).epsilon(1e-12));

    const auto at_one = relative_phases(1.0, SignBranch::Plus);
    CHECK(at_one[0] == 0.0);
    CHECK(at_one[1] == doctest::Approx(pi).epsilon(1e-15));

    CHECK_THROWS_AS(relative_phases(1.5, SignBranch::Plus), OutOfRangeError);

    // rounding guard just above the boundary
    CHECK(relative_phases(1.0 + 1e-13, SignBranch::Plus)[0] == 0.0);
}

TEST_CASE("phase constraint holds on both branches") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> lam(-1.0, 1.0);
    constexpr double two_pi = 2 * pi;
    for (int i = 0; i < 500; ++i) {
        const double l = lam(rng);
        for (auto branch : {SignBranch::Plus, SignBranch::Minus}) {
            const auto phi = relative_phases(l, branch);
            CHECK(std::cos(phi[1]) == doctest::Approx(-std::cos(phi[0])).epsilon(1e-12));
            const double delta = std::fmod(phi[1] - phi[0] + two_pi, two_pi);
            CHECK(delta == doctest::Approx(pi).epsilon(1e-12));
            CHECK(phi[0] >= 0.0);
            CHECK(phi[0] < two_pi);
            CHECK(phi[1] >= 0.0);
            CHECK(phi[1] < two_pi);
        }
    }
}

TEST_CASE("interference_reconstruct is an identity") {
    CHECK(interference_reconstruct(make_context(0.5, 0.75, 0.5), 0) ==
          doctest::Approx(0.75).epsilon(1e-14));
    CHECK(interference_reconstruct(make_context(0.5, 0.5, 0.5), 1) ==
          doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int i = 0; i < 2000; ++i) {
        const auto c = make_context(unit(rng), unit(rng), unit(rng));
        for (int beta = 0; beta < 2; ++beta) {
            CHECK(std::abs(interference_reconstruct(c, beta) - c.pb[beta]) <= 1e-12);
        }
    }
}

TEST_CASE("DS antisymmetry of the coefficients") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int i = 0; i < 2000; ++i) {
        const auto c = make_context(unit(rng), unit(rng), unit(rng));
        const auto lambda = interference_coefficients(c);
        CHECK(std::abs(lambda[1] + lambda[0]) <= 1e-12);
    }
}

TEST_CASE("FTP recovery: zero coefficient gives quadrature phases") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double q = unit(rng), P = unit(rng);
        const double p = q * P + (1 - q) * (1 - P);  // p = FTP prediction
        const auto c = make_context(q, p, P);
        CHECK(std::abs(interference_coefficient(c, 0)) <= 1e-12);
        const auto profile = profile_of(c, SignBranch::Plus);
        CHECK(profile.phases[0] == doctest::Approx(pi / 2).epsilon(1e-9));
        const auto mirrored = profile_of(c, SignBranch::Minus);
        CHECK(mirrored.phases[0] == doctest::Approx(3 * pi / 2).epsilon(1e-9));
    }
}

TEST_CASE("classify is invariant under swapping beta1 and beta2") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    for (int i = 0; i < 500; ++i) {
        const auto c = make_context(unit(rng), unit(rng), unit(rng));
        ContextData swapped = c;
        std::swap(swapped.pb[0], swapped.pb[1]);
        std::swap(swapped.matrix.p[0], swapped.matrix.p[1]);
        CHECK(classify(c) == classify(swapped));
    }
}

TEST_CASE("non-DS data tripping the cross-check raises internal inconsistency") {
    ContextData c = make_context(0.4, 0.3, 0.6);
    c.matrix.p = {{{0.6, 0.35}, {0.4, 0.65}}};  // columns stochastic, rows are not
    CHECK_THROWS_AS(interference_coefficients(c), InternalConsistencyError);
}

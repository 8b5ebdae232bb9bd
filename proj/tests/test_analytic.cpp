#include <doctest.h>

#include "test_support.hpp"

using namespace namrqed;
using numerics::Complex;

TEST_CASE("coefficients: frozen values at the published parameter set") {
    const auto c = analytic::coefficients(testsupport::fig2_params());
    CHECK(c.Gamma == doctest::Approx(0.003).epsilon(1e-14));
    CHECK(c.a == doctest::Approx(0.199996).epsilon(1e-12));
    CHECK(c.b == doctest::Approx(0.0008).epsilon(1e-12));
    CHECK(std::abs(c.lambda1 - Complex(0.0025527828267626566, -0.32360500889559707)) < 1e-12);
    CHECK(std::abs(c.lambda2 - Complex(0.0034472171732373436, 0.12360500889559706)) < 1e-12);
    CHECK(std::abs(c.eps - Complex(-0.09992005995523341, -0.002997801638776913)) < 1e-12);
    CHECK(std::abs(c.mu12 - Complex(0.27638783561532065, 0.001788854381742232)) < 1e-12);
}

TEST_CASE("coefficients: symmetric point gives equal weights and rates") {
    model::EffectiveParams p;
    p.delta_a = 0.0;
    p.delta_r = 0.0;
    p.g = 0.2;
    p.gamma = 0.004;
    p.kappa = 0.002;  // kappa = gamma/2
    p.xi = 0.02;
    const auto c = analytic::coefficients(p);
    CHECK(c.b == 0.0);
    CHECK(std::abs(c.mu12 - Complex(0.5)) < 1e-15);
    CHECK(std::abs(c.mu21 - Complex(0.5)) < 1e-15);
    CHECK(c.Gamma1() == doctest::Approx(c.Gamma2()).epsilon(1e-14));
    CHECK(c.phi1() == doctest::Approx(-p.g).epsilon(1e-12));
    CHECK(c.phi2() == doctest::Approx(p.g).epsilon(1e-12));
}

TEST_CASE("coefficients: decoupled limit reduces to the bare coherence rates") {
    model::EffectiveParams p;
    p.delta_a = 0.35;
    p.delta_r = 0.1;
    p.g = 0.0;
    p.kappa = 0.01;
    p.gamma = 0.004;
    p.xi = 0.001;
    const auto c = analytic::coefficients(p);
    std::vector<Complex> got = {c.lambda1, c.lambda2};
    std::sort(got.begin(), got.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    std::vector<Complex> want = {Complex(0.5 * p.gamma, -p.delta_a), Complex(p.kappa, -p.delta_r)};
    std::sort(want.begin(), want.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    CHECK(std::abs(got[0] - want[0]) < 1e-14);
    CHECK(std::abs(got[1] - want[1]) < 1e-14);
}

TEST_CASE("coefficients: exceptional point is rejected") {
    model::EffectiveParams p;
    p.delta_a = 0.0;
    p.delta_r = 0.0;
    p.g = 0.001;
    p.kappa = 0.002;  // kappa - gamma/2 = 2g exactly
    p.gamma = 0.0;
    p.xi = 0.0001;
    CHECK_THROWS_AS(analytic::coefficients(p), ExceptionalPoint);
}

TEST_CASE("coefficients: algebraic identities over random draws") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = testsupport::random_params(rng);
        const auto c = analytic::coefficients(p);

        CHECK(std::abs(c.mu12 + c.mu21 - Complex(1.0)) < 1e-12);
        CHECK(std::abs(c.lambda1 + c.lambda2 -
                       Complex(2.0 * c.Gamma, -(p.delta_a + p.delta_r))) < 1e-12);
        const Complex product = Complex(p.kappa, -p.delta_r) *
                                    Complex(0.5 * p.gamma, -p.delta_a) +
                                p.g * p.g;
        CHECK(std::abs(c.lambda1 * c.lambda2 - product) < 1e-12);
        CHECK(std::abs(analytic::analytic_splitting(c) - (c.phi2() - c.phi1())) < 1e-12);

        // eps solves the stationary first-order system (solved independently)
        numerics::ComplexMatrix m(2, 2);
        m(0, 0) = Complex(-p.kappa, p.delta_r);
        m(0, 1) = Complex(0.0, p.g);
        m(1, 0) = Complex(0.0, p.g);
        m(1, 1) = Complex(-0.5 * p.gamma, p.delta_a);
        numerics::ComplexVector rhs(2);
        rhs << Complex(0.0, p.xi), Complex(0.0, 0.0);
        const auto x = numerics::solve_linear(m, rhs);
        CHECK(std::abs(x(0) - c.eps) < 1e-6 * std::max(1.0, std::abs(c.eps)));
    }
}

TEST_CASE("coefficients: atan2 branch matches arctan(b/a) whenever a > 0") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = testsupport::random_params(rng);
        const auto c = analytic::coefficients(p);
        if (c.a <= 0.0) continue;
        const double via_atan2 = std::pow(c.a * c.a + c.b * c.b, 0.25) *
                                 std::cos(0.5 * std::atan2(c.b, c.a));
        const double via_arctan = std::pow(c.a * c.a + c.b * c.b, 0.25) *
                                  std::cos(0.5 * std::atan(c.b / c.a));
        CHECK(via_atan2 == doctest::Approx(via_arctan).epsilon(1e-14));
    }
}

TEST_CASE("analytic_correlation: unit value at zero delay, decay at infinity") {
    const auto c = analytic::coefficients(testsupport::fig2_params());
    const std::vector<double> taus = {0.0, 14.0 / std::min(c.Gamma1(), c.Gamma2())};
    const auto values = analytic::analytic_correlation(c, taus);
    CHECK(std::abs(values[0] - Complex(1.0)) < 1e-14);
    CHECK(std::abs(values[1]) < 1e-5);
}

TEST_CASE("analytic_correlation: duplicate-evaluator oracle at tau = 100") {
    const auto p = testsupport::fig2_params();
    const auto c = analytic::coefficients(p);
    const auto values = analytic::analytic_correlation(c, {100.0});

    // separately coded route: eigenvalues from the 2x2 system, weights from
    // the spectral projector, no use of the module under test
    numerics::ComplexMatrix m(2, 2);
    m(0, 0) = Complex(-p.kappa, p.delta_r);
    m(0, 1) = Complex(0.0, p.g);
    m(1, 0) = Complex(0.0, p.g);
    m(1, 1) = Complex(-0.5 * p.gamma, p.delta_a);
    const Complex tr = m(0, 0) + m(1, 1);
    const Complex disc = std::sqrt(tr * tr - 4.0 * (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)));
    const Complex m1 = 0.5 * (tr + disc);
    const Complex m2 = 0.5 * (tr - disc);
    const Complex w1 = (m(0, 0) - m2) / (m1 - m2);
    const Complex w2 = (m(0, 0) - m1) / (m2 - m1);
    const Complex expected = w1 * std::exp(m1 * 100.0) + w2 * std::exp(m2 * 100.0);
    CHECK(std::abs(values[0] - expected) < 1e-12);
}

TEST_CASE("analytic_spectrum: symmetric point yields two equal half-weight lorentzians") {
    model::EffectiveParams p;
    p.delta_a = 0.0;
    p.delta_r = 0.0;
    p.g = 0.2;
    p.gamma = 0.004;
    p.kappa = 0.002;
    p.xi = 0.02;
    const auto c = analytic::coefficients(p);
    const std::vector<double> omegas = {-p.g, 0.0, p.g};
    const auto values = analytic::analytic_spectrum(c, 1.0, omegas);
    CHECK(values[0] == doctest::Approx(values[2]).epsilon(1e-12));
    // peak value ~ (1/pi) * (1/2) / Gamma plus the far tail of the mirror peak
    const double lone = 0.5 / (3.14159265358979323846 * c.Gamma1());
    CHECK(values[0] == doctest::Approx(lone).epsilon(1e-4));
}

TEST_CASE("analytic_spectrum: published peaks and dispersive tails") {
    const auto c = analytic::coefficients(testsupport::fig2_params());
    CHECK(c.phi1() == doctest::Approx(-0.3236050).epsilon(1e-5));
    CHECK(c.phi2() == doctest::Approx(0.1236050).epsilon(1e-5));
    CHECK(analytic::analytic_splitting(c) == doctest::Approx(0.4472100).epsilon(1e-6));

    const std::vector<double> far = {-1e3, 1e3};
    const auto tails = analytic::analytic_spectrum(c, 1.0, far);
    CHECK(std::abs(tails[0]) < 1.0 / 1e3);
    CHECK(std::abs(tails[1]) < 1.0 / 1e3);
}

TEST_CASE("analytic_splitting: on-resonance vacuum Rabi value 2g") {
    model::EffectiveParams p;
    p.delta_a = 0.0;
    p.delta_r = 0.0;
    p.g = 0.17;
    p.gamma = 0.004;
    p.kappa = 0.002;
    p.xi = 0.01;
    const auto c = analytic::coefficients(p);
    CHECK(analytic::analytic_splitting(c) == doctest::Approx(2.0 * p.g).epsilon(1e-14));
}

TEST_CASE("analytic_splitting: frozen detuning series and monotonicity") {
    auto p = testsupport::fig2_params();
    const double expected[] = {0.39999499996874965, 0.5656836571905715, 0.8944267437879975};
    const double deltas[] = {0.0, 0.4, 0.8};
    for (int i = 0; i < 3; ++i) {
        p.delta_a = deltas[i];
        CHECK(analytic::analytic_splitting(analytic::coefficients(p)) ==
              doctest::Approx(expected[i]).epsilon(1e-12));
    }
    double prev = -1.0;
    for (double d = 0.0; d <= 1.0; d += 0.05) {
        p.delta_a = d;
        const double s = analytic::analytic_splitting(analytic::coefficients(p));
        CHECK(s > prev);
        prev = s;
    }
}

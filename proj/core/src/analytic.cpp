#include "namrqed/analytic.hpp"

#include <cmath>

namespace namrqed::analytic {

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr Complex iu(0.0, 1.0);
}

Complex PerturbativeCoefficients::eta(int m, Complex x0, Complex y0, Complex s) const {
    const Complex mu = (m == 1) ? mu12 : mu21;
    const Complex nu = (m == 1) ? nu12 : nu21;
    const Complex chi = (m == 1) ? chi12 : chi21;
    return mu * x0 + nu * y0 + iu * xi * s * chi;
}

PerturbativeCoefficients coefficients(const model::EffectiveParams& p) {
    PerturbativeCoefficients c;
    c.delta_a = p.delta_a;
    c.delta_r = p.delta_r;
    c.g = p.g;
    c.xi = p.xi;
    c.kappa = p.kappa;
    c.gamma = p.gamma;

    c.delta = p.delta();
    c.Gamma = 0.5 * p.kappa + 0.25 * p.gamma;
    const double kg = p.kappa - 0.5 * p.gamma;
    c.a = c.delta * c.delta - kg * kg + 4.0 * p.g * p.g;
    c.b = 2.0 * c.delta * kg;

    // principal square root of (delta - i(kappa - gamma/2))^2 + 4 g^2 = a - i b
    const Complex root = std::sqrt(Complex(c.a, -c.b));
    c.lambda1 = c.Gamma + 0.5 * iu * (-root - (p.delta_a + p.delta_r));
    c.lambda2 = c.Gamma + 0.5 * iu * (root - (p.delta_a + p.delta_r));

    const Complex diff = c.lambda1 - c.lambda2;
    if (std::abs(diff) <= 1e-9)
        throw ExceptionalPoint("coefficients: lambda1 == lambda2 at tolerance 1e-9");

    const Complex bq(-0.5 * p.gamma, p.delta_a);  // i Delta_a - gamma/2
    c.mu12 = (c.lambda1 + bq) / diff;
    c.mu21 = (c.lambda2 + bq) / (-diff);
    c.nu12 = -iu * p.g / diff;
    c.nu21 = -iu * p.g / (-diff);
    if (c.lambda1 == Complex(0.0) || c.lambda2 == Complex(0.0))
        throw ExceptionalPoint("coefficients: vanishing lambda (kappa = gamma = 0?)");
    c.chi12 = (c.lambda1 + bq) / (c.lambda1 * diff);
    c.chi21 = (c.lambda2 + bq) / (c.lambda2 * (-diff));
    c.eps = iu * p.xi * bq / (c.lambda1 * c.lambda2);
    return c;
}

std::vector<Complex> analytic_correlation(const PerturbativeCoefficients& c,
                                          const std::vector<double>& taus,
                                          const FAmplitudes* f) {
    std::vector<Complex> values;
    values.reserve(taus.size());
    for (double t : taus) {
        Complex v = c.mu12 * std::exp(-c.lambda1 * t) + c.mu21 * std::exp(-c.lambda2 * t);
        if (f)
            v += f->f1 * std::exp(-std::conj(c.lambda1) * t) +
                 f->f2 * std::exp(-std::conj(c.lambda2) * t);
        values.push_back(v);
    }
    return values;
}

FAmplitudes f_amplitudes(const PerturbativeCoefficients& c, Complex rho_ss_0101,
                         Complex rho_ss_1001) {
    return {std::conj(c.mu12) * rho_ss_0101 + std::conj(c.nu12) * rho_ss_1001,
            std::conj(c.mu21) * rho_ss_0101 + std::conj(c.nu21) * rho_ss_1001};
}

std::vector<Complex> first_order_a_correlator(const PerturbativeCoefficients& c,
                                              Complex rho_ss_0101, Complex rho_ss_1001,
                                              const std::vector<double>& taus) {
    // conjugate sector: u(t) = conj(x(t; u0*, v0*, s*)) with source s = eps
    const Complex h1 = std::conj(c.eta(1, std::conj(rho_ss_0101), std::conj(rho_ss_1001),
                                       std::conj(c.eps)));
    const Complex h2 = std::conj(c.eta(2, std::conj(rho_ss_0101), std::conj(rho_ss_1001),
                                       std::conj(c.eps)));
    const Complex tail = c.eps * std::conj(c.eps);
    std::vector<Complex> values;
    values.reserve(taus.size());
    for (double t : taus)
        values.push_back(h1 * std::exp(-std::conj(c.lambda1) * t) +
                         h2 * std::exp(-std::conj(c.lambda2) * t) + tail);
    return values;
}

std::vector<double> analytic_spectrum(const PerturbativeCoefficients& c, double prefactor,
                                      const std::vector<double>& omegas,
                                      const FAmplitudes* f) {
    // one Lorentzian per exponent: integral_0^inf e^{i w t} A e^{-lambda t} dt
    const auto lorentzian = [](Complex amp, Complex lambda, double w) {
        const double G = lambda.real();
        const double phi = lambda.imag();
        return (G * amp.real() - (w - phi) * amp.imag()) / ((w - phi) * (w - phi) + G * G);
    };
    std::vector<double> values;
    values.reserve(omegas.size());
    for (double w : omegas) {
        double s = lorentzian(c.mu12, c.lambda1, w) + lorentzian(c.mu21, c.lambda2, w);
        if (f)
            s += lorentzian(f->f1, std::conj(c.lambda1), w) +
                 lorentzian(f->f2, std::conj(c.lambda2), w);
        values.push_back(prefactor / pi * s);
    }
    return values;
}

double analytic_splitting(const PerturbativeCoefficients& c) {
    return std::pow(c.a * c.a + c.b * c.b, 0.25) * std::cos(0.5 * std::atan2(c.b, c.a));
}

} // namespace namrqed::analytic

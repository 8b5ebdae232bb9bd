// analytic.hpp — Closed-form first-order coefficients, correlation and
// spectrum for the weakly driven qubit-resonator system.
//
// The one-excitation coherence pair (rho_{00,01}, rho_{00,10}) obeys
//   d/dt x = (i Delta - kappa) x + i g y - i xi
//   d/dt y = (i Delta_a - gamma/2) y + i g x
// whose decay exponents lambda_1, lambda_2 and amplitude coefficients
// mu/nu/chi drive everything here:
//   x(t) = sum_m e^{-lambda_m t} [mu_mn x0 + nu_mn y0 + i xi chi_mn] + eps
// with mu_mn the weight of the initial x, nu_mn of the initial y, chi_mn
// the drive response, and eps the stationary value. mu_12 + mu_21 = 1.

#pragma once

#include <vector>

#include "namrqed/model.hpp"
#include "namrqed/numerics.hpp"

namespace namrqed::analytic {

using numerics::Complex;

struct PerturbativeCoefficients {
    double delta = 0.0;  // qubit-resonator detuning Delta_a - Delta
    double Gamma = 0.0;  // kappa/2 + gamma/4
    double a = 0.0;      // delta^2 - (kappa - gamma/2)^2 + 4 g^2
    double b = 0.0;      // 2 delta (kappa - gamma/2)
    Complex lambda1, lambda2;

    Complex mu12, mu21;  // weights of the initial x; mu12 + mu21 = 1
    Complex nu12, nu21;  // weights of the initial y
    Complex chi12, chi21;// drive-response amplitudes (carry a 1/lambda_m)
    Complex eps;         // stationary coherence, i xi (i Delta_a - gamma/2)/(lambda1 lambda2)

    double xi = 0.0;
    double delta_a = 0.0, delta_r = 0.0, g = 0.0, kappa = 0.0, gamma = 0.0;

    double Gamma1() const { return lambda1.real(); }
    double Gamma2() const { return lambda2.real(); }
    double phi1() const { return lambda1.imag(); }
    double phi2() const { return lambda2.imag(); }

    // Full first-order solution amplitude for initial data (x0, y0) and
    // drive source scale s (s = 1 reproduces the density-matrix case).
    Complex eta(int m, Complex x0, Complex y0, Complex s = 1.0) const;
};

// Throws ExceptionalPoint when |lambda1 - lambda2| <= 1e-9 (the closed
// forms have lambda_m - lambda_n denominators).
PerturbativeCoefficients coefficients(const model::EffectiveParams& p);

// Leading two-exponential EMF correlation, mu12 e^{-lambda1 t} + mu21 e^{-lambda2 t}.
// When f amplitudes are supplied the conjugate-exponent terms
// f1 e^{-lambda1* t} + f2 e^{-lambda2* t} are added (diagnostic; they are
// O(xi^2) relative to the leading terms).
struct FAmplitudes {
    Complex f1, f2;
};
std::vector<Complex> analytic_correlation(const PerturbativeCoefficients& c,
                                          const std::vector<double>& taus,
                                          const FAmplitudes* f = nullptr);

// f amplitudes from the steady-state elements rho_{01,01} and rho_{10,01}.
FAmplitudes f_amplitudes(const PerturbativeCoefficients& c, Complex rho_ss_0101,
                         Complex rho_ss_1001);

// First-order <a^dag(0) a(tau)> matrix element A_{01,00}(tau), seeded by
// A(0) = rho_ss a^dag: evolves in the conjugate coherence sector with
// initial data (rho_ss_{01,01}, rho_ss_{10,01}) and drive source eps.
std::vector<Complex> first_order_a_correlator(const PerturbativeCoefficients& c,
                                              Complex rho_ss_0101, Complex rho_ss_1001,
                                              const std::vector<double>& taus);

// Closed-form spectrum
//   S(w) = (prefactor/pi) sum_m [Gamma_m Re mu - (w - phi_m) Im mu] /
//          [(w - phi_m)^2 + Gamma_m^2]
// normalized so that a (1, Gamma) exponential pair transforms to a unit-area
// Lorentzian, matching the numeric one-sided transform.
std::vector<double> analytic_spectrum(const PerturbativeCoefficients& c, double prefactor,
                                      const std::vector<double>& omegas,
                                      const FAmplitudes* f = nullptr);

// Peak separation (a^2 + b^2)^{1/4} cos(atan2(b, a)/2); equals phi2 - phi1.
double analytic_splitting(const PerturbativeCoefficients& c);

} // namespace namrqed::analytic

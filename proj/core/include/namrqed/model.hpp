// model.hpp — Rotating-frame model of a driven metallic nanomechanical
// resonator capacitively coupled to a charge qubit.
//
// Conventions (documented once, used everywhere):
//   * hbar = 1; every frequency-valued quantity is an ordinary frequency in
//     GHz (energy E = h * nu when SI units are restored).
//   * Rotating frame at the drive frequency omega_p:
//       H = Delta_a s+ s- + g (a s+ + a^dag s-) + Delta a^dag a - xi (a + a^dag)
//     with Delta_a = omega_a - omega_p, Delta = Omega - omega_p and the
//     qubit-resonator detuning delta = Delta_a - Delta.
//   * kappa follows the master-equation convention in which the phonon
//     number decays at 2*kappa and the coherence at kappa; gamma is the
//     qubit energy decay rate.

#pragma once

#include "namrqed/hilbert.hpp"
#include "namrqed/numerics.hpp"

namespace namrqed::model {

using hilbert::BasisSpec;
using hilbert::LabeledOperator;
using numerics::ComplexMatrix;

// Rotating-frame parameters, GHz. emf_prefactor is (B l)^2 Omega_ang/(2M)
// in V^2 when derived from a device, 1.0 for normalized spectra.
struct EffectiveParams {
    double delta_a = 0.0;  // qubit-drive detuning
    double delta_r = 0.0;  // resonator-drive detuning
    double g = 0.0;        // qubit-resonator coupling
    double xi = 0.0;       // drive strength
    double kappa = 0.0;    // resonator decay
    double gamma = 0.0;    // qubit decay
    double emf_prefactor = 1.0;

    double delta() const { return delta_a - delta_r; }  // qubit-resonator detuning
};

// Physical device parameters. Energies in GHz (E = h * value), SI otherwise.
struct DeviceParams {
    double E_C = 0.0;        // island charging energy, GHz
    double E_J0 = 0.0;       // single-junction Josephson energy, GHz
    double flux_ratio = 0.0; // Phi / Phi_0 through the SQUID loop
    double n_g = 0.5;        // gate charge, dimensionless
    double C_J = 0.0;        // junction capacitance, F
    double C_g = 0.0;        // gate capacitance, F
    double C_n = 0.0;        // island-resonator distributed capacitance, F
    double d = 0.0;          // island-resonator gap, m
    double B = 0.0;          // magnetic field, T
    double l = 0.0;          // resonator length, m
    double M = 0.0;          // resonator mass, kg
    double Omega = 0.0;      // resonator frequency, GHz
    double I0 = 0.0;         // drive current amplitude, A
    double omega_p = 0.0;    // drive frequency, GHz
    double kappa = 0.0;      // resonator decay, GHz
    double gamma = 0.0;      // qubit decay, GHz
};

// SI constants used to restore hbar in the mechanical zero-point factor.
inline constexpr double planck_si = 6.62607015e-34;            // J s, exact
inline constexpr double hbar_si = planck_si / (2.0 * 3.14159265358979323846);
inline constexpr double ghz_to_joule = planck_si * 1e9;        // E = h * nu

// Output record of derive_effective: the effective parameters plus the
// intermediate quantities and the conversion factors that produced them.
struct DerivedEffective {
    EffectiveParams params;
    double E_J = 0.0;      // 2 E_J0 cos(pi Phi/Phi0), GHz
    double omega_a = 0.0;  // sqrt(16 E_C^2 (2n_g-1)^2 + E_J^2), GHz
    double theta = 0.0;    // mixing angle in [0, pi], sin(theta) >= 0
    double x_zpf = 0.0;    // sqrt(hbar / (2 M Omega_ang)), m
    double ghz_per_joule = 1.0 / ghz_to_joule;
};

// Derive the rotating-frame parameters from device quantities.
// Throws InvalidDevice on invariant violations or at the degenerate point
// E_J = 0, n_g = 1/2 where the mixing angle is undefined.
DerivedEffective derive_effective(const DeviceParams& dev);

// H = Delta_a s+s- + g (a s+ + a^dag s-) + Delta a^dag a - xi (a + a^dag),
// assembled from exact matrix elements projected onto the basis. Hermitian
// by construction.
LabeledOperator build_hamiltonian(const EffectiveParams& p, const BasisSpec& basis);

// V = i sqrt(emf_prefactor) (a^dag - a), the electromotive force across the
// resonator; Hermitian.
LabeledOperator emf_operator(const EffectiveParams& p, const BasisSpec& basis);

} // namespace namrqed::model

// dynamics.hpp — Lindblad generator, density-matrix propagation and the
// steady state.
//
// The master equation
//   drho/dt = -i[H, rho] + kappa (2 a rho a^dag - a^dag a rho - rho a^dag a)
//             + gamma/2 (2 s- rho s+ - s+s- rho - rho s+s-)
// is represented as a dense D^2 x D^2 matrix acting on the row-major
// vectorization vec(X)(r*D+c) = X(r,c), under which
//   superop = -i (H (x) I - I (x) H^T)
//             + kappa (2 a (x) conj(a) - a^dag a (x) I - I (x) (a^dag a)^T)
//             + gamma/2 (2 s- (x) conj(s-) - s+s- (x) I - I (x) (s+s-)^T).
// Note the kappa convention: phonon number decays at 2*kappa.

#pragma once

#include <vector>

#include "namrqed/hilbert.hpp"
#include "namrqed/model.hpp"
#include "namrqed/numerics.hpp"

namespace namrqed::dynamics {

using hilbert::BasisSpec;
using hilbert::LabeledOperator;
using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

struct DensityMatrix {
    BasisSpec basis;
    ComplexMatrix matrix;

    Complex trace() const { return matrix.trace(); }
    double hermiticity_defect() const;   // ||rho - rho^dag||_inf
    double min_eigenvalue() const;       // of the hermitized matrix

    // Hermitian to herm_tol, unit trace to trace_tol, eigenvalues above
    // -positivity_tol.
    bool valid(double herm_tol = 1e-10, double trace_tol = 1e-10,
               double positivity_tol = 1e-8) const;
};

struct Liouvillian {
    BasisSpec basis;
    ComplexMatrix superop;  // dimension D^2 x D^2
    double kappa = 0.0;
    double gamma = 0.0;

    Eigen::Index dim() const { return basis.dimension(); }
};

// Row covector representing the trace functional: trace_row . vec(X) = Tr X.
ComplexVector trace_row(const BasisSpec& basis);

// Throws BasisMismatch when H's matrix does not match its basis dimension.
Liouvillian build_liouvillian(const LabeledOperator& h, const model::EffectiveParams& p);

// rho(t) = unvec(e^{superop t} vec(rho0)) for each requested time.
// Times must be nonnegative and ascending.
std::vector<DensityMatrix> propagate(const Liouvillian& l, const DensityMatrix& rho0,
                                     const std::vector<double>& times);

struct SteadyStateInfo {
    double residual = 0.0;            // ||superop vec(rho_ss)||_inf
    double max_drive_coherence = 0.0; // largest |<00|rho|0-row excited coherence>|
    bool perturbative_warning = false;// set when max_drive_coherence >= 0.1
};

// Unique stationary state via the kernel solve with the trace constraint.
// Throws AmbiguousKernel when the stationary manifold is degenerate.
DensityMatrix steady_state(const Liouvillian& l, SteadyStateInfo* info = nullptr);

} // namespace namrqed::dynamics

// correlations.hpp — Quantum-regression-theorem two-time correlators and
// the combined electromotive-force correlation.
//
// Ordering convention: <left(0) right(tau)> with the evolution applied to
// rho_ss * left, i.e.
//   <L(0) R(tau)> = Tr{ R unvec( e^{superop tau} vec(rho_ss L) ) }.

#pragma once

#include <vector>

#include "namrqed/analytic.hpp"
#include "namrqed/dynamics.hpp"

namespace namrqed::correlations {

using dynamics::DensityMatrix;
using dynamics::Liouvillian;
using hilbert::LabeledOperator;
using numerics::Complex;

enum class CorrelationKind { AdagA, AAdag, AA, AdagAdag, EMFCombined, Generic };

struct CorrelationTrace {
    std::vector<double> taus;       // delays, units 1/GHz (ns)
    std::vector<Complex> values;
    CorrelationKind kind = CorrelationKind::Generic;
};

// Uniform grid of n samples on [0, 14/min(Gamma1, Gamma2)], long enough
// that the leading exponentials decay below 1e-6.
std::vector<double> default_tau_grid(const analytic::PerturbativeCoefficients& c,
                                     std::size_t n = 4096);

// <left(0) right(tau)>; at tau = 0 the value is Tr{right rho_ss left}
// computed directly. All operands must share a basis.
CorrelationTrace qrt_correlator(const Liouvillian& l, const DensityMatrix& rho_ss,
                                const LabeledOperator& left, const LabeledOperator& right,
                                const std::vector<double>& taus,
                                CorrelationKind kind = CorrelationKind::Generic);

// <V(0) V(tau)> = emf_prefactor [ <a a^dag(tau)> + <a^dag a(tau)>
//                                 - <a a(tau)> - <a^dag a^dag(tau)> ].
CorrelationTrace emf_correlation(const Liouvillian& l, const DensityMatrix& rho_ss,
                                 const model::EffectiveParams& p,
                                 const hilbert::BasisSpec& basis,
                                 const std::vector<double>& taus);

// tau -> infinity asymptote <V>_ss^2 of the EMF correlation (the elastic
// component, O(xi^2)); subtract it before Fourier transforming.
double emf_elastic_offset(const DensityMatrix& rho_ss, const model::EffectiveParams& p,
                          const hilbert::BasisSpec& basis);

// In-place subtraction of a constant offset (used to pass the connected
// correlator to the spectrum layer).
void subtract_offset(CorrelationTrace& trace, Complex offset);

} // namespace namrqed::correlations

// spectrum.hpp — Numeric spectra from correlation traces or directly from
// the Liouvillian resolvent, plus peak extraction.
//
// All methods share the normalization
//   S(w) = (1/pi) Re integral_0^inf dtau e^{i w tau} <V(0) V(tau)>
// so their outputs are directly comparable. Traces handed to the Fourier
// path must be connected (decaying); see correlations::emf_elastic_offset.

#pragma once

#include <optional>
#include <vector>

#include "namrqed/correlations.hpp"

namespace namrqed::spectrum {

using correlations::CorrelationTrace;
using dynamics::DensityMatrix;
using dynamics::Liouvillian;

enum class SpectrumMethod { AnalyticClosedForm, TauGridFT, Resolvent };

struct Spectrum {
    std::vector<double> omegas;  // GHz, ascending
    std::vector<double> values;
    SpectrumMethod method = SpectrumMethod::Resolvent;
    model::EffectiveParams params_echo;
};

struct Peak {
    double position = 0.0;  // GHz
    double height = 0.0;
    double fwhm = 0.0;      // GHz; NaN when a half-height crossing falls off the grid
};

struct PeakReport {
    std::vector<Peak> peaks;              // sorted by position
    std::optional<double> splitting;      // distance between the two tallest peaks
    double dominance_ratio = 0.0;         // second-tallest height / tallest height
};

// 2001 points spanning [min(phi) - 10 Gamma_max, max(phi) + 10 Gamma_max].
std::vector<double> default_omega_grid(const analytic::PerturbativeCoefficients& c,
                                       std::size_t n = 2001);

// One-sided Fourier integral, trapezoidal rule on the tau grid. Requires
// the trace to have decayed below 1e-6 of its tau = 0 magnitude at the
// final tau; throws TailTooFat otherwise.
Spectrum spectrum_from_trace(const CorrelationTrace& trace, const std::vector<double>& omegas,
                             const model::EffectiveParams& params_echo = {});

// Algebraic transform: one linear solve (superop + i w) x = -v per grid
// point and constituent correlator, with the stationary component of each
// seed removed (the elastic line is not representable on a grid). No
// tau-truncation error. Throws SingularResolvent when kappa = gamma = 0.
Spectrum spectrum_resolvent(const Liouvillian& l, const DensityMatrix& rho_ss,
                            const model::EffectiveParams& p, const hilbert::BasisSpec& basis,
                            const std::vector<double>& omegas);

// Local maxima above dominance_threshold * global max, positions refined by
// three-point quadratic interpolation, FWHM from linear interpolation of the
// half-height crossings. Throws NoPeaks when the spectrum is monotone.
PeakReport find_peaks(const Spectrum& s, double dominance_threshold = 0.05);

// True when the spectrum dips below -1% of its maximum (possible at finite
// drive from the <aa> subtraction terms; reported, never clipped).
bool has_negative_dip(const Spectrum& s);

} // namespace namrqed::spectrum

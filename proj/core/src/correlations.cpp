#include "namrqed/correlations.hpp"

#include <algorithm>
#include <cmath>

namespace namrqed::correlations {

std::vector<double> default_tau_grid(const analytic::PerturbativeCoefficients& c,
                                     std::size_t n) {
    const double gamma_min = std::min(c.Gamma1(), c.Gamma2());
    if (!(gamma_min > 0.0))
        throw std::invalid_argument("default_tau_grid: nonpositive decay rate");
    const double span = 14.0 / gamma_min;
    std::vector<double> taus(n);
    for (std::size_t i = 0; i < n; ++i)
        taus[i] = span * static_cast<double>(i) / static_cast<double>(n - 1);
    return taus;
}

CorrelationTrace qrt_correlator(const Liouvillian& l, const DensityMatrix& rho_ss,
                                const LabeledOperator& left, const LabeledOperator& right,
                                const std::vector<double>& taus, CorrelationKind kind) {
    if (rho_ss.basis != l.basis || left.basis != l.basis || right.basis != l.basis)
        throw BasisMismatch("qrt_correlator: operands on different bases");

    const numerics::ComplexVector v0 = numerics::vec(rho_ss.matrix * left.matrix);
    const Complex value0 = (right.matrix * rho_ss.matrix * left.matrix).trace();

    // Tr{R X} = vec(R^T) . vec(X), plain bilinear product; expand
    // e^{L tau} v0 over eigenmodes once
    const numerics::EigResult e = numerics::eig(l.superop);
    const numerics::ComplexVector readout = numerics::vec(right.matrix.transpose());
    const numerics::ComplexVector coeffs = e.vectors_inv * v0;
    const numerics::ComplexVector proj = (readout.transpose() * e.vectors).transpose();
    const numerics::ComplexVector amps = coeffs.cwiseProduct(proj);

    CorrelationTrace trace;
    trace.taus = taus;
    trace.kind = kind;
    trace.values.reserve(taus.size());
    for (double t : taus) {
        if (t == 0.0) {
            trace.values.push_back(value0);
            continue;
        }
        Complex v = 0.0;
        for (Eigen::Index k = 0; k < amps.size(); ++k)
            v += amps(k) * std::exp(e.values(k) * t);
        trace.values.push_back(v);
    }
    return trace;
}

CorrelationTrace emf_correlation(const Liouvillian& l, const DensityMatrix& rho_ss,
                                 const model::EffectiveParams& p,
                                 const hilbert::BasisSpec& basis,
                                 const std::vector<double>& taus) {
    if (basis != l.basis)
        throw BasisMismatch("emf_correlation: basis differs from Liouvillian");
    const auto ops = hilbert::ladder_ops(basis);

    const CorrelationTrace a_adt = qrt_correlator(l, rho_ss, ops.a, ops.a_dag, taus,
                                                  CorrelationKind::AAdag);
    const CorrelationTrace adt_a = qrt_correlator(l, rho_ss, ops.a_dag, ops.a, taus,
                                                  CorrelationKind::AdagA);
    const CorrelationTrace a_a = qrt_correlator(l, rho_ss, ops.a, ops.a, taus,
                                                CorrelationKind::AA);
    const CorrelationTrace adt_adt = qrt_correlator(l, rho_ss, ops.a_dag, ops.a_dag, taus,
                                                    CorrelationKind::AdagAdag);

    CorrelationTrace trace;
    trace.taus = taus;
    trace.kind = CorrelationKind::EMFCombined;
    trace.values.resize(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i)
        trace.values[i] = p.emf_prefactor * (a_adt.values[i] + adt_a.values[i] -
                                             a_a.values[i] - adt_adt.values[i]);
    return trace;
}

double emf_elastic_offset(const DensityMatrix& rho_ss, const model::EffectiveParams& p,
                          const hilbert::BasisSpec& basis) {
    const LabeledOperator v = model::emf_operator(p, basis);
    const Complex mean = (v.matrix * rho_ss.matrix).trace();
    return (mean * mean).real();
}

void subtract_offset(CorrelationTrace& trace, Complex offset) {
    for (Complex& v : trace.values) v -= offset;
}

} // namespace namrqed::correlations

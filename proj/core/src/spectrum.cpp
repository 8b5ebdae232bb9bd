#include "namrqed/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace namrqed::spectrum {

namespace {
constexpr double pi = 3.14159265358979323846;
}

std::vector<double> default_omega_grid(const analytic::PerturbativeCoefficients& c,
                                       std::size_t n) {
    const double phi_min = std::min(c.phi1(), c.phi2());
    const double phi_max = std::max(c.phi1(), c.phi2());
    const double gamma_max = std::max(c.Gamma1(), c.Gamma2());
    const double lo = phi_min - 10.0 * gamma_max;
    const double hi = phi_max + 10.0 * gamma_max;
    std::vector<double> omegas(n);
    for (std::size_t i = 0; i < n; ++i)
        omegas[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return omegas;
}

Spectrum spectrum_from_trace(const CorrelationTrace& trace, const std::vector<double>& omegas,
                             const model::EffectiveParams& params_echo) {
    if (trace.taus.size() != trace.values.size() || trace.taus.size() < 2)
        throw std::invalid_argument("spectrum_from_trace: malformed trace");
    const double head = std::abs(trace.values.front());
    const double tail = std::abs(trace.values.back());
    if (head > 0.0 && tail > 1e-6 * head)
        throw TailTooFat("spectrum_from_trace: trace tail at " + std::to_string(tail / head) +
                         " of its initial magnitude; grow the tau span");

    Spectrum s;
    s.omegas = omegas;
    s.method = SpectrumMethod::TauGridFT;
    s.params_echo = params_echo;
    s.values.reserve(omegas.size());

    const std::size_t n = trace.taus.size();
    for (double w : omegas) {
        double acc = 0.0;
        numerics::Complex prev = trace.values[0];  // e^{i w 0} = 1
        for (std::size_t i = 1; i < n; ++i) {
            const numerics::Complex cur =
                std::exp(numerics::Complex(0.0, w * trace.taus[i])) * trace.values[i];
            acc += 0.5 * (trace.taus[i] - trace.taus[i - 1]) * (prev + cur).real();
            prev = cur;
        }
        s.values.push_back(acc / pi);
    }
    return s;
}

Spectrum spectrum_resolvent(const Liouvillian& l, const DensityMatrix& rho_ss,
                            const model::EffectiveParams& p, const hilbert::BasisSpec& basis,
                            const std::vector<double>& omegas) {
    if (basis != l.basis || rho_ss.basis != l.basis)
        throw BasisMismatch("spectrum_resolvent: operands on different bases");
    if (l.kappa == 0.0 && l.gamma == 0.0)
        throw SingularResolvent("spectrum_resolvent: kappa = gamma = 0");

    const auto ops = hilbert::ladder_ops(basis);
    struct Constituent {
        const hilbert::LabeledOperator* left;
        const hilbert::LabeledOperator* right;
        double sign;
    };
    const Constituent parts[4] = {{&ops.a, &ops.a_dag, +1.0},
                                  {&ops.a_dag, &ops.a, +1.0},
                                  {&ops.a, &ops.a, -1.0},
                                  {&ops.a_dag, &ops.a_dag, -1.0}};

    const Eigen::Index d2 = l.superop.rows();
    const numerics::ComplexVector rho_vec = numerics::vec(rho_ss.matrix);

    std::vector<numerics::ComplexVector> seeds, readouts;
    std::vector<double> signs;
    for (const Constituent& part : parts) {
        numerics::ComplexVector v0 = numerics::vec(rho_ss.matrix * part.left->matrix);
        // remove the stationary component, Tr(rho_ss left) vec(rho_ss)
        v0 -= (rho_ss.matrix * part.left->matrix).trace() * rho_vec;
        seeds.push_back(std::move(v0));
        readouts.push_back(numerics::vec(part.right->matrix.transpose()));
        signs.push_back(part.sign);
    }

    Spectrum s;
    s.omegas = omegas;
    s.method = SpectrumMethod::Resolvent;
    s.params_echo = p;
    s.values.reserve(omegas.size());

    numerics::ComplexMatrix shifted(d2, d2);
    for (double w : omegas) {
        shifted = l.superop;
        shifted.diagonal().array() += numerics::Complex(0.0, w);
        Eigen::PartialPivLU<numerics::ComplexMatrix> lu(shifted);
        if (!(lu.rcond() > 1e-14))
            throw SingularResolvent("spectrum_resolvent: singular at omega = " + std::to_string(w));
        double acc = 0.0;
        for (std::size_t k = 0; k < seeds.size(); ++k) {
            const numerics::ComplexVector x = lu.solve(-seeds[k]);
            acc += signs[k] * (readouts[k].transpose() * x)(0).real();
        }
        s.values.push_back(p.emf_prefactor * acc / pi);
    }
    return s;
}

namespace {

// half-height crossing by linear interpolation, scanning outward from peak i
double half_crossing(const Spectrum& s, std::size_t i, double half, int step) {
    std::size_t j = i;
    while (true) {
        const std::size_t next = j + step;
        if (next >= s.values.size()) return std::numeric_limits<double>::quiet_NaN();
        if (s.values[next] <= half) {
            const double run = s.omegas[next] - s.omegas[j];
            const double drop = s.values[j] - s.values[next];
            const double frac = drop > 0.0 ? (s.values[j] - half) / drop : 0.0;
            return s.omegas[j] + frac * run;
        }
        j = next;
    }
}

} // namespace

PeakReport find_peaks(const Spectrum& s, double dominance_threshold) {
    const std::size_t n = s.values.size();
    if (n < 3) throw NoPeaks("find_peaks: grid too short");
    const double global_max = *std::max_element(s.values.begin(), s.values.end());
    const double floor = dominance_threshold * global_max;

    PeakReport report;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(s.values[i] > s.values[i - 1] && s.values[i] >= s.values[i + 1])) continue;
        if (s.values[i] < floor) continue;

        // quadratic refinement through the three samples around the maximum
        const double y0 = s.values[i - 1], y1 = s.values[i], y2 = s.values[i + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        double shift = 0.0;
        if (denom < 0.0) shift = 0.5 * (y0 - y2) / denom;
        const double dw = 0.5 * (s.omegas[i + 1] - s.omegas[i - 1]);

        Peak peak;
        peak.position = s.omegas[i] + shift * dw;
        peak.height = y1 - 0.25 * (y0 - y2) * shift;
        const double lo = half_crossing(s, i, 0.5 * peak.height, -1);
        const double hi = half_crossing(s, i, 0.5 * peak.height, +1);
        peak.fwhm = hi - lo;
        report.peaks.push_back(peak);
    }
    if (report.peaks.empty()) throw NoPeaks("find_peaks: spectrum is monotone on the grid");

    std::sort(report.peaks.begin(), report.peaks.end(),
              [](const Peak& a, const Peak& b) { return a.position < b.position; });

    if (report.peaks.size() >= 2) {
        std::vector<Peak> by_height = report.peaks;
        std::sort(by_height.begin(), by_height.end(),
                  [](const Peak& a, const Peak& b) { return a.height > b.height; });
        report.splitting = std::abs(by_height[0].position - by_height[1].position);
        report.dominance_ratio = by_height[1].height / by_height[0].height;
    } else {
        report.dominance_ratio = 0.0;
    }
    return report;
}

bool has_negative_dip(const Spectrum& s) {
    if (s.values.empty()) return false;
    const double global_max = *std::max_element(s.values.begin(), s.values.end());
    const double global_min = *std::min_element(s.values.begin(), s.values.end());
    return global_min < -0.01 * global_max;
}

} // namespace namrqed::spectrum

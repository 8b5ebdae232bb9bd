// acceptance_main.cpp — end-to-end acceptance suite. Each criterion prints
// one PASS/FAIL line; the binary exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "namrqed/namrqed.hpp"
#include "test_support.hpp"

using namespace namrqed;
using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

struct Pipeline {
    dynamics::Liouvillian liouville;
    dynamics::DensityMatrix rho_ss;
};

Pipeline make_pipeline(const model::EffectiveParams& p, const hilbert::BasisSpec& basis) {
    const auto h = model::build_hamiltonian(p, basis);
    auto l = dynamics::build_liouvillian(h, p);
    auto rho = dynamics::steady_state(l);
    return {std::move(l), std::move(rho)};
}

spectrum::Spectrum resolvent_spectrum(const model::EffectiveParams& p,
                                      const hilbert::BasisSpec& basis,
                                      const std::vector<double>& omegas) {
    const auto pipe = make_pipeline(p, basis);
    return spectrum::spectrum_resolvent(pipe.liouville, pipe.rho_ss, p, basis, omegas);
}

double rel_l2(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

// 1. analytic splitting at the published N-sweep parameters, resolvent peaks within 2%
Check criterion_1() {
    Check check;
    const auto p = testsupport::fig2_params();
    const auto c = analytic::coefficients(p);
    const double split = analytic::analytic_splitting(c);
    check.require(std::abs(split - 0.44721) < 1e-5,
                  "analytic splitting " + std::to_string(split) + " != 0.44721");

    const auto omegas = spectrum::default_omega_grid(c);
    const auto s = resolvent_spectrum(p, testsupport::n1_basis(), omegas);
    const auto report = spectrum::find_peaks(s);
    check.require(report.peaks.size() == 2, "expected two peaks");
    check.require(report.splitting.has_value(), "no splitting reported");
    if (report.splitting)
        check.require(std::abs(*report.splitting - split) < 0.02 * split,
                      "peak splitting " + std::to_string(*report.splitting) +
                          " deviates from analytic by more than 2%");
    return check;
}

// 2. truncation insensitivity: N = 1, 2, 3 spectra pairwise close
Check criterion_2() {
    Check check;
    const auto p = testsupport::fig2_params();
    const auto c = analytic::coefficients(p);
    const auto omegas = spectrum::default_omega_grid(c);

    std::vector<spectrum::Spectrum> spectra;
    std::vector<double> splittings;
    for (int n = 1; n <= 3; ++n) {
        spectra.push_back(
            resolvent_spectrum(p, {hilbert::TruncationScheme::TotalExcitation, n}, omegas));
        const auto report = spectrum::find_peaks(spectra.back());
        check.require(report.splitting.has_value(), "N=" + std::to_string(n) + ": no splitting");
        splittings.push_back(report.splitting.value_or(0.0));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const double peak =
                *std::max_element(spectra[i].values.begin(), spectra[i].values.end());
            double max_diff = 0.0;
            for (std::size_t k = 0; k < omegas.size(); ++k)
                max_diff = std::max(max_diff,
                                    std::abs(spectra[i].values[k] - spectra[j].values[k]));
            check.require(max_diff < 0.05 * peak,
                          "N=" + std::to_string(i + 1) + " vs N=" + std::to_string(j + 1) +
                              " pointwise " + std::to_string(max_diff / peak));
            check.require(std::abs(splittings[i] - splittings[j]) < 0.01 * splittings[i],
                          "splitting mismatch between N=" + std::to_string(i + 1) + " and N=" +
                              std::to_string(j + 1));
        }
    }
    return check;
}

// 3. detuning ordering and peak-height asymmetry
Check criterion_3() {
    Check check;
    const double expected[] = {0.400, 0.566, 0.894};
    const double deltas[] = {0.0, 0.4, 0.8};
    std::vector<double> splittings, ratios;
    for (int i = 0; i < 3; ++i) {
        auto p = testsupport::fig2_params();
        p.delta_a = deltas[i];
        const auto c = analytic::coefficients(p);
        const auto s = resolvent_spectrum(p, testsupport::n1_basis(),
                                          spectrum::default_omega_grid(c));
        const auto report = spectrum::find_peaks(s);
        check.require(report.splitting.has_value(),
                      "delta=" + std::to_string(deltas[i]) + ": no splitting");
        splittings.push_back(report.splitting.value_or(0.0));
        ratios.push_back(report.dominance_ratio);
        check.require(std::abs(splittings[i] - expected[i]) < 0.02 * expected[i],
                      "delta=" + std::to_string(deltas[i]) + ": splitting " +
                          std::to_string(splittings[i]));
    }
    check.require(splittings[0] < splittings[1] && splittings[1] < splittings[2],
                  "splittings not strictly increasing");
    check.require(ratios[0] > ratios[1] && ratios[1] > ratios[2],
                  "dominance ratio not strictly decreasing");
    return check;
}

// 4. drive insensitivity of the peak positions
Check criterion_4() {
    Check check;
    const auto c_ref = analytic::coefficients(testsupport::fig2_params());
    const auto omegas = spectrum::default_omega_grid(c_ref);
    const double split_ref = analytic::analytic_splitting(c_ref);

    std::vector<std::vector<double>> positions;
    for (double xi : {0.02, 0.03, 0.04}) {
        auto p = testsupport::fig2_params();
        p.xi = xi;
        const auto s = resolvent_spectrum(p, testsupport::n1_basis(), omegas);
        const auto report = spectrum::find_peaks(s);
        check.require(report.peaks.size() == 2,
                      "xi=" + std::to_string(xi) + ": expected two peaks, found " +
                          std::to_string(report.peaks.size()));
        std::vector<double> pos;
        for (const auto& peak : report.peaks) pos.push_back(peak.position);
        positions.push_back(pos);
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        for (std::size_t k = 0; k < positions[i].size() && k < positions[0].size(); ++k) {
            const double shift = std::abs(positions[i][k] - positions[0][k]);
            check.require(shift < 0.01 * split_ref,
                          "peak " + std::to_string(k) + " shifted by " + std::to_string(shift));
        }
    }
    return check;
}

// 5. QRT trace against the two-exponential closed form, O(xi^2) scaling
Check criterion_5() {
    Check check;
    auto p = testsupport::fig2_params();
    const auto c = analytic::coefficients(p);
    const auto taus = correlations::default_tau_grid(c, 2048);
    const auto leading = analytic::analytic_correlation(c, taus);

    const auto pipe1 = make_pipeline(p, testsupport::n1_basis());
    const double err1 = rel_l2(
        correlations::emf_correlation(pipe1.liouville, pipe1.rho_ss, p, testsupport::n1_basis(), taus)
            .values,
        leading);
    check.require(err1 < 0.05, "relative L2 error " + std::to_string(err1));

    p.xi = 0.01;
    const auto pipe2 = make_pipeline(p, testsupport::n1_basis());
    const double err2 = rel_l2(
        correlations::emf_correlation(pipe2.liouville, pipe2.rho_ss, p, testsupport::n1_basis(), taus)
            .values,
        leading);
    check.require(err1 / err2 >= 3.0,
                  "error ratio " + std::to_string(err1 / err2) + " below 3 when xi halves");
    check.note("err(xi=0.02) = " + std::to_string(err1) + ", ratio = " +
               std::to_string(err1 / err2));
    return check;
}

// 6. algebraic identity suite over random draws
Check criterion_6() {
    Check check;
    std::mt19937 rng(24601);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = testsupport::random_params(rng);
        const auto c = analytic::coefficients(p);
        bool ok = true;
        ok &= std::abs(c.mu12 + c.mu21 - Complex(1.0)) < 1e-12;
        ok &= std::abs(c.lambda1 + c.lambda2 -
                       Complex(2.0 * c.Gamma, -(p.delta_a + p.delta_r))) < 1e-12;
        const Complex product =
            Complex(p.kappa, -p.delta_r) * Complex(0.5 * p.gamma, -p.delta_a) + p.g * p.g;
        ok &= std::abs(c.lambda1 * c.lambda2 - product) < 1e-12;
        ok &= std::abs(analytic::analytic_splitting(c) - (c.phi2() - c.phi1())) < 1e-12;

        ComplexMatrix m(2, 2);
        m(0, 0) = Complex(-p.kappa, p.delta_r);
        m(0, 1) = Complex(0.0, p.g);
        m(1, 0) = Complex(0.0, p.g);
        m(1, 1) = Complex(-0.5 * p.gamma, p.delta_a);
        ComplexVector rhs(2);
        rhs << Complex(0.0, p.xi), Complex(0.0, 0.0);
        const auto x = numerics::solve_linear(m, rhs);
        ok &= std::abs(x(0) - c.eps) < 1e-6 * std::max(1.0, std::abs(c.eps));
        if (!ok) ++failures;
    }
    check.require(failures == 0, std::to_string(failures) + "/1000 draws failed");
    return check;
}

// 7. Lindblad sanity at every figure preset and 100 random draws
Check criterion_7() {
    Check check;
    std::vector<std::pair<model::EffectiveParams, hilbert::BasisSpec>> cases;
    for (int n = 1; n <= 3; ++n)
        cases.push_back({testsupport::fig2_params(),
                         {hilbert::TruncationScheme::TotalExcitation, n}});
    for (double delta : {0.0, 0.4, 0.8}) {
        auto p = testsupport::fig2_params();
        p.delta_a = delta;
        cases.push_back({p, testsupport::n1_basis()});
    }
    for (double xi : {0.02, 0.03, 0.04}) {
        auto p = testsupport::fig2_params();
        p.xi = xi;
        cases.push_back({p, testsupport::n1_basis()});
    }
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 100; ++trial)
        cases.push_back({testsupport::random_params(rng), testsupport::n1_basis()});

    const std::vector<double> times = {1.0, 10.0, 100.0, 1000.0};
    int index = 0;
    for (const auto& [p, basis] : cases) {
        const auto h = model::build_hamiltonian(p, basis);
        const auto l = dynamics::build_liouvillian(h, p);
        const std::string tag = "case " + std::to_string(index++);

        ComplexMatrix vacuum = ComplexMatrix::Zero(basis.dimension(), basis.dimension());
        vacuum(0, 0) = 1.0;
        for (const auto& state : dynamics::propagate(l, {basis, vacuum}, times)) {
            check.require(std::abs(state.trace() - Complex(1.0)) < 1e-10, tag + ": trace drift");
            check.require(state.hermiticity_defect() < 1e-10, tag + ": hermiticity");
            check.require(state.min_eigenvalue() > -1e-8, tag + ": positivity");
        }

        dynamics::SteadyStateInfo info;
        dynamics::steady_state(l, &info);
        check.require(info.residual < 1e-10, tag + ": steady residual");

        const auto e = numerics::eig(l.superop);
        for (Eigen::Index i = 0; i < e.values.size(); ++i)
            check.require(e.values(i).real() <= 1e-10, tag + ": positive generator eigenvalue");
        if (!check.ok) break;
    }
    return check;
}

// 8. transcription oracle: superoperator equals the hand-transcribed generator
Check criterion_8() {
    Check check;
    const auto p = testsupport::fig2_params();
    const auto h = model::build_hamiltonian(p, testsupport::n1_basis());
    const auto l = dynamics::build_liouvillian(h, p);
    const ComplexMatrix expected = testsupport::transcribed_n1_generator(p);
    check.require(l.superop.rows() == 9 && l.superop.cols() == 9, "superoperator is not 9x9");
    double max_diff = 0.0;
    for (Eigen::Index r = 0; r < 9; ++r)
        for (Eigen::Index c = 0; c < 9; ++c)
            max_diff = std::max(max_diff, std::abs(l.superop(r, c) - expected(r, c)));
    check.require(max_diff == 0.0, "max element difference " + std::to_string(max_diff));
    return check;
}

// 9. method triangle at the published parameters
Check criterion_9() {
    Check check;
    const auto p = testsupport::fig2_params();
    const auto c = analytic::coefficients(p);
    const auto omegas = spectrum::default_omega_grid(c);

    const auto closed = analytic::analytic_spectrum(c, p.emf_prefactor, omegas);

    const auto pipe = make_pipeline(p, testsupport::n1_basis());
    const auto via_resolvent =
        spectrum::spectrum_resolvent(pipe.liouville, pipe.rho_ss, p, testsupport::n1_basis(), omegas);

    auto trace = correlations::emf_correlation(pipe.liouville, pipe.rho_ss, p,
                                               testsupport::n1_basis(),
                                               correlations::default_tau_grid(c));
    correlations::subtract_offset(
        trace, correlations::emf_elastic_offset(pipe.rho_ss, p, testsupport::n1_basis()));
    const auto via_ft = spectrum::spectrum_from_trace(trace, omegas, p);

    const double peak = *std::max_element(closed.begin(), closed.end());
    double d_ar = 0.0, d_af = 0.0, d_rf = 0.0;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        d_ar = std::max(d_ar, std::abs(closed[i] - via_resolvent.values[i]));
        d_af = std::max(d_af, std::abs(closed[i] - via_ft.values[i]));
        d_rf = std::max(d_rf, std::abs(via_resolvent.values[i] - via_ft.values[i]));
    }
    check.require(d_ar < 0.01 * peak, "analytic vs resolvent " + std::to_string(d_ar / peak));
    check.require(d_af < 0.01 * peak, "analytic vs ft " + std::to_string(d_af / peak));
    check.require(d_rf < 0.01 * peak, "resolvent vs ft " + std::to_string(d_rf / peak));
    return check;
}

// 10. symmetric point: equal half-weight peaks at -g and +g
Check criterion_10() {
    Check check;
    model::EffectiveParams p;
    p.delta_a = 0.0;
    p.delta_r = 0.0;
    p.g = 0.2;
    p.gamma = 0.004;
    p.kappa = 0.002;  // kappa = gamma/2
    p.xi = 0.02;
    const auto c = analytic::coefficients(p);
    check.require(std::abs(c.mu12 - Complex(0.5)) < 1e-12, "mu12 != 1/2");
    check.require(std::abs(c.mu21 - Complex(0.5)) < 1e-12, "mu21 != 1/2");

    const auto s = resolvent_spectrum(p, testsupport::n1_basis(),
                                      spectrum::default_omega_grid(c, 4001));
    const auto report = spectrum::find_peaks(s);
    check.require(report.peaks.size() == 2, "expected two peaks");
    if (report.peaks.size() == 2) {
        check.require(std::abs(report.peaks[0].position + p.g) < 2e-3, "left peak not at -g");
        check.require(std::abs(report.peaks[1].position - p.g) < 2e-3, "right peak not at +g");
        const double h0 = report.peaks[0].height, h1 = report.peaks[1].height;
        check.require(std::abs(h0 - h1) < 1e-3 * std::max(h0, h1),
                      "peak heights differ by " +
                          std::to_string(std::abs(h0 - h1) / std::max(h0, h1)));
    }
    return check;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Check()> body;
        double budget_seconds;  // 0 = untimed
    };
    const std::vector<Criterion> criteria = {
        {1, "Rabi splitting at the published parameters", criterion_1, 5.0},
        {2, "truncation insensitivity across N = 1, 2, 3", criterion_2, 30.0},
        {3, "detuning ordering and peak asymmetry", criterion_3, 0.0},
        {4, "drive insensitivity of the peak positions", criterion_4, 0.0},
        {5, "QRT trace vs two-exponential closed form", criterion_5, 0.0},
        {6, "algebraic identity suite over 1000 draws", criterion_6, 0.0},
        {7, "Lindblad sanity at presets and 100 draws", criterion_7, 0.0},
        {8, "one-excitation generator transcription", criterion_8, 0.0},
        {9, "method triangle within 1% of peak height", criterion_9, 0.0},
        {10, "symmetric point equal-weight doublet", criterion_10, 0.0},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            check = criterion.body();
        } catch (const std::exception& e) {
            check.ok = false;
            check.note(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
            check.ok = false;
            check.note("runtime " + std::to_string(elapsed) + " s over budget " +
                       std::to_string(criterion.budget_seconds) + " s");
        }
        if (!check.ok) ++failed;
        std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", check.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.title, elapsed,
                    check.detail.tellp() > 0 ? " -- " : "", check.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}

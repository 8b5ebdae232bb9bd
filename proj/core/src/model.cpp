#include "namrqed/model.hpp"

#include <cmath>

namespace namrqed::model {

namespace {
constexpr double pi = 3.14159265358979323846;
}

DerivedEffective derive_effective(const DeviceParams& dev) {
    if (dev.d <= 0.0) throw InvalidDevice("derive_effective: d must be positive");
    if (dev.M <= 0.0) throw InvalidDevice("derive_effective: M must be positive");
    if (dev.Omega <= 0.0) throw InvalidDevice("derive_effective: Omega must be positive");
    if (dev.n_g < 0.0 || dev.n_g > 1.0)
        throw InvalidDevice("derive_effective: n_g outside [0, 1]");
    if (dev.kappa < 0.0 || dev.gamma < 0.0)
        throw InvalidDevice("derive_effective: negative decay rate");

    DerivedEffective out;
    out.E_J = 2.0 * dev.E_J0 * std::cos(pi * dev.flux_ratio);

    const double charge_term = 4.0 * dev.E_C * (2.0 * dev.n_g - 1.0);
    if (out.E_J == 0.0 && charge_term == 0.0)
        throw InvalidDevice("derive_effective: mixing angle undefined at E_J = 0, n_g = 1/2");

    out.omega_a = std::hypot(charge_term, out.E_J);
    // |E_J| keeps theta in [0, pi] so sin(theta) >= 0; the sign of g is
    // carried by the (n_g - 1/2) prefactor alone. sin(theta) is taken from
    // the triangle ratio so it vanishes identically at E_J = 0.
    out.theta = std::atan2(std::abs(out.E_J), charge_term);
    const double sin_theta = std::abs(out.E_J) / out.omega_a;

    const double omega_ang = 2.0 * pi * dev.Omega * 1e9;  // rad/s
    out.x_zpf = std::sqrt(hbar_si / (2.0 * dev.M * omega_ang));

    const double c_sigma = 2.0 * dev.C_J + dev.C_g + dev.C_n;
    const double e_c_joule = dev.E_C * ghz_to_joule;
    const double g_joule = (dev.n_g - 0.5) * (4.0 * e_c_joule * dev.C_n / (dev.d * c_sigma)) *
                           sin_theta * out.x_zpf;
    const double xi_joule = 0.5 * dev.l * dev.B * dev.I0 * out.x_zpf;

    out.params.g = g_joule / ghz_to_joule;
    out.params.xi = xi_joule / ghz_to_joule;
    out.params.delta_a = out.omega_a - dev.omega_p;
    out.params.delta_r = dev.Omega - dev.omega_p;
    out.params.kappa = dev.kappa;
    out.params.gamma = dev.gamma;
    out.params.emf_prefactor = dev.B * dev.B * dev.l * dev.l * hbar_si * omega_ang / (2.0 * dev.M);
    return out;
}

LabeledOperator build_hamiltonian(const EffectiveParams& p, const BasisSpec& basis) {
    const auto labels = hilbert::enumerate_basis(basis);
    const Eigen::Index dim = static_cast<Eigen::Index>(labels.size());
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

    for (Eigen::Index c = 0; c < dim; ++c) {
        const auto& s = labels[c];
        h(c, c) = p.delta_a * s.j + p.delta_r * s.k;

        // Jaynes-Cummings exchange: <1,k-1| a s+ |0,k> = sqrt(k). The
        // element is taken from the untruncated product and projected, so
        // the excitation-conserving coupling survives TotalExcitation
        // truncation (the intermediate state |1,k> may lie outside).
        if (s.j == 0 && s.k >= 1) {
            const Eigen::Index r = hilbert::basis_index(basis, {1, s.k - 1});
            if (r >= 0) {
                const double amp = p.g * std::sqrt(static_cast<double>(s.k));
                h(r, c) += amp;
                h(c, r) += amp;
            }
        }

        // drive: -xi (a + a^dag), elements <j,k+1| a^dag |j,k> = sqrt(k+1)
        const Eigen::Index r = hilbert::basis_index(basis, {s.j, s.k + 1});
        if (r >= 0) {
            const double amp = -p.xi * std::sqrt(static_cast<double>(s.k + 1));
            h(r, c) += amp;
            h(c, r) += amp;
        }
    }
    return {basis, h, "H_eff"};
}

LabeledOperator emf_operator(const EffectiveParams& p, const BasisSpec& basis) {
    const auto ops = hilbert::ladder_ops(basis);
    const numerics::Complex ic(0.0, std::sqrt(p.emf_prefactor));
    return {basis, ic * (ops.a_dag.matrix - ops.a.matrix), "V"};
}

} // namespace namrqed::model

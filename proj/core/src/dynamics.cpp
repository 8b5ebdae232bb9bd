#include "namrqed/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace namrqed::dynamics {

double DensityMatrix::hermiticity_defect() const {
    return numerics::infinity_norm(ComplexMatrix(matrix - matrix.adjoint()));
}

double DensityMatrix::min_eigenvalue() const {
    const ComplexMatrix herm = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
    return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::valid(double herm_tol, double trace_tol, double positivity_tol) const {
    return hermiticity_defect() < herm_tol && std::abs(trace() - 1.0) < trace_tol &&
           min_eigenvalue() > -positivity_tol;
}

ComplexVector trace_row(const BasisSpec& basis) {
    const Eigen::Index d = basis.dimension();
    ComplexVector row = ComplexVector::Zero(d * d);
    for (Eigen::Index i = 0; i < d; ++i) row(i * d + i) = 1.0;
    return row;
}

Liouvillian build_liouvillian(const LabeledOperator& h, const model::EffectiveParams& p) {
    const Eigen::Index d = h.basis.dimension();
    if (h.matrix.rows() != d || h.matrix.cols() != d)
        throw BasisMismatch("build_liouvillian: Hamiltonian dimension does not match basis");

    const auto ops = hilbert::ladder_ops(h.basis);
    const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
    const numerics::Complex iu(0.0, 1.0);

    const ComplexMatrix& a = ops.a.matrix;
    const ComplexMatrix& sm = ops.sigma_minus.matrix;
    const ComplexMatrix ada = ops.a_dag.matrix * a;
    const ComplexMatrix sps = ops.sigma_plus.matrix * sm;

    using numerics::kron;
    ComplexMatrix superop = -iu * (kron(h.matrix, eye) - kron(eye, h.matrix.transpose()));
    superop += p.kappa * (2.0 * kron(a, a.conjugate()) - kron(ada, eye) -
                          kron(eye, ada.transpose()));
    superop += 0.5 * p.gamma * (2.0 * kron(sm, sm.conjugate()) - kron(sps, eye) -
                                kron(eye, sps.transpose()));
    return {h.basis, std::move(superop), p.kappa, p.gamma};
}

std::vector<DensityMatrix> propagate(const Liouvillian& l, const DensityMatrix& rho0,
                                     const std::vector<double>& times) {
    if (rho0.basis != l.basis)
        throw BasisMismatch("propagate: density matrix basis differs from Liouvillian");
    const Eigen::Index d = l.dim();
    double prev = 0.0;
    for (double t : times) {
        if (t < 0.0 || t < prev) throw std::invalid_argument("propagate: times must be ascending and nonnegative");
        prev = t;
    }

    const ComplexVector v0 = numerics::vec(rho0.matrix);
    std::vector<DensityMatrix> out;
    out.reserve(times.size());
    try {
        const numerics::EigResult e = numerics::eig(l.superop);
        const ComplexVector c0 = e.vectors_inv * v0;
        for (double t : times) {
            if (t == 0.0) {
                out.push_back({l.basis, rho0.matrix});
                continue;
            }
            ComplexVector c = c0;
            for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(e.values(k) * t);
            out.push_back({l.basis, numerics::unvec(e.vectors * c, d, d)});
        }
    } catch (const DefectiveMatrix&) {
        for (double t : times)
            out.push_back({l.basis, numerics::unvec(numerics::expm_action(l.superop, t, v0), d, d)});
    }
    return out;
}

DensityMatrix steady_state(const Liouvillian& l, SteadyStateInfo* info) {
    const Eigen::Index d = l.dim();
    const ComplexVector x = numerics::null_vector(l.superop, trace_row(l.basis), 1.0);

    DensityMatrix rho{l.basis, numerics::unvec(x, d, d)};
    rho.matrix = 0.5 * (rho.matrix + rho.matrix.adjoint().eval());
    rho.matrix /= rho.matrix.trace().real();

    if (info) {
        info->residual = numerics::infinity_norm(ComplexVector(l.superop * numerics::vec(rho.matrix)));
        // drive-induced coherences out of |0,0>; large values mean the
        // first-order treatment is out of its depth
        const auto labels = hilbert::enumerate_basis(l.basis);
        double max_coh = 0.0;
        for (Eigen::Index c = 1; c < d; ++c)
            if (labels[c].j + labels[c].k == 1) max_coh = std::max(max_coh, std::abs(rho.matrix(0, c)));
        info->max_drive_coherence = max_coh;
        info->perturbative_warning = max_coh >= 0.1;
    }
    return rho;
}

} // namespace namrqed::dynamics

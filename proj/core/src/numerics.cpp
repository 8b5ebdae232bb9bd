#include "namrqed/numerics.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace namrqed::numerics {

double infinity_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double infinity_norm(const ComplexVector& v) {
    if (v.size() == 0) return 0.0;
    return v.cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.size() == 0) return true;
    return (a - b).cwiseAbs().maxCoeff() <= abs_tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector vec(const ComplexMatrix& m) {
    ComplexVector v(m.rows() * m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
    return v;
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
    return m;
}

ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b,
                           const Tolerances& tol) {
    if (a.rows() != a.cols()) throw SingularMatrix("solve_linear: matrix not square");
    if (a.rows() != b.size()) throw SingularMatrix("solve_linear: size mismatch");
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    const double rc = lu.rcond();
    if (!(rc > tol.singular_rcond))
        throw SingularMatrix("solve_linear: rank deficient (rcond " + std::to_string(rc) + ")");
    return lu.solve(b);
}

EigResult eig(const ComplexMatrix& a, const Tolerances& tol) {
    if (a.rows() != a.cols()) throw DefectiveMatrix("eig: matrix not square");
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw DefectiveMatrix("eig: solver failed");

    EigResult result;
    result.values = solver.eigenvalues();
    result.vectors = solver.eigenvectors();

    Eigen::PartialPivLU<ComplexMatrix> lu(result.vectors);
    if (!(lu.rcond() > tol.kernel_rel))
        throw DefectiveMatrix("eig: eigenvector matrix numerically singular");
    result.vectors_inv = lu.inverse();

    const double residual = infinity_norm(
        ComplexMatrix(a * result.vectors - result.vectors * result.values.asDiagonal()));
    const double scale = infinity_norm(a);
    if (scale > 0.0 && residual > tol.eig_residual * scale)
        throw DefectiveMatrix("eig: reconstruction residual " + std::to_string(residual / scale));
    return result;
}

ComplexVector expm_action(const ComplexMatrix& a, double t, const ComplexVector& v,
                          const Tolerances& tol) {
    if (!a.allFinite() || !v.allFinite())
        throw std::invalid_argument("expm_action: non-finite input");
    if (t < 0.0) throw std::invalid_argument("expm_action: negative time");
    if (t == 0.0) return v;
    try {
        const EigResult e = eig(a, tol);
        ComplexVector c = e.vectors_inv * v;
        for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(e.values(k) * t);
        return e.vectors * c;
    } catch (const DefectiveMatrix&) {
        // scaling-and-squaring on the full matrix
        const ComplexMatrix expm = (a * t).exp();
        ComplexVector out = expm * v;
        if (!out.allFinite()) throw DefectiveMatrix("expm_action: fallback produced non-finite values");
        return out;
    }
}

ComplexVector null_vector(const ComplexMatrix& a, const ComplexVector& constraint_row,
                          Complex constraint_value, const Tolerances& tol) {
    if (a.rows() != a.cols()) throw AmbiguousKernel("null_vector: matrix not square");
    if (a.rows() != constraint_row.size())
        throw AmbiguousKernel("null_vector: constraint size mismatch");

    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const RealVector& sigma = svd.singularValues();
    const double smax = sigma.size() ? sigma(0) : 0.0;

    int kernel_dim = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) <= tol.kernel_rel * smax) ++kernel_dim;
    if (smax == 0.0) kernel_dim = static_cast<int>(a.rows());
    if (kernel_dim != 1)
        throw AmbiguousKernel("null_vector: kernel dimension " + std::to_string(kernel_dim));

    ComplexVector x = svd.matrixV().col(a.cols() - 1);
    const Complex scale = (constraint_row.transpose() * x)(0);
    if (std::abs(scale) <= tol.kernel_rel)
        throw AmbiguousKernel("null_vector: constraint row orthogonal to kernel");
    return x * (constraint_value / scale);
}

} // namespace namrqed::numerics

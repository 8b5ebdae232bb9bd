// numerics.hpp — Dense complex linear-algebra contracts shared by all modules.
//
// Everything here is a pure function of its inputs. Matrices are dense
// Eigen storage; Eigen supplies the decompositions behind the contracts.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "namrqed/errors.hpp"

namespace namrqed::numerics {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances used by the contract checks below. A single record so tests
// can tighten them in one place.
struct Tolerances {
    double singular_rcond = 1e-12;  // reciprocal-condition floor for solves
    double eig_residual = 1e-8;     // ||A V - V D||_inf / ||A||_inf ceiling
    double kernel_rel = 1e-9;       // sigma_i / sigma_0 threshold for kernel membership
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

double infinity_norm(const ComplexMatrix& m);
double infinity_norm(const ComplexVector& v);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

// Kronecker product, row/column order as stored.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Row-major vectorization: vec(X)(r*D + c) = X(r, c). This is the stacking
// convention used for all superoperators in the library; under it
// vec(A X B) = (A (x) B^T) vec(X).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

// Solve A x = b for square nonsingular A.
// Throws SingularMatrix when the LU reciprocal condition number falls
// below tol.singular_rcond.
ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b,
                           const Tolerances& tol = default_tolerances());

struct EigResult {
    ComplexVector values;
    ComplexMatrix vectors;       // right eigenvectors, one per column
    ComplexMatrix vectors_inv;
};

// Dense eigendecomposition with a diagonalizability check: throws
// DefectiveMatrix when the eigenvector matrix is numerically singular or
// the reconstruction residual exceeds tol.eig_residual * ||A||_inf.
EigResult eig(const ComplexMatrix& a, const Tolerances& tol = default_tolerances());

// e^{A t} v. Eigendecomposition path with a scaling-and-squaring fallback
// for defective A. Requires finite entries and t >= 0.
ComplexVector expm_action(const ComplexMatrix& a, double t, const ComplexVector& v,
                          const Tolerances& tol = default_tolerances());

// One-dimensional kernel vector of A, scaled so that
// constraint_row . x = constraint_value (plain bilinear product, no
// conjugation). Throws AmbiguousKernel when the kernel dimension at
// tol.kernel_rel is not exactly one, or the constraint is orthogonal to it.
ComplexVector null_vector(const ComplexMatrix& a, const ComplexVector& constraint_row,
                          Complex constraint_value,
                          const Tolerances& tol = default_tolerances());

} // namespace namrqed::numerics

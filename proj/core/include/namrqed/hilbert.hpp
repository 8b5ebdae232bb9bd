// hilbert.hpp — Truncated qubit (x) phonon state spaces and the canonical
// operators on them.
//
// Basis states are labeled |j,k> with j in {0,1} the qubit excitation and
// k >= 0 the phonon number. Two truncation schemes:
//   TotalExcitation : j + k <= N   (dimension 2N+1 for N >= 1, 1 for N = 0)
//   FockCutoff      : k <= N, full qubit  (dimension 2(N+1))
// Truncation acts by projection: matrix elements reaching outside the kept
// set are dropped, never renormalized.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "namrqed/numerics.hpp"

namespace namrqed::hilbert {

using numerics::ComplexMatrix;

enum class TruncationScheme { TotalExcitation, FockCutoff };

struct StateLabel {
    int j = 0;  // qubit excitation, 0 or 1
    int k = 0;  // phonon number
    bool operator==(const StateLabel&) const = default;
};

struct BasisSpec {
    TruncationScheme scheme = TruncationScheme::TotalExcitation;
    int cutoff = 1;
    bool operator==(const BasisSpec&) const = default;

    Eigen::Index dimension() const;
    bool contains(const StateLabel& s) const;
};

// Deterministic state ordering:
//   TotalExcitation : ascending j + k, then ascending j within a level,
//                     e.g. N=1 -> (0,0), (0,1), (1,0)
//   FockCutoff      : product enumeration, ascending k then ascending j,
//                     e.g. N=2 -> (0,0), (1,0), (0,1), (1,1), (0,2), (1,2)
std::vector<StateLabel> enumerate_basis(const BasisSpec& spec);

// Index of a label in enumerate_basis order; -1 when outside the space.
Eigen::Index basis_index(const BasisSpec& spec, const StateLabel& s);

struct LabeledOperator {
    BasisSpec basis;
    ComplexMatrix matrix;
    std::string name;
};

struct LadderOps {
    LabeledOperator a;
    LabeledOperator a_dag;
    LabeledOperator sigma_minus;
    LabeledOperator sigma_plus;
    LabeledOperator sigma_z;
    LabeledOperator identity;
};

// a|j,k> = sqrt(k)|j,k-1>, sigma_+|0,k> = |1,k>, out-of-space amplitudes
// dropped; a_dag and sigma_minus are the adjoints within the space.
// sigma_z = diag(2j - 1).
LadderOps ladder_ops(const BasisSpec& spec);

// N = sigma_+ sigma_- + a^dag a, diagonal with entries j + k.
LabeledOperator number_operator(const BasisSpec& spec);

} // namespace namrqed::hilbert

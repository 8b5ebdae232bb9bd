#include "namrqed/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace namrqed::hilbert {

Eigen::Index BasisSpec::dimension() const {
    if (cutoff < 0) throw std::invalid_argument("BasisSpec: negative cutoff");
    if (scheme == TruncationScheme::TotalExcitation)
        return cutoff == 0 ? 1 : 2 * cutoff + 1;
    return 2 * (cutoff + 1);
}

bool BasisSpec::contains(const StateLabel& s) const {
    if (s.j < 0 || s.j > 1 || s.k < 0) return false;
    if (scheme == TruncationScheme::TotalExcitation) return s.j + s.k <= cutoff;
    return s.k <= cutoff;
}

std::vector<StateLabel> enumerate_basis(const BasisSpec& spec) {
    if (spec.cutoff < 0) throw std::invalid_argument("enumerate_basis: negative cutoff");
    std::vector<StateLabel> basis;
    if (spec.scheme == TruncationScheme::TotalExcitation) {
        for (int n = 0; n <= spec.cutoff; ++n)
            for (int j = 0; j <= 1; ++j) {
                const StateLabel s{j, n - j};
                if (s.k >= 0 && spec.contains(s)) basis.push_back(s);
            }
    } else {
        for (int k = 0; k <= spec.cutoff; ++k)
            for (int j = 0; j <= 1; ++j) basis.push_back({j, k});
    }
    return basis;
}

Eigen::Index basis_index(const BasisSpec& spec, const StateLabel& s) {
    if (!spec.contains(s)) return -1;
    if (spec.scheme == TruncationScheme::FockCutoff) return 2 * s.k + s.j;
    const int n = s.j + s.k;
    // level n starts at index 2n-1 for n >= 1 and holds (0,n) then (1,n-1)
    if (n == 0) return 0;
    return 2 * n - 1 + s.j;
}

LadderOps ladder_ops(const BasisSpec& spec) {
    const auto basis = enumerate_basis(spec);
    const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());

    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix sm = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix sz = ComplexMatrix::Zero(dim, dim);

    for (Eigen::Index c = 0; c < dim; ++c) {
        const StateLabel& s = basis[c];
        if (s.k >= 1) {
            const Eigen::Index r = basis_index(spec, {s.j, s.k - 1});
            if (r >= 0) a(r, c) = std::sqrt(static_cast<double>(s.k));
        }
        if (s.j == 1) {
            const Eigen::Index r = basis_index(spec, {0, s.k});
            if (r >= 0) sm(r, c) = 1.0;
        }
        sz(c, c) = 2.0 * s.j - 1.0;
    }

    LadderOps ops;
    ops.a = {spec, a, "a"};
    ops.a_dag = {spec, a.adjoint(), "a_dag"};
    ops.sigma_minus = {spec, sm, "sigma_minus"};
    ops.sigma_plus = {spec, sm.adjoint(), "sigma_plus"};
    ops.sigma_z = {spec, sz, "sigma_z"};
    ops.identity = {spec, ComplexMatrix::Identity(dim, dim), "identity"};
    return ops;
}

LabeledOperator number_operator(const BasisSpec& spec) {
    const auto basis = enumerate_basis(spec);
    const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) n(i, i) = basis[i].j + basis[i].k;
    return {spec, n, "number"};
}

} // namespace namrqed::hilbert

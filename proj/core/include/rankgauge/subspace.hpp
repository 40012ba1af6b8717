// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/linalg.hpp"
#include "rankgauge/tensor.hpp"

#include <span>
#include <vector>

namespace rankgauge {

class MixedState;

inline constexpr double kGramSchmidtTolerance = 1e-10;
inline constexpr double kSupportTolerance     = 1e-10;

/// Subspace held as an orthonormal basis (one column per basis vector). The
/// projectors are never materialized. The full space is representable (a support
/// space can be everything) but measures reject it.
class Subspace {
  public:
    /// Modified Gram-Schmidt with one reorthogonalization pass. Inputs whose residual
    /// falls below tol * (largest input norm) are dropped.
    static Subspace from_spanning_set(std::span<const PureState> vectors, double tol = kGramSchmidtTolerance);
    /// Columns must already be orthonormal within 1e-10.
    static Subspace from_orthonormal(DimList dims, CMatrix basis);

    [[nodiscard]] const DimList &dims() const { return dims_; }
    [[nodiscard]] Index          dim() const { return basis_.cols(); }
    [[nodiscard]] const CMatrix &basis() const { return basis_; }
    [[nodiscard]] PureState      vector(Index i) const { return PureState(dims_, basis_.col(i)); }
    [[nodiscard]] bool           is_full() const { return basis_.cols() == dims_.total(); }

  private:
    Subspace(DimList dims, CMatrix basis);

    friend Subspace complement_basis(const Subspace &);
    friend Subspace support_space(const MixedState &, double);
    friend Subspace apply_unitary_to_subspace(const Subspace &, const CMatrix &);

    DimList dims_;
    CMatrix basis_;
};

/// Density matrix; Hermitian, unit trace, eigenvalues >= -1e-10.
class MixedState {
  public:
    MixedState(DimList dims, CMatrix matrix);
    static MixedState from_ensemble(std::span<const double> weights, std::span<const PureState> states);
    static MixedState pure(const PureState &psi);

    [[nodiscard]] const DimList     &dims() const { return dims_; }
    [[nodiscard]] const HermitianOp &matrix() const { return matrix_; }

  private:
    DimList     dims_;
    HermitianOp matrix_;
};

/// <phi|P_perp|phi> = 1 - sum_i |<e_i|phi>|^2 for normalized phi, clamped to [0,1].
double complement_overlap_sq(const Subspace &sub, const PureState &phi);

/// Orthonormal basis of the orthogonal complement.
Subspace complement_basis(const Subspace &sub);

/// Span of eigenvectors of rho with eigenvalue above eig_tol.
Subspace support_space(const MixedState &rho, double eig_tol = kSupportTolerance);

/// Basis {U e_i}. U must be unitary within 1e-8.
Subspace apply_unitary_to_subspace(const Subspace &sub, const CMatrix &u);

/// max |<e_i|e_j> - delta_ij|
double orthonormality_error(const CMatrix &basis);

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/tensor.hpp"

namespace rankgauge {

/// Square Hermitian matrix. Construction rejects asymmetry beyond 1e-8 and stores
/// the Hermitian part, so the stored entries are exactly Hermitian.
class HermitianOp {
  public:
    HermitianOp() = default;
    explicit HermitianOp(CMatrix entries);

    static HermitianOp zero(Index dim) { return HermitianOp(CMatrix::Zero(dim, dim)); }

    [[nodiscard]] Index          dim() const { return entries_.rows(); }
    [[nodiscard]] const CMatrix &entries() const { return entries_; }

    friend HermitianOp operator*(double s, const HermitianOp &h) { return HermitianOp(s * h.entries_); }

  private:
    CMatrix entries_;
};

struct SvdResult {
    CMatrix U;
    RVector singular; // descending
    CMatrix Vh;
};

struct EigResult {
    RVector values; // descending
    CMatrix vectors;
};

/// Thin SVD, M = U diag(s) Vh.
SvdResult svd_complex(const CMatrix &m);

EigResult hermitian_eig(const HermitianOp &h);

/// exp(-iH) assembled from the eigendecomposition.
CMatrix unitary_from_hamiltonian(const HermitianOp &h);

double trace_norm(const HermitianOp &h);

/// max |(U U^dag - I)_ij| <= tol
bool is_unitary(const CMatrix &u, double tol);

} // namespace rankgauge

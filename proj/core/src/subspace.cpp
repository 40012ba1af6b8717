// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/subspace.hpp"

#include "rankgauge/errors.hpp"

#include <Eigen/QR>
#include <fmt/format.h>

#include <algorithm>

namespace rankgauge {

double orthonormality_error(const CMatrix &basis) {
    if(basis.cols() == 0) return 0.0;
    return (basis.adjoint() * basis - CMatrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
}

Subspace::Subspace(DimList dims, CMatrix basis) : dims_(std::move(dims)), basis_(std::move(basis)) {
    if(basis_.rows() != dims_.total()) throw UsageError("Subspace: basis length does not match dims");
    if(basis_.cols() < 1) throw UsageError("Subspace: empty basis");
    if(basis_.cols() > dims_.total()) throw UsageError("Subspace: more basis vectors than the total dimension");
}

Subspace Subspace::from_orthonormal(DimList dims, CMatrix basis) {
    const double err = orthonormality_error(basis);
    if(err > 1e-10) throw UsageError(fmt::format("Subspace: basis not orthonormal (error {:.3e})", err));
    return Subspace(std::move(dims), std::move(basis));
}

Subspace Subspace::from_spanning_set(std::span<const PureState> vectors, double tol) {
    if(vectors.empty()) throw UsageError("from_spanning_set: empty vector list");
    const DimList &dims     = vectors.front().dims();
    double         max_norm = 0.0;
    for(const auto &v : vectors) {
        if(!(v.dims() == dims)) throw UsageError("from_spanning_set: vectors have different dims");
        max_norm = std::max(max_norm, v.norm());
    }
    if(!(max_norm > 0.0)) throw UsageError("from_spanning_set: all vectors are zero");

    const Index D = dims.total();
    CMatrix     basis(D, std::min<Index>(D, static_cast<Index>(vectors.size())));
    Index       kept = 0;
    for(const auto &v : vectors) {
        CVector w = v.amp();
        for(int pass = 0; pass < 2; ++pass)
            for(Index j = 0; j < kept; ++j) w -= basis.col(j) * basis.col(j).dot(w);
        const double res = w.norm();
        if(res < tol * max_norm) continue;
        basis.col(kept++) = w / res;
        if(kept == D) break;
    }
    if(kept == 0) throw UsageError("from_spanning_set: spanning set has zero span");
    return Subspace(dims, basis.leftCols(kept));
}

MixedState::MixedState(DimList dims, CMatrix matrix) : dims_(std::move(dims)) {
    if(matrix.rows() != dims_.total()) throw UsageError("MixedState: matrix size does not match dims");
    if((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw UsageError("MixedState: matrix is not Hermitian");
    matrix_ = HermitianOp(std::move(matrix));
    const double tr = matrix_.entries().trace().real();
    if(std::abs(tr - 1.0) > 1e-10) throw UsageError(fmt::format("MixedState: trace {} != 1", tr));
    const double lowest = hermitian_eig(matrix_).values.minCoeff();
    if(lowest < -1e-10) throw UsageError(fmt::format("MixedState: negative eigenvalue {:.3e}", lowest));
}

MixedState MixedState::from_ensemble(std::span<const double> weights, std::span<const PureState> states) {
    if(weights.size() != states.size() || states.empty()) throw UsageError("MixedState::from_ensemble: size mismatch");
    const DimList &dims = states.front().dims();
    CMatrix        rho  = CMatrix::Zero(dims.total(), dims.total());
    for(std::size_t i = 0; i < states.size(); ++i) {
        if(!(states[i].dims() == dims)) throw UsageError("MixedState::from_ensemble: dims mismatch");
        const CVector psi = states[i].normalize().amp();
        rho += weights[i] * psi * psi.adjoint();
    }
    return MixedState(dims, std::move(rho));
}

MixedState MixedState::pure(const PureState &psi) {
    const CVector v = psi.normalize().amp();
    return MixedState(psi.dims(), v * v.adjoint());
}

double complement_overlap_sq(const Subspace &sub, const PureState &phi) {
    if(!(phi.dims() == sub.dims()))
        throw UsageError(fmt::format("complement_overlap_sq: dims {} vs {}", phi.dims().to_string(), sub.dims().to_string()));
    const CVector coeff = sub.basis().adjoint() * phi.amp();
    return std::clamp(1.0 - coeff.squaredNorm(), 0.0, 1.0);
}

Subspace complement_basis(const Subspace &sub) {
    if(sub.is_full()) throw UsageError("complement_basis: subspace is the full space");
    const Index                   D = sub.dims().total();
    Eigen::HouseholderQR<CMatrix> qr(sub.basis());
    const CMatrix                 q = qr.householderQ() * CMatrix::Identity(D, D);
    return Subspace(sub.dims(), q.rightCols(D - sub.dim()));
}

Subspace support_space(const MixedState &rho, double eig_tol) {
    const auto eig  = hermitian_eig(rho.matrix());
    Index      keep = 0;
    while(keep < eig.values.size() && eig.values[keep] > eig_tol) ++keep;
    if(keep == 0) throw UsageError("support_space: no eigenvalue above tolerance");
    return Subspace(rho.dims(), eig.vectors.leftCols(keep));
}

Subspace apply_unitary_to_subspace(const Subspace &sub, const CMatrix &u) {
    if(u.rows() != sub.dims().total() || !is_unitary(u, 1e-8)) throw UsageError("apply_unitary_to_subspace: operator is not unitary");
    return Subspace(sub.dims(), u * sub.basis());
}

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/linalg.hpp"

#include "rankgauge/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <fmt/format.h>

namespace rankgauge {

HermitianOp::HermitianOp(CMatrix entries) {
    if(entries.rows() != entries.cols()) throw UsageError("HermitianOp: matrix is not square");
    if(!entries.allFinite()) throw UsageError("HermitianOp: non-finite entry");
    const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
    if(entries.size() > 0 && asym > 1e-8) throw UsageError(fmt::format("HermitianOp: asymmetry {:.3e} exceeds 1e-8", asym));
    entries_ = 0.5 * (entries + entries.adjoint());
}

SvdResult svd_complex(const CMatrix &m) {
    if(!m.allFinite()) throw UsageError("svd_complex: non-finite entry");
    // Two-sided Jacobi keeps small singular values accurate to machine precision.
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV().adjoint()};
}

EigResult hermitian_eig(const HermitianOp &h) {
    if(h.dim() == 0) return {RVector(), CMatrix()};
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.entries());
    if(es.info() != Eigen::Success) throw Error("hermitian_eig: eigensolver did not converge");
    // Eigen orders ascending.
    return {es.eigenvalues().reverse(), es.eigenvectors().rowwise().reverse()};
}

CMatrix unitary_from_hamiltonian(const HermitianOp &h) {
    const auto eig   = hermitian_eig(h);
    CVector    phase = eig.values.unaryExpr([](double x) { return std::polar(1.0, -x); });
    return eig.vectors * phase.asDiagonal() * eig.vectors.adjoint();
}

double trace_norm(const HermitianOp &h) { return hermitian_eig(h).values.cwiseAbs().sum(); }

bool is_unitary(const CMatrix &u, double tol) {
    if(u.rows() != u.cols()) return false;
    return ((u * u.adjoint()) - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

} // namespace rankgauge

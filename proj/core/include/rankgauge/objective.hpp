// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/rank_param.hpp"
#include "rankgauge/subspace.hpp"

#include <functional>
#include <memory>

namespace rankgauge {

/// Applies P_perp to vectors over the subspace's space. Uses whichever of the
/// subspace basis or its complement basis is smaller; shared read-only across trials.
class ComplementProjector {
  public:
    explicit ComplementProjector(const Subspace &sub);

    [[nodiscard]] const DimList &dims() const { return dims_; }
    /// out = P_perp t. `coeff` is caller scratch.
    void apply(const CVector &t, CVector &out, CVector &coeff) const;

  private:
    DimList dims_;
    CMatrix basis_;
    bool    complement_ = false; // true: basis_ spans S^perp
};

struct LossEvaluation {
    double  value;
    RVector gradient;
};

/// L(x) = <phi(x)|P_perp|phi(x)> and its exact gradient for a fixed rank budget.
///
/// With T the unnormalized tensor sum, N = <T|T> and res = P_perp T, the loss is
/// |res|^2 / N and dL/dx = 2 Re <G | dT/dx> with G = (res - L T) / N. The overlap
/// of G with each term is contracted party by party and pushed through the factor
/// normalization and the softplus weight.
///
/// Holds per-evaluation scratch; one instance per worker.
class LossFunction {
  public:
    LossFunction(std::shared_ptr<const ComplementProjector> projector, int rank);
    LossFunction(const Subspace &sub, int rank);

    [[nodiscard]] const DimList &dims() const { return projector_->dims(); }
    [[nodiscard]] int            rank() const { return rank_; }
    [[nodiscard]] Index          size() const { return RankParams::size_for(dims(), rank_); }

    double value(const RVector &x);
    double value_and_gradient(const RVector &x, RVector &grad);

  private:
    double forward(const RVector &x);

    std::shared_ptr<const ComplementProjector> projector_;
    int                                        rank_;
    std::vector<Index>                         party_offset_;

    // scratch
    RVector                           lambda_, sig_;
    std::vector<std::vector<CVector>> phi_;  // [term][party]
    std::vector<std::vector<double>>  norm_; // [term][party]
    CVector                           total_, residual_, coeff_, g_, term_, buf_a_, buf_b_;
};

double         loss(const RankParams &p, const Subspace &sub);
LossEvaluation loss_and_gradient(const RankParams &p, const Subspace &sub);

/// Central differences (f(x + h e_j) - f(x - h e_j)) / 2h.
RVector finite_diff_gradient(const std::function<double(const RVector &)> &f, const RVector &x, double step);
RVector finite_diff_gradient(const RankParams &p, const Subspace &sub, double step);

} // namespace rankgauge

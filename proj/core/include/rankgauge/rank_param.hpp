// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/tensor.hpp"

#include <cstdint>
#include <vector>

namespace rankgauge {

/// Free real parameters of a rank-r state.
///
/// Layout per product term i (stride 2D+1, D = sum of local dims):
///   [ theta_i | alpha_i^(1) beta_i^(1) | alpha_i^(2) beta_i^(2) | ... ]
/// with alpha/beta of length d_k. The term weight is softplus(theta_i) and party
/// factor k is (alpha + i beta) / |alpha + i beta|.
class RankParams {
  public:
    RankParams() = default;
    RankParams(DimList dims, int rank, RVector x);

    static Index size_for(const DimList &dims, int rank) { return static_cast<Index>(2 * dims.local_sum() + 1) * rank; }

    [[nodiscard]] const DimList &dims() const { return dims_; }
    [[nodiscard]] int            rank() const { return rank_; }
    [[nodiscard]] const RVector &x() const { return x_; }

    [[nodiscard]] Index term_stride() const { return 2 * dims_.local_sum() + 1; }
    [[nodiscard]] Index theta_index(int term) const { return term * term_stride(); }
    [[nodiscard]] Index alpha_index(int term, int party) const { return theta_index(term) + 1 + 2 * party_offset_[party]; }
    [[nodiscard]] Index beta_index(int term, int party) const { return alpha_index(term, party) + dims_[party]; }

  private:
    DimList            dims_;
    int                rank_ = 0;
    RVector            x_;
    std::vector<Index> party_offset_; // prefix sums of d_k
};

struct TrialConfig {
    std::uint64_t seed       = 0;
    double        init_scale = 1.0;
};

/// log(1 + e^t) without overflow.
double softplus(double t);
/// Derivative of softplus.
double sigmoid(double t);

struct ProductTerm {
    double                 lambda;
    std::vector<PureState> factors;
};

ProductTerm build_product_term(const RankParams &p, int term);

/// Normalized sum_i lambda_i (x)_k phi_i^(k).
PureState build_state(const RankParams &p);

/// I.i.d. normal entries scaled by init_scale, fully determined by cfg.seed.
RankParams random_init(const DimList &dims, int rank, const TrialConfig &cfg);

/// Deterministic substream seed for (base, stream, attempt); splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t attempt = 0);

/// Embeds `p` into a larger rank budget. Extra terms get weight softplus(pad_theta)
/// and factor |0>, so the represented state is unchanged up to ~e^pad_theta.
RankParams pad_rank(const RankParams &p, int new_rank, double pad_theta = -40.0);

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/optimizer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankgauge {

inline constexpr double kZeroThreshold = 1e-6;

/// E_r(S) in [0,1]. Rejects the full space.
double er_subspace(const Subspace &sub, int r, const OptimConfig &cfg);
/// Full report of the E_r(S) run (value not clamped).
OptimReport er_subspace_report(const Subspace &sub, int r, const OptimConfig &cfg, const RankParams *warm_start = nullptr);

double er_pure(const PureState &state, int r, const OptimConfig &cfg);

/// 1 - (sum of the r-1 largest squared Schmidt coefficients across `cut`).
double er_bipartite_pure_oracle(const PureState &state, const Bipartition &cut, int r);

struct ScanEntry {
    int         r;
    double      value;
    Termination reason;
};

/// E_r for consecutive r = 2..r_max and the zero/nonzero transition.
///
/// `certified_rank` is the r with E_r >= threshold and E_{r+1} < threshold (1 when
/// E_2 is already below threshold). Without a transition it is empty and the rank
/// is only known to be >= r_max.
struct CertificateScan {
    std::vector<ScanEntry> entries;
    double                 zero_threshold = kZeroThreshold;
    std::optional<int>     certified_rank;
    int                    r_max = 0;
};

/// Minimal rank scan of a subspace. Each r also runs a warm start from the previous
/// optimum, so reported values are nonincreasing in r up to optimizer noise.
CertificateScan rank_scan(const Subspace &sub, int r_max, double zero_threshold, const OptimConfig &cfg);
/// Border rank scan of a single state.
CertificateScan border_rank_scan(const PureState &state, int r_max, double zero_threshold, const OptimConfig &cfg);

struct BipartitionValue {
    Bipartition cut;
    double      value;
};

struct GenuineScan {
    std::vector<BipartitionValue> values;
    bool                          genuinely_entangled = false;
};

/// Subspace with every basis vector regrouped into the two effective parties of `cut`.
Subspace regroup(const Subspace &sub, const Bipartition &cut);

/// E_2 across every bipartition with party 1 in K (2^(n-1)-1 cuts).
GenuineScan genuine_entanglement_scan(const Subspace &sub, const OptimConfig &cfg, double zero_threshold = kZeroThreshold);

/// er_subspace of the support; a lower bound on E_r(rho).
double support_bound_er(const MixedState &rho, int r, const OptimConfig &cfg);

/// (A + A^dag)/2 with A complex Gaussian, rescaled to the target trace norm. The
/// direction depends only on `seed`, so one seed traces a ray as the target varies.
HermitianOp random_hermitian_with_trace_norm(Index dim, double target_norm, std::uint64_t seed);

struct RobustnessResult {
    std::vector<double> trace_norm_grid;
    std::vector<double> min_er;
    int                 samples = 0;
};

/// For each trace norm t, the minimum E_r of exp(-iH) S over `samples` random H with
/// |H|_tr = t. Sample j uses the same direction at every grid point.
RobustnessResult robustness_experiment(const Subspace &sub, int r, std::vector<double> norm_grid, int samples, const OptimConfig &cfg);

} // namespace rankgauge

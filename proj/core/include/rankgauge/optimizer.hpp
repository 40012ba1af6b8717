// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/lbfgs.hpp"
#include "rankgauge/objective.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rankgauge {

struct OptimConfig {
    double        tol_grad     = 1e-10;
    double        tol_loss_rel = 1e-14;
    int           max_iters    = 10000;
    int           memory       = 10;
    int           trials       = 3;
    std::uint64_t seed         = 0;
    int           threads      = 1;
    double        init_scale   = 1.0;
    int           max_reinit   = 3;

    /// Throws UsageError on non-positive settings.
    void validate() const;
};

struct TrialDiagnostics {
    int           trial             = 0; ///< -1 for a warm start
    std::uint64_t seed              = 0;
    double        value             = 0.0;
    int           iterations        = 0;
    bool          converged         = false;
    Termination   reason            = Termination::Failed;
    int           reinitializations = 0;
};

struct TrialResult {
    double                    value; ///< +inf when the trial failed
    std::optional<RankParams> params;
    TrialDiagnostics          diagnostics;
};

struct OptimReport {
    double                        best_value = 0.0;
    RankParams                    best_params;
    PureState                     best_state;
    int                           best_trial = 0;
    std::vector<TrialDiagnostics> per_trial;
    double                        wall_time = 0.0; ///< seconds
};

LbfgsOptions to_lbfgs_options(const OptimConfig &cfg);

/// One randomly initialized minimization of the loss with the given rank budget.
/// Singular parameters restart the trial from a fresh substream, at most cfg.max_reinit times.
TrialResult minimize_trial(std::shared_ptr<const ComplementProjector> projector, int rank_budget, std::uint64_t trial_seed,
                           const OptimConfig &cfg);
TrialResult minimize_trial(const Subspace &sub, int rank_budget, std::uint64_t trial_seed, const OptimConfig &cfg);

/// Minimization started from given parameters (no reinitialization).
TrialResult minimize_from(std::shared_ptr<const ComplementProjector> projector, const RankParams &start, const OptimConfig &cfg);

/// Seed of trial `t` under cfg.seed.
std::uint64_t trial_seed(const OptimConfig &cfg, int t);

/// E_r(S): cfg.trials independent trials with rank budget r-1, reduced by min.
/// `warm_start` (rank <= r-1) adds one more trial started from the padded parameters.
/// Throws OptimizationFailure if every trial failed.
OptimReport run_certification(const Subspace &sub, int r, const OptimConfig &cfg, const RankParams *warm_start = nullptr);

} // namespace rankgauge

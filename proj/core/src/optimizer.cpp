// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/optimizer.hpp"

#include "rankgauge/errors.hpp"
#include "rankgauge/parallel.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace rankgauge {

void OptimConfig::validate() const {
    if(!(tol_grad > 0.0) || !(tol_loss_rel > 0.0)) throw UsageError("OptimConfig: tolerances must be positive");
    if(max_iters < 1 || memory < 1 || trials < 1 || threads < 1) throw UsageError("OptimConfig: counts must be positive");
    if(!(init_scale > 0.0)) throw UsageError("OptimConfig: init_scale must be positive");
    if(max_reinit < 0) throw UsageError("OptimConfig: max_reinit must be >= 0");
}

LbfgsOptions to_lbfgs_options(const OptimConfig &cfg) {
    LbfgsOptions o;
    o.tol_grad     = cfg.tol_grad;
    o.tol_loss_rel = cfg.tol_loss_rel;
    o.max_iters    = cfg.max_iters;
    o.memory       = cfg.memory;
    return o;
}

std::uint64_t trial_seed(const OptimConfig &cfg, int t) { return derive_seed(cfg.seed, static_cast<std::uint64_t>(t)); }

namespace {

bool is_converged(Termination t) {
    return t == Termination::GradientTolerance || t == Termination::LossStagnation || t == Termination::NoProgress;
}

TrialResult run_from(LossFunction &f, const RankParams &start, const OptimConfig &cfg) {
    const DimList dims = start.dims();
    const int     rank = start.rank();
    auto          res  = lbfgs_minimize([&f](const RVector &x, RVector &g) { return f.value_and_gradient(x, g); }, start.x(),
                                        to_lbfgs_options(cfg));
    TrialResult out{res.value, RankParams(dims, rank, std::move(res.x)), {}};
    out.diagnostics.value      = res.value;
    out.diagnostics.iterations = res.iterations;
    out.diagnostics.reason     = res.reason;
    out.diagnostics.converged  = is_converged(res.reason);
    return out;
}

} // namespace

TrialResult minimize_trial(std::shared_ptr<const ComplementProjector> projector, int rank_budget, std::uint64_t seed,
                           const OptimConfig &cfg) {
    if(rank_budget < 1) throw UsageError("minimize_trial: rank budget must be >= 1");
    cfg.validate();
    LossFunction f(projector, rank_budget);
    for(int attempt = 0; attempt <= cfg.max_reinit; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, 0, static_cast<std::uint64_t>(attempt));
        try {
            auto out                          = run_from(f, random_init(projector->dims(), rank_budget, {s, cfg.init_scale}), cfg);
            out.diagnostics.seed              = seed;
            out.diagnostics.reinitializations = attempt;
            return out;
        } catch(const SingularParameterError &) {
            continue;
        }
    }
    TrialResult failed{std::numeric_limits<double>::infinity(), std::nullopt, {}};
    failed.diagnostics.seed              = seed;
    failed.diagnostics.value             = failed.value;
    failed.diagnostics.reinitializations = cfg.max_reinit;
    return failed;
}

TrialResult minimize_trial(const Subspace &sub, int rank_budget, std::uint64_t seed, const OptimConfig &cfg) {
    return minimize_trial(std::make_shared<const ComplementProjector>(sub), rank_budget, seed, cfg);
}

TrialResult minimize_from(std::shared_ptr<const ComplementProjector> projector, const RankParams &start, const OptimConfig &cfg) {
    if(!(start.dims() == projector->dims())) throw UsageError("minimize_from: parameter dims do not match the subspace");
    cfg.validate();
    LossFunction f(projector, start.rank());
    try {
        return run_from(f, start, cfg);
    } catch(const SingularParameterError &) {
        TrialResult failed{std::numeric_limits<double>::infinity(), std::nullopt, {}};
        failed.diagnostics.value = failed.value;
        return failed;
    }
}

OptimReport run_certification(const Subspace &sub, int r, const OptimConfig &cfg, const RankParams *warm_start) {
    if(r < 2) throw UsageError("run_certification: r must be >= 2");
    cfg.validate();
    const auto t0     = std::chrono::steady_clock::now();
    const int  budget = r - 1;
    auto       proj   = std::make_shared<const ComplementProjector>(sub);

    const std::size_t        total = static_cast<std::size_t>(cfg.trials) + (warm_start ? 1 : 0);
    std::vector<TrialResult> results(total, TrialResult{0.0, std::nullopt, {}});
    parallel_for(total, cfg.threads, [&](std::size_t t) {
        if(t < static_cast<std::size_t>(cfg.trials)) {
            results[t]                   = minimize_trial(proj, budget, trial_seed(cfg, static_cast<int>(t)), cfg);
            results[t].diagnostics.trial = static_cast<int>(t);
        } else {
            if(warm_start->rank() > budget) throw UsageError("run_certification: warm start exceeds the rank budget");
            results[t]                   = minimize_from(proj, pad_rank(*warm_start, budget), cfg);
            results[t].diagnostics.trial = -1;
        }
    });

    OptimReport report;
    int         best = -1;
    for(std::size_t t = 0; t < total; ++t) {
        report.per_trial.push_back(results[t].diagnostics);
        if(results[t].params && (best < 0 || results[t].value < results[static_cast<std::size_t>(best)].value)) best = static_cast<int>(t);
    }
    if(best < 0) throw OptimizationFailure("every optimization trial failed");
    auto &winner       = results[static_cast<std::size_t>(best)];
    report.best_value  = winner.value;
    report.best_params = *winner.params;
    report.best_state  = build_state(report.best_params);
    report.best_trial  = winner.diagnostics.trial;
    report.wall_time   = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace rankgauge

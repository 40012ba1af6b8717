// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/measures.hpp"

#include "rankgauge/errors.hpp"
#include "rankgauge/parallel.hpp"

#include <algorithm>
#include <random>

namespace rankgauge {

OptimReport er_subspace_report(const Subspace &sub, int r, const OptimConfig &cfg, const RankParams *warm_start) {
    if(sub.is_full()) throw UsageError("er_subspace: E_r of the full space is trivially 0; supply a proper subspace");
    return run_certification(sub, r, cfg, warm_start);
}

double er_subspace(const Subspace &sub, int r, const OptimConfig &cfg) {
    return std::clamp(er_subspace_report(sub, r, cfg).best_value, 0.0, 1.0);
}

double er_pure(const PureState &state, int r, const OptimConfig &cfg) {
    const PureState psi[] = {state};
    return er_subspace(Subspace::from_spanning_set(psi), r, cfg);
}

double er_bipartite_pure_oracle(const PureState &state, const Bipartition &cut, int r) {
    if(r < 2) throw UsageError("er_bipartite_pure_oracle: r must be >= 2");
    const auto lambda = schmidt_coefficients(state, cut);
    double     kept   = 0.0;
    for(std::size_t i = 0; i < lambda.size() && static_cast<int>(i) < r - 1; ++i) kept += lambda[i] * lambda[i];
    return std::clamp(1.0 - kept, 0.0, 1.0);
}

CertificateScan rank_scan(const Subspace &sub, int r_max, double zero_threshold, const OptimConfig &cfg) {
    if(r_max < 2) throw UsageError("rank_scan: r_max must be >= 2");
    CertificateScan scan;
    scan.zero_threshold = zero_threshold;
    scan.r_max          = r_max;
    std::optional<RankParams> previous;
    for(int r = 2; r <= r_max; ++r) {
        const auto report = er_subspace_report(sub, r, cfg, previous ? &*previous : nullptr);
        Termination reason = Termination::Failed;
        for(const auto &d : report.per_trial)
            if(d.trial == report.best_trial) reason = d.reason;
        scan.entries.push_back({r, std::clamp(report.best_value, 0.0, 1.0), reason});
        previous = report.best_params;
    }
    if(scan.entries.front().value < zero_threshold) {
        scan.certified_rank = 1;
    } else {
        for(std::size_t i = 0; i + 1 < scan.entries.size(); ++i) {
            if(scan.entries[i].value >= zero_threshold && scan.entries[i + 1].value < zero_threshold) {
                scan.certified_rank = scan.entries[i].r;
                break;
            }
        }
    }
    return scan;
}

CertificateScan border_rank_scan(const PureState &state, int r_max, double zero_threshold, const OptimConfig &cfg) {
    const PureState psi[] = {state};
    return rank_scan(Subspace::from_spanning_set(psi), r_max, zero_threshold, cfg);
}

Subspace regroup(const Subspace &sub, const Bipartition &cut) {
    const DimList &dims = sub.dims();
    int            dk   = 1;
    for(int k : cut.left()) dk *= dims[k];
    const DimList two({dk, static_cast<int>(dims.total() / dk)});
    CMatrix       basis(dims.total(), sub.dim());
    for(Index j = 0; j < sub.dim(); ++j) basis.col(j) = permute_to_cut(sub.basis().col(j), dims, cut);
    return Subspace::from_orthonormal(two, std::move(basis));
}

GenuineScan genuine_entanglement_scan(const Subspace &sub, const OptimConfig &cfg, double zero_threshold) {
    if(sub.dims().parties() < 3) throw UsageError("genuine_entanglement_scan: needs at least three parties");
    const auto  cuts = Bipartition::enumerate(sub.dims().parties());
    GenuineScan out;
    out.genuinely_entangled = true;
    for(const auto &cut : cuts) {
        const double v = er_subspace(regroup(sub, cut), 2, cfg);
        out.values.push_back({cut, v});
        if(v < zero_threshold) out.genuinely_entangled = false;
    }
    return out;
}

double support_bound_er(const MixedState &rho, int r, const OptimConfig &cfg) { return er_subspace(support_space(rho), r, cfg); }

HermitianOp random_hermitian_with_trace_norm(Index dim, double target_norm, std::uint64_t seed) {
    if(!(target_norm >= 0.0)) throw UsageError("random_hermitian_with_trace_norm: target norm must be >= 0");
    if(dim < 1) throw UsageError("random_hermitian_with_trace_norm: dim must be >= 1");
    std::mt19937_64                  rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix                          a(dim, dim);
    for(Index j = 0; j < dim; ++j)
        for(Index i = 0; i < dim; ++i) a(i, j) = Complex(normal(rng), normal(rng));
    const HermitianOp h(0.5 * (a + a.adjoint()));
    const double      tn = trace_norm(h);
    return HermitianOp((target_norm / tn) * h.entries());
}

RobustnessResult robustness_experiment(const Subspace &sub, int r, std::vector<double> norm_grid, int samples, const OptimConfig &cfg) {
    if(samples < 1) throw UsageError("robustness_experiment: samples must be >= 1");
    std::sort(norm_grid.begin(), norm_grid.end());
    RobustnessResult out;
    out.trace_norm_grid = norm_grid;
    out.samples         = samples;
    out.min_er.assign(norm_grid.size(), 1.0);

    const Index D    = sub.dims().total();
    const auto  jobs = norm_grid.size() * static_cast<std::size_t>(samples);
    std::vector<double> values(jobs);
    OptimConfig         inner = cfg;
    inner.threads             = 1;
    parallel_for(jobs, cfg.threads, [&](std::size_t job) {
        const std::size_t g = job / static_cast<std::size_t>(samples);
        const auto        s = static_cast<std::uint64_t>(job % static_cast<std::size_t>(samples));
        const HermitianOp h = random_hermitian_with_trace_norm(D, norm_grid[g], derive_seed(cfg.seed, s, 0x5eed));
        values[job]         = er_subspace(apply_unitary_to_subspace(sub, unitary_from_hamiltonian(h)), r, inner);
    });
    for(std::size_t job = 0; job < jobs; ++job) {
        auto &m = out.min_er[job / static_cast<std::size_t>(samples)];
        m       = std::min(m, values[job]);
    }
    return out;
}

} // namespace rankgauge

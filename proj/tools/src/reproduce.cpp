// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "reproduce.hpp"

#include "rankgauge/errors.hpp"
#include "rankgauge/examples.hpp"
#include "rankgauge/measures.hpp"
#include "rankgauge/parallel.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

namespace rankgauge::cli {

namespace ex = rankgauge::examples;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<DataFile> fig1(const ReproduceOptions &opt) {
    struct Job {
        int    d;
        double theta;
    };
    std::vector<Job> jobs;
    for(int d = 3; d <= 6; ++d)
        for(int j = 1; j <= 25; ++j) jobs.push_back({d, std::numbers::pi * j / 26.0});

    std::vector<double> computed(jobs.size());
    OptimConfig         inner = opt.cfg;
    inner.threads             = 1;
    parallel_for(static_cast<int>(jobs.size()), opt.cfg.threads, [&](int i) {
        computed[i] = er_subspace(ex::strip_subspace({jobs[i].d, jobs[i].theta, 0.0}), 2, inner);
    });

    CsvTable t({"d", "theta", "analytic", "computed", "abs_error"});
    for(std::size_t i = 0; i < jobs.size(); ++i) {
        const double a = ex::strip_e2_closed_form({jobs[i].d, jobs[i].theta, 0.0});
        t.add({std::to_string(jobs[i].d), num(jobs[i].theta), num(a), num(computed[i]), num(std::abs(computed[i] - a))});
    }
    return {{"fig1.csv", std::move(t)}};
}

std::vector<DataFile> fig2(const ReproduceOptions &opt) {
    if(opt.samples < 1) throw UsageError("--samples must be positive");
    if(!(opt.grid_step > 0.0) || opt.grid_max < 0.0) throw UsageError("invalid trace-norm grid");
    std::vector<double> grid;
    for(int j = 0; j * opt.grid_step <= opt.grid_max + 1e-12; ++j) grid.push_back(j * opt.grid_step);

    CsvTable t({"theta", "trace_norm", "min_e2", "samples"});
    const std::vector<std::pair<std::string, double>> thetas = {
        {"pi/2", std::numbers::pi / 2}, {"pi/4", std::numbers::pi / 4}, {"pi/6", std::numbers::pi / 6}};
    for(const auto &[label, theta] : thetas) {
        const auto res = robustness_experiment(ex::strip_subspace({3, theta, 0.0}), 2, grid, opt.samples, opt.cfg);
        for(std::size_t j = 0; j < grid.size(); ++j)
            t.add({num(theta), num(res.trace_norm_grid[j]), num(res.min_er[j]), std::to_string(res.samples)});
    }
    return {{"fig2.csv", std::move(t)}};
}

std::vector<DataFile> fig3(const ReproduceOptions &opt) {
    if(opt.points < 1) throw UsageError("--points must be positive");
    std::mt19937_64                  rng(opt.cfg.seed);
    std::normal_distribution<double> normal;
    std::vector<ex::WTypeCoeffs>     pts(opt.points);
    for(auto &p : pts) {
        double n = 0.0;
        do {
            p = {normal(rng), normal(rng), normal(rng)};
            n = std::sqrt(p.a * p.a + p.b * p.b + p.c * p.c);
        } while(n < 1e-8);
        p = {p.a / n, p.b / n, p.c / n};
    }

    std::vector<double> computed(pts.size());
    OptimConfig         inner = opt.cfg;
    inner.threads             = 1;
    parallel_for(static_cast<int>(pts.size()), opt.cfg.threads,
                 [&](int i) { computed[i] = er_pure(ex::w_type_state(pts[i]), 2, inner); });

    CsvTable t({"a", "b", "c", "analytic", "computed", "abs_error"});
    for(std::size_t i = 0; i < pts.size(); ++i) {
        const double a = 1.0 - ex::w_type_lambda_sq_closed_form(pts[i]);
        t.add({num(pts[i].a), num(pts[i].b), num(pts[i].c), num(a), num(computed[i]), num(std::abs(computed[i] - a))});
    }
    return {{"fig3.csv", std::move(t)}};
}

std::vector<DataFile> table2(const ReproduceOptions &opt) {
    CsvTable t({"dims", "dim_subspace", "e2", "reference_e2", "wall_time"});
    for(const auto &row : table2_rows(opt.full)) {
        const long total = static_cast<long>(row.d1) * row.d2 * row.d3;
        if(opt.max_total_dim > 0 && total > opt.max_total_dim) continue;
        const auto   t0  = std::chrono::steady_clock::now();
        const auto   sub = ex::max_ces_subspace(row.d1, row.d2, row.d3);
        const double e2  = er_subspace(sub, 2, opt.cfg);
        const double wt  = seconds_since(t0);
        t.add({fmt::format("{}x{}x{}", row.d1, row.d2, row.d3), std::to_string(sub.dim()), num(e2), num(row.reference), num(wt)});
    }
    return {{"table2.csv", std::move(t)}};
}

std::vector<DataFile> examples_target(const ReproduceOptions &opt) {
    CsvTable t({"example", "quantity", "computed", "reference"});
    t.add({"tiles", "E_2(support)", num(support_bound_er(ex::tiles_bound_entangled_state(), 2, opt.cfg)), num(0.0284)});
    t.add({"upb3", "E_2(complement)", num(er_subspace(complement_basis(ex::upb_3qubit_subspace()), 2, opt.cfg)), num(ex::upb_3qubit_complement_e2())});
    t.add({"example3", "E_3(support)", num(support_bound_er(ex::example3_state(), 3, opt.cfg)), num(0.06558)});
    t.add({"strip:d=3,theta=pi/2", "E_2", num(er_subspace(ex::strip_subspace({}), 2, opt.cfg)), num(0.25)});

    OptimConfig hard = opt.cfg;
    hard.trials      = std::max(hard.trials, 10);
    hard.max_iters   = std::max(hard.max_iters, 30000);
    const std::vector<std::pair<int, int>> dicke = {{3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 3}};
    for(const auto &[n, k] : dicke) {
        const auto scan = border_rank_scan(ex::dicke_state(n, k), k + 2, kZeroThreshold, hard);
        t.add({fmt::format("dicke:n={};k={}", n, k), "border_rank",
               scan.certified_rank ? std::to_string(*scan.certified_rank) : fmt::format(">={}", scan.r_max),
               std::to_string(k + 1)});
    }
    const auto mm = border_rank_scan(ex::matrix_mult_tensor(2), 8, kZeroThreshold, hard);
    for(const auto &e : mm.entries) {
        if(e.r == 7) t.add({"mmul:n=2", "E_7", num(e.value), num(0.125)});
        if(e.r == 8) t.add({"mmul:n=2", "E_8", num(e.value), num(0.0)});
    }
    return {{"examples.csv", std::move(t)}};
}

} // namespace

std::vector<TableRow> table2_rows(bool full) {
    std::vector<TableRow> rows = {
        {2, 2, 2, 0.250}, {2, 2, 4, 4.50e-2}, {2, 2, 6, 1.23e-2}, {2, 3, 4, 1.41e-2}, {2, 3, 6, 2.86e-3}, {3, 3, 6, 7.20e-4},
    };
    if(full) {
        const std::vector<TableRow> extra = {
            {2, 3, 8, 7.62e-4}, {3, 3, 8, 1.57e-4}, {3, 4, 7, 7.98e-5}, {4, 4, 7, 2.02e-5}, {4, 5, 10, 3.54e-7},
        };
        rows.insert(rows.end(), extra.begin(), extra.end());
    }
    return rows;
}

std::vector<std::string> reproduce_targets() { return {"fig1", "fig2", "fig3", "table2", "examples"}; }

bool is_reproduce_target(const std::string &target) {
    for(const auto &t : reproduce_targets())
        if(t == target) return true;
    return false;
}

std::vector<DataFile> reproduce(const std::string &target, const ReproduceOptions &opt) {
    opt.cfg.validate();
    if(target == "fig1") return fig1(opt);
    if(target == "fig2") return fig2(opt);
    if(target == "fig3") return fig3(opt);
    if(target == "table2") return table2(opt);
    if(target == "examples") return examples_target(opt);
    throw UsageError(fmt::format("unknown reproduce target '{}'", target));
}

} // namespace rankgauge::cli

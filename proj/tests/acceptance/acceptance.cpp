// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria.

#include "rankgauge/examples.hpp"
#include "rankgauge/linalg.hpp"
#include "rankgauge/measures.hpp"
#include "rankgauge/objective.hpp"

#include "test_support.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace rankgauge;
namespace ex = rankgauge::examples;

namespace {

struct Verdict {
    bool        pass;
    std::string detail;
};

struct Criterion {
    int                      id;
    std::string              name;
    double                   budget_s;
    std::function<Verdict()> run;
};

// ---- 1 -------------------------------------------------------------------

constexpr double kGradTol = 1e-5;
constexpr double kFdStep  = 1e-5;

Verdict gradient_correctness() {
    const DimList   dims[] = {DimList{2, 2}, DimList{2, 3, 2}, DimList{3, 3, 3}};
    std::mt19937_64 rng(1);
    double          worst = 0.0;
    for(int i = 0; i < 50; ++i) {
        const DimList &d   = dims[i % 3];
        const int      r   = 1 + (i / 3) % 3;
        const Index    k   = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(d.total() - 1));
        const auto     sub = rgtest::random_subspace(d, k, rng());
        const auto     p   = random_init(d, r, {rng(), 1.0});
        const RVector  g   = loss_and_gradient(p, sub).gradient;
        const RVector  fd  = finite_diff_gradient(p, sub, kFdStep);
        worst              = std::max(worst, (g - fd).cwiseAbs().maxCoeff() / std::max(fd.cwiseAbs().maxCoeff(), 1e-8));
    }
    return {worst < kGradTol, fmt::format("50 configs, max relative inf-error {:.3e} (tol {:.0e})", worst, kGradTol)};
}

// ---- 2 -------------------------------------------------------------------

constexpr double kFig1Tol = 1e-9;

Verdict strip_grid() {
    double      worst = 0.0;
    OptimConfig cfg;
    for(int d = 3; d <= 6; ++d)
        for(int j = 1; j <= 25; ++j) {
            const ex::StripParams sp{d, std::numbers::pi * j / 26.0, 0.0};
            worst = std::max(worst, std::abs(er_subspace(ex::strip_subspace(sp), 2, cfg) - ex::strip_e2_closed_form(sp)));
        }
    return {worst < kFig1Tol, fmt::format("100 grid points, max |E_2 - closed form| {:.3e} (tol {:.0e})", worst, kFig1Tol)};
}

// ---- 3 -------------------------------------------------------------------

constexpr double kTableRelTol = 1e-3;

double round_sig3(double x) { return std::stod(fmt::format("{:.2e}", x)); }

Verdict ces_table() {
    struct Row {
        int    a, b, c;
        double ref;
    };
    const Row rows[] = {{2, 2, 2, 0.250}, {2, 2, 4, 4.50e-2}, {2, 2, 6, 1.23e-2},
                        {2, 3, 4, 1.41e-2}, {2, 3, 6, 2.86e-3}, {3, 3, 6, 7.20e-4}};
    bool        ok = true;
    std::string detail;
    for(const auto &row : rows) {
        const double e2  = er_subspace(ex::max_ces_subspace(row.a, row.b, row.c), 2, {});
        const double rel = std::abs(round_sig3(e2) - row.ref) / row.ref;
        ok               = ok && rel < kTableRelTol;
        detail += fmt::format(" ({},{},{}) {:.5e} raw-rel {:.1e};", row.a, row.b, row.c, e2, std::abs(e2 - row.ref) / row.ref);
    }
    return {ok, "3-sig-fig match within 1e-3 relative:" + detail};
}

// ---- 4-6 -----------------------------------------------------------------

Verdict tiles_support() {
    const double e2 = support_bound_er(ex::tiles_bound_entangled_state(), 2, {});
    return {std::abs(e2 - 0.0284) <= 1e-3 && e2 > 1e-2, fmt::format("E_2 = {:.7f} (target 0.0284 +- 1e-3, > 1e-2)", e2)};
}

Verdict upb3_complement() {
    const double e2  = er_subspace(complement_basis(ex::upb_3qubit_subspace()), 2, {});
    const double err = std::abs(e2 - ex::upb_3qubit_complement_e2());
    return {err < 1e-6, fmt::format("E_2 = {:.15f}, |err| {:.3e} (tol 1e-6)", e2, err)};
}

Verdict example3_support() {
    const double e3 = support_bound_er(ex::example3_state(), 3, {});
    return {std::abs(e3 - 0.06558) <= 1e-3, fmt::format("E_3 = {:.7f} (target 0.06558 +- 1e-3)", e3)};
}

// ---- 7 -------------------------------------------------------------------

Verdict border_ranks() {
    OptimConfig cfg;
    cfg.trials    = 10;
    cfg.max_iters = 30000;
    bool        ok = true;
    std::string detail;
    for(auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 3}}) {
        const auto   scan = border_rank_scan(ex::dicke_state(n, k), k + 2, kZeroThreshold, cfg);
        const double hi   = scan.entries[static_cast<std::size_t>(k - 1)].value; // r = k+1
        const double lo   = scan.entries[static_cast<std::size_t>(k)].value;     // r = k+2
        const bool   good = hi > 1e-3 && lo < 1e-6 && scan.certified_rank == k + 1;
        ok                = ok && good;
        detail += fmt::format(" D({},{}): E_{}={:.4g} E_{}={:.1e};", n, k, k + 1, hi, k + 2, lo);
    }
    const auto   mm = border_rank_scan(ex::matrix_mult_tensor(2), 8, kZeroThreshold, cfg);
    const double e7 = mm.entries[5].value, e8 = mm.entries[6].value;
    ok              = ok && std::abs(e7 - 0.125) <= 1e-3 && e8 < 1e-6;
    detail += fmt::format(" mmul2: E_7={:.6f} E_8={:.1e}", e7, e8);
    return {ok, detail};
}

// ---- 8 -------------------------------------------------------------------

constexpr double kWTypeTol = 1e-8;

Verdict w_type_closed_form() {
    std::mt19937_64                  rng(8);
    std::normal_distribution<double> nd;
    double                           worst = 0.0;
    for(int i = 0; i < 1000; ++i) {
        double a = nd(rng), b = nd(rng), c = nd(rng);
        const double n = std::sqrt(a * a + b * b + c * c);
        a /= n, b /= n, c /= n;
        const double oracle = 1.0 - ex::w_type_lambda_sq_closed_form({a, b, c});
        worst = std::max(worst, std::abs(er_pure(ex::w_type_state({a, b, c}), 2, {}) - oracle));
    }
    return {worst < kWTypeTol, fmt::format("1000 triples, max |E_2 - oracle| {:.3e} (tol {:.0e})", worst, kWTypeTol)};
}

// ---- 9 -------------------------------------------------------------------

constexpr double kShapeSlack = 1e-3;

Verdict robustness() {
    const auto strip = ex::strip_subspace({3, std::numbers::pi / 2, 0.0});
    double     lowest = 1.0;
    for(std::uint64_t s = 0; s < 100; ++s) {
        const auto h = random_hermitian_with_trace_norm(strip.dims().total(), 0.45, derive_seed(9, s));
        lowest = std::min(lowest, er_subspace(apply_unitary_to_subspace(strip, unitary_from_hamiltonian(h)), 2, {}));
    }
    const bool bound_holds = lowest > 1e-6;

    std::vector<double> grid;
    for(int j = 0; j <= 10; ++j) grid.push_back(0.1 * j);
    OptimConfig cfg;
    cfg.seed        = 2;
    const auto top  = robustness_experiment(strip, 2, grid, 200, cfg);
    const auto low  = robustness_experiment(ex::strip_subspace({3, std::numbers::pi / 6, 0.0}), 2, grid, 200, cfg);
    bool       mono = true, dom = true;
    for(std::size_t j = 0; j < grid.size(); ++j) {
        if(j > 0) mono = mono && top.min_er[j] <= top.min_er[j - 1] + kShapeSlack && low.min_er[j] <= low.min_er[j - 1] + kShapeSlack;
        dom = dom && top.min_er[j] >= low.min_er[j] - kShapeSlack;
    }
    return {bound_holds && mono && dom,
            fmt::format("min E_2 over 100 perturbations at |H|_tr=0.45: {:.4e} (> 1e-6); curve nonincreasing: {}; pi/2 dominates pi/6: {}",
                        lowest, mono, dom)};
}

// ---- 10 ------------------------------------------------------------------

Verdict invariants() {
    const DimList dims[] = {DimList{2, 2}, DimList{2, 3, 2}, DimList{3, 3, 3}};
    double        mono_worst = -1.0, range_worst = 0.0, lu_worst = 0.0, svd_worst = 0.0, gs_worst = 0.0;
    for(std::uint64_t s = 0; s < 6; ++s) {
        const DimList &d    = dims[s % 3];
        const auto     sub  = rgtest::random_subspace(d, 1 + static_cast<Index>(s % 2), 1000 + s);
        const auto     scan = rank_scan(sub, 4, kZeroThreshold, {});
        for(std::size_t i = 0; i < scan.entries.size(); ++i) {
            const double v = scan.entries[i].value;
            range_worst    = std::max({range_worst, -v, v - 1.0});
            if(i > 0) mono_worst = std::max(mono_worst, v - scan.entries[i - 1].value);
        }
        OptimConfig cfg;
        cfg.trials       = 5;
        const auto moved = apply_unitary_to_subspace(sub, rgtest::random_local_unitary(d, 2000 + s));
        lu_worst         = std::max(lu_worst, std::abs(er_subspace(sub, 2, cfg) - er_subspace(moved, 2, cfg)));
    }
    const DimList bip[] = {DimList{2, 2}, DimList{2, 3}, DimList{3, 3}, DimList{3, 4}, DimList{4, 4}};
    for(std::uint64_t s = 0; s < 10; ++s) {
        const DimList &d   = bip[s % 5];
        const auto     psi = rgtest::random_state(d, 3000 + s);
        for(int r = 2; r <= std::min(d[0], d[1]); ++r)
            svd_worst = std::max(svd_worst, std::abs(er_pure(psi, r, {}) - er_bipartite_pure_oracle(psi, Bipartition({0}, 2), r)));
    }
    for(std::uint64_t s = 0; s < 20; ++s) {
        const auto sub = rgtest::random_subspace(DimList{3, 4}, 1 + static_cast<Index>(s % 11), 4000 + s);
        gs_worst       = std::max(gs_worst, orthonormality_error(sub.basis()));
    }
    const bool ok = mono_worst <= 1e-7 && range_worst <= 0.0 && lu_worst < 1e-6 && svd_worst < 1e-7 && gs_worst < 1e-10;
    return {ok, fmt::format("monotone excess {:.1e} (<= 1e-7), range excess {:.1e}, LU {:.1e} (< 1e-6), SVD oracle {:.1e} (< 1e-7), "
                            "Gram-Schmidt {:.1e} (< 1e-10)",
                            mono_worst, range_worst, lu_worst, svd_worst, gs_worst)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "gradient correctness", 30, gradient_correctness},
        {2, "strip grid vs closed form", 120, strip_grid},
        {3, "maximal CES E_2 table", 300, ces_table},
        {4, "Tiles support E_2", 10, tiles_support},
        {5, "3-qubit UPB complement E_2", 10, upb3_complement},
        {6, "rank-3 mixture support E_3", 30, example3_support},
        {7, "Dicke and matrix-multiplication border ranks", 600, border_ranks},
        {8, "W-type closed form", 300, w_type_closed_form},
        {9, "robustness under perturbation", 600, robustness},
        {10, "invariant suites", 600, invariants},
    };
    int failures = 0;
    for(const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict    v;
        try {
            v = c.run();
        } catch(const std::exception &e) { v = {false, fmt::format("threw: {}", e.what())}; }
        const double secs    = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool   in_time = secs <= c.budget_s;
        const bool   pass    = v.pass && in_time;
        failures += pass ? 0 : 1;
        fmt::print("{} criterion {:>2}: {} | {} | {:.2f} s (budget {:.0f} s{})\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail, secs,
                   c.budget_s, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures;
}

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/measures.hpp"
#include "rankgauge/objective.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rankgauge;

namespace {

const DimList kDims[] = {DimList{2, 2}, DimList{2, 3, 2}, DimList{3, 3, 3}};

} // namespace

TEST(Property, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(314);
    for(int i = 0; i < 50; ++i) {
        const DimList &dims = kDims[i % 3];
        const int      r    = 1 + (i / 3) % 3;
        const Index    k    = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(dims.total() - 1));
        const auto     sub  = rgtest::random_subspace(dims, k, rng());
        const auto     p    = random_init(dims, r, {rng(), 1.0});
        const RVector  g    = loss_and_gradient(p, sub).gradient;
        const RVector  fd   = finite_diff_gradient(p, sub, 1e-5);
        const double   err  = (g - fd).cwiseAbs().maxCoeff() / std::max(fd.cwiseAbs().maxCoeff(), 1e-8);
        EXPECT_LT(err, 1e-5) << "config " << i << " dims " << dims.to_string() << " r " << r << " k " << k;
    }
}

TEST(Property, MeasureInUnitIntervalAndMonotoneInRank) {
    for(std::uint64_t seed = 0; seed < 6; ++seed) {
        const DimList &dims = kDims[seed % 3];
        const auto     sub  = rgtest::random_subspace(dims, 1 + static_cast<Index>(seed % 2), 100 + seed);
        const auto     scan = rank_scan(sub, 4, kZeroThreshold, {});
        for(std::size_t i = 0; i < scan.entries.size(); ++i) {
            EXPECT_GE(scan.entries[i].value, 0.0);
            EXPECT_LE(scan.entries[i].value, 1.0);
            if(i > 0) EXPECT_LE(scan.entries[i].value, scan.entries[i - 1].value + 1e-7) << "seed " << seed;
        }
    }
}

TEST(Property, LocalUnitaryInvariance) {
    for(std::uint64_t seed = 0; seed < 5; ++seed) {
        const DimList &dims  = kDims[seed % 3];
        const auto     sub   = rgtest::random_subspace(dims, 2, 200 + seed);
        const auto     moved = apply_unitary_to_subspace(sub, rgtest::random_local_unitary(dims, 300 + seed));
        OptimConfig    cfg;
        cfg.trials = 5;
        EXPECT_NEAR(er_subspace(sub, 2, cfg), er_subspace(moved, 2, cfg), 1e-6) << "seed " << seed;
    }
}

TEST(Property, BipartiteOptimizerMatchesSvdOracle) {
    const DimList dims[] = {DimList{2, 2}, DimList{2, 3}, DimList{3, 3}, DimList{3, 4}, DimList{4, 4}};
    for(std::uint64_t seed = 0; seed < 10; ++seed) {
        const DimList &d   = dims[seed % 5];
        const auto     psi = rgtest::random_state(d, 400 + seed);
        for(int r = 2; r <= std::min(d[0], d[1]); ++r)
            EXPECT_NEAR(er_pure(psi, r, {}), er_bipartite_pure_oracle(psi, Bipartition({0}, 2), r), 1e-7)
                << d.to_string() << " r " << r;
    }
}

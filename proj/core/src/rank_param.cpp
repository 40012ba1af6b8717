// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/rank_param.hpp"

#include "rankgauge/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <random>

namespace rankgauge {

RankParams::RankParams(DimList dims, int rank, RVector x) : dims_(std::move(dims)), rank_(rank), x_(std::move(x)) {
    if(rank_ < 1) throw UsageError("RankParams: rank must be >= 1");
    if(x_.size() != size_for(dims_, rank_))
        throw UsageError(fmt::format("RankParams: expected {} parameters, got {}", size_for(dims_, rank_), x_.size()));
    if(!x_.allFinite()) throw UsageError("RankParams: non-finite parameter");
    party_offset_.resize(static_cast<std::size_t>(dims_.parties()));
    Index off = 0;
    for(int k = 0; k < dims_.parties(); ++k) {
        party_offset_[k] = off;
        off += dims_[k];
    }
}

double softplus(double t) {
    if(t > 30.0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

double sigmoid(double t) {
    if(t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

ProductTerm build_product_term(const RankParams &p, int term) {
    if(term < 0 || term >= p.rank()) throw UsageError("build_product_term: term index out of range");
    ProductTerm out{softplus(p.x()[p.theta_index(term)]), {}};
    for(int k = 0; k < p.dims().parties(); ++k) {
        const Index d = p.dims()[k];
        CVector     u(d);
        for(Index a = 0; a < d; ++a) u[a] = Complex(p.x()[p.alpha_index(term, k) + a], p.x()[p.beta_index(term, k) + a]);
        const double s = u.norm();
        if(!(s > 0.0)) throw SingularParameterError(fmt::format("term {} party {}: zero factor block", term, k));
        out.factors.push_back(PureState::single(u / s));
    }
    return out;
}

PureState build_state(const RankParams &p) {
    CVector total = CVector::Zero(p.dims().total());
    for(int i = 0; i < p.rank(); ++i) {
        const auto term = build_product_term(p, i);
        total += term.lambda * kron_chain(term.factors).amp();
    }
    const double n = total.norm();
    if(!(n > 1e-300)) throw SingularParameterError("build_state: the product terms cancel");
    return PureState(p.dims(), total / n);
}

RankParams random_init(const DimList &dims, int rank, const TrialConfig &cfg) {
    if(!(cfg.init_scale > 0.0)) throw UsageError("random_init: init_scale must be positive");
    std::mt19937_64                  rng(cfg.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RVector                          x(RankParams::size_for(dims, rank));
    for(Index j = 0; j < x.size(); ++j) x[j] = cfg.init_scale * normal(rng);
    return RankParams(dims, rank, std::move(x));
}

namespace {
std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t attempt) {
    return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ (attempt * 0xd1342543de82ef95ULL));
}

RankParams pad_rank(const RankParams &p, int new_rank, double pad_theta) {
    if(new_rank < p.rank()) throw UsageError("pad_rank: new rank is smaller");
    RVector x = RVector::Zero(RankParams::size_for(p.dims(), new_rank));
    x.head(p.x().size()) = p.x();
    RankParams out(p.dims(), new_rank, std::move(x));
    RVector    y = out.x();
    for(int i = p.rank(); i < new_rank; ++i) {
        y[out.theta_index(i)] = pad_theta;
        for(int k = 0; k < p.dims().parties(); ++k) y[out.alpha_index(i, k)] = 1.0;
    }
    return RankParams(p.dims(), new_rank, std::move(y));
}

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/objective.hpp"

#include "rankgauge/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace rankgauge {

ComplementProjector::ComplementProjector(const Subspace &sub) : dims_(sub.dims()) {
    if(sub.is_full()) throw UsageError("the subspace is the full space; its complement is empty");
    if(2 * sub.dim() <= dims_.total()) {
        basis_ = sub.basis();
    } else {
        basis_      = complement_basis(sub).basis();
        complement_ = true;
    }
}

void ComplementProjector::apply(const CVector &t, CVector &out, CVector &coeff) const {
    coeff.noalias() = basis_.adjoint() * t;
    if(complement_) {
        out.noalias() = basis_ * coeff;
    } else {
        out = t;
        out.noalias() -= basis_ * coeff;
    }
}

LossFunction::LossFunction(std::shared_ptr<const ComplementProjector> projector, int rank)
    : projector_(std::move(projector)), rank_(rank) {
    if(rank_ < 1) throw UsageError("LossFunction: rank budget must be >= 1");
    const DimList &dims = projector_->dims();
    const int      n    = dims.parties();
    Index          off  = 0;
    for(int k = 0; k < n; ++k) {
        party_offset_.push_back(off);
        off += dims[k];
    }
    lambda_.resize(rank_);
    sig_.resize(rank_);
    phi_.assign(rank_, std::vector<CVector>(n));
    norm_.assign(rank_, std::vector<double>(n));
    for(int i = 0; i < rank_; ++i)
        for(int k = 0; k < n; ++k) phi_[i][k].resize(dims[k]);
    const Index D = dims.total();
    total_.resize(D);
    residual_.resize(D);
    g_.resize(D);
    term_.resize(D);
    buf_a_.resize(D);
    buf_b_.resize(D);
}

LossFunction::LossFunction(const Subspace &sub, int rank) : LossFunction(std::make_shared<const ComplementProjector>(sub), rank) {}

double LossFunction::forward(const RVector &x) {
    const DimList &dims   = projector_->dims();
    const int      n      = dims.parties();
    const Index    stride = 2 * dims.local_sum() + 1;
    if(x.size() != size()) throw UsageError(fmt::format("LossFunction: expected {} parameters, got {}", size(), x.size()));

    total_.setZero();
    for(int i = 0; i < rank_; ++i) {
        const Index base = i * stride;
        lambda_[i]       = softplus(x[base]);
        sig_[i]          = sigmoid(x[base]);
        for(int k = 0; k < n; ++k) {
            const Index a0 = base + 1 + 2 * party_offset_[k];
            const int   d  = dims[k];
            CVector    &f  = phi_[i][k];
            for(int a = 0; a < d; ++a) f[a] = Complex(x[a0 + a], x[a0 + d + a]);
            const double s = f.norm();
            if(!(s > 0.0) || !std::isfinite(s)) throw SingularParameterError(fmt::format("term {} party {}: degenerate factor block", i, k));
            norm_[i][k] = s;
            f /= s;
        }
        // Kronecker product, party 0 slowest.
        Index len = 1;
        term_[0]  = lambda_[i];
        for(int k = 0; k < n; ++k) {
            const int      d = dims[k];
            const CVector &f = phi_[i][k];
            for(Index p = len - 1; p >= 0; --p) {
                const Complex v = term_[p];
                for(int a = d - 1; a >= 0; --a) term_[p * d + a] = v * f[a];
            }
            len *= d;
        }
        total_ += term_;
    }
    const double nsq = total_.squaredNorm();
    if(!(std::sqrt(nsq) > 1e-300) || !std::isfinite(nsq)) throw SingularParameterError("product terms cancel or overflow");
    projector_->apply(total_, residual_, coeff_);
    return residual_.squaredNorm() / nsq;
}

double LossFunction::value(const RVector &x) { return forward(x); }

double LossFunction::value_and_gradient(const RVector &x, RVector &grad) {
    const double   L      = forward(x);
    const DimList &dims   = projector_->dims();
    const int      n      = dims.parties();
    const Index    D      = dims.total();
    const Index    stride = 2 * dims.local_sum() + 1;
    const double   nsq    = total_.squaredNorm();

    g_ = (residual_ - L * total_) / nsq;
    grad.resize(size());

    for(int i = 0; i < rank_; ++i) {
        const Index base = i * stride;
        for(int k = 0; k < n; ++k) {
            // w[a] = sum over all other indices of G * prod_{l != k} conj(phi_l).
            const Complex *src  = g_.data();
            Complex       *dst  = buf_a_.data();
            Index          size = D;
            for(int l = n - 1; l > k; --l) {
                const int      d = dims[l];
                const Complex *f = phi_[i][l].data();
                size /= d;
                for(Index p = 0; p < size; ++p) {
                    Complex acc = 0.0;
                    for(int b = 0; b < d; ++b) acc += src[p * d + b] * std::conj(f[b]);
                    dst[p] = acc;
                }
                src = dst;
                dst = (dst == buf_a_.data()) ? buf_b_.data() : buf_a_.data();
            }
            for(int l = 0; l < k; ++l) {
                const int      d    = dims[l];
                const Complex *f    = phi_[i][l].data();
                const Index    rest = size / d;
                for(Index q = 0; q < rest; ++q) {
                    Complex acc = 0.0;
                    for(int b = 0; b < d; ++b) acc += std::conj(f[b]) * src[b * rest + q];
                    dst[q] = acc;
                }
                size = rest;
                src  = dst;
                dst  = (dst == buf_a_.data()) ? buf_b_.data() : buf_a_.data();
            }
            // h = conj(w); c = sum_a h[a] phi_k[a] = <G|product term>/lambda
            const CVector &f = phi_[i][k];
            const int      d = dims[k];
            Complex        c = 0.0;
            for(int a = 0; a < d; ++a) c += std::conj(src[a]) * f[a];
            if(k == 0) grad[base] = 2.0 * sig_[i] * c.real();

            const double scale = 2.0 * lambda_[i] / norm_[i][k];
            const Index  a0    = base + 1 + 2 * party_offset_[k];
            for(int a = 0; a < d; ++a) {
                const Complex h = std::conj(src[a]);
                grad[a0 + a]     = scale * (h.real() - c.real() * f[a].real());
                grad[a0 + d + a] = scale * (-h.imag() - c.real() * f[a].imag());
            }
        }
    }
    return L;
}

double loss(const RankParams &p, const Subspace &sub) {
    if(!(p.dims() == sub.dims())) throw UsageError("loss: parameter dims do not match the subspace");
    LossFunction f(sub, p.rank());
    return f.value(p.x());
}

LossEvaluation loss_and_gradient(const RankParams &p, const Subspace &sub) {
    if(!(p.dims() == sub.dims())) throw UsageError("loss_and_gradient: parameter dims do not match the subspace");
    LossFunction   f(sub, p.rank());
    LossEvaluation out{0.0, RVector()};
    out.value = f.value_and_gradient(p.x(), out.gradient);
    return out;
}

RVector finite_diff_gradient(const std::function<double(const RVector &)> &f, const RVector &x, double step) {
    if(!(step > 0.0)) throw UsageError("finite_diff_gradient: step must be positive");
    RVector g(x.size());
    RVector y = x;
    for(Index j = 0; j < x.size(); ++j) {
        y[j]            = x[j] + step;
        const double fp = f(y);
        y[j]            = x[j] - step;
        const double fm = f(y);
        y[j]            = x[j];
        g[j]            = (fp - fm) / (2.0 * step);
    }
    return g;
}

RVector finite_diff_gradient(const RankParams &p, const Subspace &sub, double step) {
    LossFunction f(sub, p.rank());
    return finite_diff_gradient([&f](const RVector &y) { return f.value(y); }, p.x(), step);
}

} // namespace rankgauge

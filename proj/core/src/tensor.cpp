// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/tensor.hpp"

#include "rankgauge/errors.hpp"
#include "rankgauge/linalg.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>

namespace rankgauge {

DimList::DimList(std::vector<int> dims) : dims_(std::move(dims)) {
    if(dims_.empty()) throw UsageError("DimList: at least one party is required");
    total_ = 1;
    for(int d : dims_) {
        if(d < 2) throw UsageError(fmt::format("DimList: local dimension {} < 2", d));
        total_ *= d;
        local_sum_ += d;
    }
}

std::string DimList::to_string() const { return fmt::format("({})", fmt::join(dims_, ",")); }

DimList concat(const DimList &a, const DimList &b) {
    std::vector<int> out(a.dims().begin(), a.dims().end());
    out.insert(out.end(), b.dims().begin(), b.dims().end());
    return DimList(std::move(out));
}

PureState::PureState(DimList dims, CVector amp) : dims_(std::move(dims)), amp_(std::move(amp)) {
    if(amp_.size() != dims_.total())
        throw UsageError(fmt::format("PureState: {} amplitudes for dims {}", amp_.size(), dims_.to_string()));
    if(!amp_.allFinite()) throw UsageError("PureState: non-finite amplitude");
    normalized_ = std::abs(amp_.norm() - 1.0) <= 1e-12;
}

PureState PureState::normalized(DimList dims, CVector amp) {
    const double n = amp.norm();
    if(!(n > 0.0)) throw UsageError("PureState: cannot normalize the zero vector");
    amp /= n;
    return PureState(std::move(dims), std::move(amp));
}

PureState PureState::basis(DimList dims, std::span<const int> digits) {
    if(static_cast<int>(digits.size()) != dims.parties()) throw UsageError("PureState::basis: digit count != party count");
    Index flat = 0;
    for(int k = 0; k < dims.parties(); ++k) {
        if(digits[k] < 0 || digits[k] >= dims[k]) throw UsageError("PureState::basis: digit out of range");
        flat = flat * dims[k] + digits[k];
    }
    CVector amp = CVector::Zero(dims.total());
    amp[flat]   = 1.0;
    return PureState(std::move(dims), std::move(amp));
}

PureState PureState::single(CVector amp) {
    DimList dims({static_cast<int>(amp.size())});
    return PureState(std::move(dims), std::move(amp));
}

Bipartition::Bipartition(std::vector<int> left, int parties) : left_(std::move(left)), parties_(parties) {
    std::sort(left_.begin(), left_.end());
    if(left_.empty() || static_cast<int>(left_.size()) >= parties)
        throw UsageError("Bipartition: K must be a nonempty proper subset of the parties");
    if(std::adjacent_find(left_.begin(), left_.end()) != left_.end()) throw UsageError("Bipartition: repeated party");
    for(int k : left_)
        if(k < 0 || k >= parties) throw UsageError(fmt::format("Bipartition: party {} out of range", k));
    for(int k = 0; k < parties; ++k)
        if(!std::binary_search(left_.begin(), left_.end(), k)) right_.push_back(k);
}

std::string Bipartition::label() const {
    auto one_based = [](std::span<const int> v) {
        std::vector<int> out(v.begin(), v.end());
        for(auto &k : out) ++k;
        return fmt::format("{{{}}}", fmt::join(out, ","));
    };
    return one_based(left_) + "|" + one_based(right_);
}

std::vector<Bipartition> Bipartition::enumerate(int parties) {
    if(parties < 2) throw UsageError("Bipartition::enumerate: needs at least two parties");
    std::vector<Bipartition> cuts;
    // Party 0 always sits in K; the remaining parties are chosen by bitmask.
    const unsigned rest = 1u << (parties - 1);
    for(unsigned mask = 0; mask + 1 < rest; ++mask) {
        std::vector<int> left{0};
        for(int k = 1; k < parties; ++k)
            if(mask & (1u << (k - 1))) left.push_back(k);
        cuts.emplace_back(std::move(left), parties);
    }
    return cuts;
}

PureState kron_chain(std::span<const PureState> factors) {
    if(factors.empty()) throw UsageError("kron_chain: empty factor list");
    std::vector<int> dims;
    CVector          out = CVector::Ones(1);
    for(const auto &f : factors) {
        dims.insert(dims.end(), f.dims().dims().begin(), f.dims().dims().end());
        const Index d    = f.amp().size();
        CVector     next(out.size() * d);
        for(Index p = 0; p < out.size(); ++p) next.segment(p * d, d) = out[p] * f.amp();
        out = std::move(next);
    }
    return PureState(DimList(std::move(dims)), std::move(out));
}

Complex inner_product(const PureState &a, const PureState &b) {
    if(!(a.dims() == b.dims()))
        throw UsageError(fmt::format("inner_product: dims {} vs {}", a.dims().to_string(), b.dims().to_string()));
    return a.amp().dot(b.amp()); // Eigen's dot conjugates the first argument
}

CVector permute_to_cut(const CVector &amp, const DimList &dims, const Bipartition &cut) {
    if(cut.parties() != dims.parties()) throw UsageError("Bipartition does not match the party count");
    const int        n = dims.parties();
    std::vector<int> order(cut.left().begin(), cut.left().end());
    order.insert(order.end(), cut.right().begin(), cut.right().end());

    // Strides of the source layout.
    std::vector<Index> stride(n);
    Index              s = 1;
    for(int k = n - 1; k >= 0; --k) {
        stride[k] = s;
        s *= dims[k];
    }
    CVector          out(amp.size());
    std::vector<int> digit(n, 0); // digits in the permuted order
    for(Index flat = 0; flat < amp.size(); ++flat) {
        Index src = 0;
        for(int j = 0; j < n; ++j) src += digit[j] * stride[order[j]];
        out[flat] = amp[src];
        for(int j = n - 1; j >= 0; --j) {
            if(++digit[j] < dims[order[j]]) break;
            digit[j] = 0;
        }
    }
    return out;
}

CMatrix reshape_bipartite(const PureState &s, const Bipartition &cut) {
    const CVector permuted = permute_to_cut(s.amp(), s.dims(), cut);
    Index         rows     = 1;
    for(int k : cut.left()) rows *= s.dims()[k];
    const Index cols = s.dims().total() / rows;
    // permuted is row-major (rows x cols); Eigen's default storage is column-major.
    CMatrix m(rows, cols);
    for(Index i = 0; i < rows; ++i)
        for(Index j = 0; j < cols; ++j) m(i, j) = permuted[i * cols + j];
    return m;
}

std::vector<double> schmidt_coefficients(const PureState &s, const Bipartition &cut) {
    if(!s.is_normalized()) throw UsageError("schmidt_coefficients: state is not normalized");
    const auto svd = svd_complex(reshape_bipartite(s, cut));
    return {svd.singular.data(), svd.singular.data() + svd.singular.size()};
}

int schmidt_rank(std::span<const double> coefficients, double tol) {
    return static_cast<int>(std::count_if(coefficients.begin(), coefficients.end(), [tol](double l) { return l > tol; }));
}

} // namespace rankgauge

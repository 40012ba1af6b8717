// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/examples.hpp"

#include "rankgauge/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

namespace rankgauge::examples {

namespace {

void check_strip(int d, double theta, double xi) {
    if(d < 2) throw UsageError("strip: d must be >= 2");
    if(!(theta > 0.0 && theta < std::numbers::pi)) throw UsageError("strip: theta must lie in (0, pi)");
    if(!(xi >= 0.0 && xi < 2.0 * std::numbers::pi)) throw UsageError("strip: xi must lie in [0, 2pi)");
}

CVector ket(std::initializer_list<Complex> v) {
    CVector out(static_cast<Index>(v.size()));
    Index   i = 0;
    for(auto x : v) out[i++] = x;
    return out;
}

PureState product(std::initializer_list<CVector> factors) {
    std::vector<PureState> fs;
    for(const auto &f : factors) fs.push_back(PureState::single(f));
    return kron_chain(fs);
}

double binomial(int n, int k) {
    double out = 1.0;
    for(int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

} // namespace

Subspace strip_subspace(const StripParams &p) {
    check_strip(p.d, p.theta, p.xi);
    const Complex          a = std::cos(p.theta / 2);
    const Complex          b = std::polar(std::sin(p.theta / 2), p.xi);
    const DimList          dims{2, p.d};
    std::vector<PureState> vs;
    for(int i = 0; i + 1 < p.d; ++i) {
        CVector amp = CVector::Zero(dims.total());
        amp[i]      = a;
        amp[p.d + i + 1] += b;
        vs.emplace_back(dims, amp);
    }
    return Subspace::from_spanning_set(vs);
}

double strip_e2_closed_form(const StripParams &p) {
    check_strip(p.d, p.theta, p.xi);
    const double s = std::sin(p.theta) * std::sin(std::numbers::pi / p.d);
    return 0.5 * (1.0 - std::sqrt(1.0 - s * s));
}

Subspace ges_subspace(int d, double theta, double xi) {
    check_strip(d, theta, xi);
    const Complex          a = std::cos(theta / 2);
    const Complex          b = std::polar(std::sin(theta / 2), xi);
    const DimList          dims{2, d, d};
    std::vector<PureState> vs;
    for(int i = 0; i + 1 < d; ++i)
        for(int j = 0; j + 1 < d; ++j) {
            CVector amp = CVector::Zero(dims.total());
            amp[i * d + j] += a;
            amp[d * d + (i + 1) * d + (j + 1)] += b;
            vs.emplace_back(dims, amp);
        }
    return Subspace::from_spanning_set(vs);
}

double ges_e2_closed_form(int d, double theta) { return strip_e2_closed_form({d, theta, 0.0}); }

Subspace tiles_upb_subspace() {
    const CVector                  k0 = ket({1, 0, 0}), k1 = ket({0, 1, 0}), k2 = ket({0, 0, 1});
    const std::array<PureState, 5> vs = {
        product({k0, k0 - k1}),
        product({k2, k1 - k2}),
        product({k0 - k1, k2}),
        product({k1 - k2, k0}),
        product({k0 + k1 + k2, k0 + k1 + k2}),
    };
    return Subspace::from_spanning_set(vs);
}

MixedState tiles_bound_entangled_state() {
    const Subspace upb   = tiles_upb_subspace();
    const Index    D     = upb.dims().total();
    const CMatrix  p_ort = CMatrix::Identity(D, D) - upb.basis() * upb.basis().adjoint();
    return MixedState(upb.dims(), p_ort / static_cast<double>(D - upb.dim()));
}

MixedState example3_state() {
    const DimList dims{4, 4};
    // (sign, pairs (a, b)) for each of the three vectors
    auto make = [&](std::initializer_list<std::array<int, 3>> terms) {
        CVector amp = CVector::Zero(16);
        for(const auto &t : terms) amp[t[0] * 4 + t[1]] = t[2];
        return PureState(dims, amp / 2.0);
    };
    const std::array<PureState, 3> psi = {
        make({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}}),
        make({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}),
        make({{0, 2, 1}, {1, 3, 1}, {2, 0, 1}, {3, 1, -1}}),
    };
    const std::array<double, 3> w = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    return MixedState::from_ensemble(w, psi);
}

Subspace upb_3qubit_subspace() {
    const double  h = 1.0 / std::sqrt(2.0);
    const CVector z = ket({1, 0}), o = ket({0, 1}), p = ket({h, h}), m = ket({h, -h});
    const std::array<PureState, 4> vs = {product({z, z, z}), product({o, p, m}), product({m, o, p}), product({p, m, o})};
    return Subspace::from_spanning_set(vs);
}

double upb_3qubit_complement_e2() { return 1.0 - 3.0 * std::sqrt(6.0) / 8.0; }

Index max_ces_dimension(int d1, int d2, int d3) { return static_cast<Index>(d1) * d2 * d3 - d1 - d2 - d3 + 2; }

Subspace max_ces_subspace(int d1, int d2, int d3) {
    const DimList dims{d1, d2, d3};
    // Basis kets grouped by digit sum; within a group, lexicographic (flat index) order.
    std::map<int, std::vector<Index>> groups;
    for(int i = 0; i < d1; ++i)
        for(int j = 0; j < d2; ++j)
            for(int k = 0; k < d3; ++k) groups[i + j + k].push_back((static_cast<Index>(i) * d2 + j) * d3 + k);
    std::vector<PureState> vs;
    for(const auto &[sum, members] : groups)
        for(std::size_t p = 0; p < members.size(); ++p)
            for(std::size_t q = p + 1; q < members.size(); ++q) {
                CVector amp       = CVector::Zero(dims.total());
                amp[members[p]] = 1.0;
                amp[members[q]] = -1.0;
                vs.emplace_back(dims, amp);
            }
    return Subspace::from_spanning_set(vs);
}

PureState dicke_state(int n, int k) {
    if(n < 1 || k < 0 || k > n) throw UsageError("dicke_state: need 0 <= k <= n");
    const DimList dims(std::vector<int>(static_cast<std::size_t>(n), 2));
    CVector       amp = CVector::Zero(dims.total());
    for(Index idx = 0; idx < amp.size(); ++idx)
        if(__builtin_popcountll(static_cast<unsigned long long>(idx)) == k) amp[idx] = 1.0;
    return PureState::normalized(dims, amp);
}

double dicke_e2_closed_form(int n, int k) {
    if(n < 1 || k < 0 || k > n) throw UsageError("dicke_e2_closed_form: need 0 <= k <= n");
    const double p = static_cast<double>(k) / n;
    return 1.0 - binomial(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

PureState dicke_closest_product(int n, int k) {
    if(n < 1 || k < 0 || k > n) throw UsageError("dicke_closest_product: need 0 <= k <= n");
    const CVector          q = ket({std::sqrt(static_cast<double>(n - k) / n), std::sqrt(static_cast<double>(k) / n)});
    std::vector<PureState> fs(static_cast<std::size_t>(n), PureState::single(q));
    return kron_chain(fs);
}

PureState matrix_mult_tensor(int n) {
    if(n < 2) throw UsageError("matrix_mult_tensor: n must be >= 2");
    const int     m = n * n;
    const DimList dims{m, m, m};
    CVector       amp = CVector::Zero(dims.total());
    for(int i = 0; i < n; ++i)
        for(int j = 0; j < n; ++j)
            for(int k = 0; k < n; ++k) {
                const Index a = i * n + j, b = i * n + k, c = j * n + k;
                amp[(a * m + b) * m + c] = 1.0;
            }
    return PureState(dims, amp / std::pow(static_cast<double>(n), 1.5));
}

PureState ghz_state(int n) {
    if(n < 2) throw UsageError("ghz_state: n must be >= 2");
    const DimList dims(std::vector<int>(static_cast<std::size_t>(n), 2));
    CVector       amp = CVector::Zero(dims.total());
    amp[0] = amp[dims.total() - 1] = 1.0 / std::sqrt(2.0);
    return PureState(dims, amp);
}

PureState w_type_state(const WTypeCoeffs &c) {
    if(std::abs(c.a * c.a + c.b * c.b + c.c * c.c - 1.0) > 1e-12) throw UsageError("w_type_state: coefficients must be on the unit sphere");
    CVector amp = CVector::Zero(8);
    amp[4]      = c.a;
    amp[2]      = c.b;
    amp[1]      = c.c;
    return PureState(DimList{2, 2, 2}, amp);
}

double w_type_lambda_sq_closed_form(const WTypeCoeffs &c) {
    const double a2 = c.a * c.a, b2 = c.b * c.b, c2 = c.c * c.c;
    if(a2 < 0.5 && b2 < 0.5 && c2 < 0.5) {
        const double t = a2 + b2 - c2;
        return 4.0 * a2 * b2 * c2 / (4.0 * a2 * b2 - t * t);
    }
    return std::max({a2, b2, c2});
}

} // namespace rankgauge::examples

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/errors.hpp"
#include "rankgauge/linalg.hpp"
#include "rankgauge/tensor.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace rankgauge;

TEST(DimList, TotalsAndLabel) {
    const DimList d{2, 3, 4};
    EXPECT_EQ(d.parties(), 3);
    EXPECT_EQ(d.total(), 24);
    EXPECT_EQ(d.local_sum(), 9);
    EXPECT_EQ(d.to_string(), "(2,3,4)");
    EXPECT_EQ(concat(DimList{2}, DimList{3, 5}), (DimList{2, 3, 5}));
}

TEST(DimList, RejectsDegenerateParties) {
    EXPECT_THROW(DimList({2, 1}), UsageError);
    EXPECT_THROW(DimList(std::vector<int>{}), UsageError);
}

TEST(PureState, BasisOrderingHasFirstPartySlowest) {
    const auto s = PureState::basis(DimList{2, 3}, {1, 2});
    EXPECT_EQ(s.amp().size(), 6);
    EXPECT_EQ(s.amp()[5], Complex(1.0));
    EXPECT_TRUE(s.is_normalized());
    EXPECT_THROW(PureState::basis(DimList{2, 3}, {0, 3}), UsageError);
    EXPECT_THROW(PureState::basis(DimList{2, 3}, {0}), UsageError);
}

TEST(PureState, NormalizationFlag) {
    CVector amp(2);
    amp << 3.0, 4.0;
    const PureState raw(DimList{2}, amp);
    EXPECT_FALSE(raw.is_normalized());
    EXPECT_DOUBLE_EQ(raw.norm(), 5.0);
    const auto n = raw.normalize();
    EXPECT_TRUE(n.is_normalized());
    EXPECT_NEAR(n.amp()[1].real(), 0.8, 1e-15);
    EXPECT_THROW(PureState::normalized(DimList{2}, CVector::Zero(2)), UsageError);
    EXPECT_THROW(PureState(DimList{2, 2}, CVector::Zero(3)), UsageError);
}

TEST(PureState, KronChainOfBasisStates) {
    const PureState parts[] = {PureState::basis(DimList{2}, {1}), PureState::basis(DimList{3}, {0}),
                               PureState::basis(DimList{2}, {1})};
    const auto s = kron_chain(parts);
    EXPECT_EQ(s.dims(), (DimList{2, 3, 2}));
    EXPECT_EQ(s.amp(), PureState::basis(DimList{2, 3, 2}, {1, 0, 1}).amp());
}

TEST(PureState, InnerProductConjugatesTheBra) {
    CVector a(2), b(2);
    a << Complex(0, 1), 0;
    b << 1, 0;
    const Complex ip = inner_product(PureState(DimList{2}, a), PureState(DimList{2}, b));
    EXPECT_NEAR(ip.real(), 0.0, 1e-15);
    EXPECT_NEAR(ip.imag(), -1.0, 1e-15);
    EXPECT_THROW(inner_product(PureState(DimList{2}, a), PureState::basis(DimList{3}, {0})), UsageError);
}

TEST(Bipartition, LabelsAndEnumeration) {
    const Bipartition cut({2, 0}, 3);
    EXPECT_EQ(cut.label(), "{1,3}|{2}");
    ASSERT_EQ(cut.right().size(), 1u);
    EXPECT_EQ(cut.right()[0], 1);

    const auto three = Bipartition::enumerate(3);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0].label(), "{1}|{2,3}");
    EXPECT_EQ(three[1].label(), "{1,2}|{3}");
    EXPECT_EQ(three[2].label(), "{1,3}|{2}");
    EXPECT_EQ(Bipartition::enumerate(4).size(), 7u);
    EXPECT_EQ(Bipartition::enumerate(2).size(), 1u);
}

TEST(Bipartition, RejectsInvalidCuts) {
    EXPECT_THROW(Bipartition({}, 3), UsageError);
    EXPECT_THROW(Bipartition({0, 1, 2}, 3), UsageError);
    EXPECT_THROW(Bipartition({3}, 3), UsageError);
    EXPECT_THROW(Bipartition({1, 1}, 3), UsageError);
    EXPECT_THROW(Bipartition::enumerate(1), UsageError);
}

TEST(Schmidt, BellStateReshapesToScaledIdentity) {
    CVector amp = CVector::Zero(4);
    amp[0] = amp[3] = 1.0 / std::sqrt(2.0);
    const PureState bell(DimList{2, 2}, amp);
    const CMatrix   m = reshape_bipartite(bell, Bipartition({0}, 2));
    EXPECT_TRUE(m.isApprox(CMatrix::Identity(2, 2) / std::sqrt(2.0), 1e-14));
    const auto c = schmidt_coefficients(bell, Bipartition({0}, 2));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_NEAR(c[0], 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(c[1], 1.0 / std::sqrt(2.0), 1e-14);
    EXPECT_EQ(schmidt_rank(c), 2);
}

TEST(Schmidt, CosSinStateAcrossEveryCut) {
    // cos t |000> + sin t |111>
    const double t   = 0.3;
    CVector      amp = CVector::Zero(8);
    amp[0]           = std::cos(t);
    amp[7]           = std::sin(t);
    const PureState s(DimList{2, 2, 2}, amp);
    for(const auto &cut : Bipartition::enumerate(3)) {
        const auto c = schmidt_coefficients(s, cut);
        EXPECT_NEAR(c[0], std::cos(t), 1e-14) << cut.label();
        EXPECT_NEAR(c[1], std::sin(t), 1e-14) << cut.label();
    }
}

TEST(Schmidt, ProductAcrossMiddleCut) {
    // |0>_1 (x) |Bell>_{23}: product across {1}|{2,3}, entangled across {1,3}|{2}
    CVector amp = CVector::Zero(8);
    amp[0] = amp[3] = 1.0 / std::sqrt(2.0);
    const PureState s(DimList{2, 2, 2}, amp);
    EXPECT_EQ(schmidt_rank(schmidt_coefficients(s, Bipartition({0}, 3))), 1);
    EXPECT_EQ(schmidt_rank(schmidt_coefficients(s, Bipartition({0, 2}, 3))), 2);
    EXPECT_EQ(schmidt_rank(schmidt_coefficients(s, Bipartition({0, 1}, 3))), 2);
}

TEST(Schmidt, PermuteToCutMatchesReshape) {
    const auto  s   = rgtest::random_state(DimList{2, 3, 2}, 7);
    const Bipartition cut({0, 2}, 3);
    const CMatrix m = reshape_bipartite(s, cut);
    const CVector p = permute_to_cut(s.amp(), s.dims(), cut);
    ASSERT_EQ(m.rows(), 4);
    ASSERT_EQ(m.cols(), 3);
    for(Index i = 0; i < 4; ++i)
        for(Index j = 0; j < 3; ++j) EXPECT_EQ(m(i, j), p[i * 3 + j]);
    // entry (a c, b) is amplitude |a b c>
    EXPECT_EQ(m(1 * 2 + 1, 2), s.amp()[(1 * 3 + 2) * 2 + 1]);
}

TEST(Schmidt, RequiresNormalizedInput) {
    CVector amp = CVector::Ones(4);
    EXPECT_THROW(schmidt_coefficients(PureState(DimList{2, 2}, amp), Bipartition({0}, 2)), UsageError);
    EXPECT_THROW(reshape_bipartite(PureState::basis(DimList{2, 2}, {0, 0}), Bipartition({0}, 3)), UsageError);
}

TEST(Linalg, HermitianOpRejectsAsymmetry) {
    CMatrix m(2, 2);
    m << 1, Complex(0, 1), Complex(0, 1), 2;
    EXPECT_THROW(HermitianOp{m}, UsageError);
    EXPECT_THROW(HermitianOp{CMatrix::Zero(2, 3)}, UsageError);
    m(1, 0) = Complex(0, -1);
    const HermitianOp h(m);
    EXPECT_EQ(h.dim(), 2);
    EXPECT_EQ(HermitianOp::zero(3).entries(), CMatrix::Zero(3, 3));
}

TEST(Linalg, SvdReconstructs) {
    std::mt19937_64 rng(3);
    CMatrix         m(4, 3);
    for(Index j = 0; j < 3; ++j) m.col(j) = rgtest::gaussian_vector(4, rng);
    const auto r = svd_complex(m);
    EXPECT_TRUE((r.U * r.singular.asDiagonal() * r.Vh).isApprox(m, 1e-13));
    for(Index i = 1; i < r.singular.size(); ++i) EXPECT_GE(r.singular[i - 1], r.singular[i]);
}

TEST(Linalg, EigenvaluesDescendingAndTraceNorm) {
    CMatrix m = CMatrix::Zero(3, 3);
    m.diagonal() << 1.0, -2.0, 0.5;
    const HermitianOp h(m);
    const auto        e = hermitian_eig(h);
    EXPECT_DOUBLE_EQ(e.values[0], 1.0);
    EXPECT_DOUBLE_EQ(e.values[2], -2.0);
    EXPECT_NEAR(trace_norm(h), 3.5, 1e-14);
}

TEST(Linalg, UnitaryFromHamiltonian) {
    CMatrix m = CMatrix::Zero(2, 2);
    m.diagonal() << std::numbers::pi / 2, 0.0;
    const CMatrix u = unitary_from_hamiltonian(HermitianOp(m));
    EXPECT_NEAR(std::abs(u(0, 0) - Complex(0, -1)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u(1, 1) - Complex(1, 0)), 0.0, 1e-14);
    EXPECT_TRUE(is_unitary(u, 1e-12));

    std::mt19937_64 rng(11);
    CMatrix         a(5, 5);
    for(Index j = 0; j < 5; ++j) a.col(j) = rgtest::gaussian_vector(5, rng);
    EXPECT_TRUE(is_unitary(unitary_from_hamiltonian(HermitianOp((a + a.adjoint()) / 2.0)), 1e-12));
    EXPECT_FALSE(is_unitary(2.0 * CMatrix::Identity(2, 2), 1e-8));
}

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace rankgauge {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using Index   = Eigen::Index;

/// Ordered local dimensions d_1..d_n of a multipartite Hilbert space.
class DimList {
  public:
    DimList() = default;
    explicit DimList(std::vector<int> dims);
    DimList(std::initializer_list<int> dims) : DimList(std::vector<int>(dims)) {}

    [[nodiscard]] int parties() const { return static_cast<int>(dims_.size()); }
    [[nodiscard]] int operator[](int k) const { return dims_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] std::span<const int> dims() const { return dims_; }
    /// Product of local dimensions.
    [[nodiscard]] Index total() const { return total_; }
    /// Sum of local dimensions (the per-term parameter count is 2*local_sum()+1).
    [[nodiscard]] int local_sum() const { return local_sum_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const DimList &a, const DimList &b) { return a.dims_ == b.dims_; }

  private:
    std::vector<int> dims_;
    Index            total_     = 0;
    int              local_sum_ = 0;
};

/// Concatenation of two dim lists.
DimList concat(const DimList &a, const DimList &b);

/// Dense amplitude vector. Ordering is row-major over party indices with party 1 slowest.
class PureState {
  public:
    PureState() = default;
    PureState(DimList dims, CVector amp);

    /// Rescales `amp` to unit norm.
    static PureState normalized(DimList dims, CVector amp);
    /// Computational basis state |digits[0] digits[1] ...>.
    static PureState basis(DimList dims, std::span<const int> digits);
    static PureState basis(DimList dims, std::initializer_list<int> digits) {
        return basis(std::move(dims), std::span<const int>(digits.begin(), digits.size()));
    }
    /// Single-party state from amplitudes.
    static PureState single(CVector amp);

    [[nodiscard]] const DimList &dims() const { return dims_; }
    [[nodiscard]] const CVector &amp() const { return amp_; }
    [[nodiscard]] bool           is_normalized() const { return normalized_; }
    [[nodiscard]] double         norm() const { return amp_.norm(); }
    [[nodiscard]] PureState      normalize() const { return normalized(dims_, amp_); }

  private:
    DimList dims_;
    CVector amp_;
    bool    normalized_ = false;
};

/// A bipartition K | K^c of parties {0..n-1}. Party indices are zero-based.
class Bipartition {
  public:
    Bipartition(std::vector<int> left, int parties);

    [[nodiscard]] std::span<const int> left() const { return left_; }
    [[nodiscard]] std::span<const int> right() const { return right_; }
    [[nodiscard]] int                  parties() const { return parties_; }
    /// One-based label such as "{1}|{2,3}".
    [[nodiscard]] std::string label() const;

    /// All 2^(n-1)-1 cuts with party 0 on the left, ordered by bitmask.
    static std::vector<Bipartition> enumerate(int parties);

    friend bool operator==(const Bipartition &a, const Bipartition &b) {
        return a.parties_ == b.parties_ && a.left_ == b.left_;
    }

  private:
    std::vector<int> left_;
    std::vector<int> right_;
    int              parties_ = 0;
};

PureState kron_chain(std::span<const PureState> factors);
Complex   inner_product(const PureState &a, const PureState &b);

/// Coefficient matrix of `s` across `cut`: rows run over K, columns over K^c,
/// each row-major in increasing party order.
CMatrix reshape_bipartite(const PureState &s, const Bipartition &cut);

/// Same permutation applied to a bare amplitude vector.
CVector permute_to_cut(const CVector &amp, const DimList &dims, const Bipartition &cut);

inline constexpr double kRankTolerance = 1e-8;

/// Descending Schmidt coefficients across `cut`. Requires a normalized state.
std::vector<double> schmidt_coefficients(const PureState &s, const Bipartition &cut);
int                 schmidt_rank(std::span<const double> coefficients, double tol = kRankTolerance);

} // namespace rankgauge

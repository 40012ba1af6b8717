// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/subspace.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rankgauge {

/// Contents of a vector-set file:
///   {"dims":[d1,...,dn], "vectors":[[[re,im],...], ...], "normalized":bool}
/// Vectors may be unnormalized and linearly dependent. When "normalized" is true
/// every vector must have unit norm within 1e-8.
struct VectorSet {
    DimList                dims;
    std::vector<PureState> vectors;
    bool                   normalized = false;
};

/// Throws InputError naming the line/column of syntax errors or the offending field.
/// A vector whose length disagrees with dims is a UsageError.
VectorSet parse_vector_set(std::string_view json_text);
VectorSet load_vector_set(const std::filesystem::path &path);

std::string vector_set_to_json(const DimList &dims, const std::vector<CVector> &vectors, bool normalized);
std::string state_to_json(const PureState &state);
std::string subspace_to_json(const Subspace &sub);

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/subspace.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankgauge {

/// `name:key=value,...`, values are arithmetic expressions that may use `pi`.
struct ExampleSpec {
    std::string                   name;
    std::map<std::string, double> params;
};

/// Evaluates `+ - * /`, parentheses, decimal literals and `pi`. Throws InputError.
double parse_number_expr(std::string_view expr);

ExampleSpec parse_example_spec(std::string_view text);

struct ResolvedExample {
    std::string              canonical; ///< normalized spec text, e.g. "strip:d=3,theta=1.5707963267948966,xi=0"
    Subspace                 subspace;
    std::optional<PureState> state; ///< set when the example is a single state
};

/// Builds the named example. Subspace-valued entries: strip, ges, tiles (support of the
/// Tiles bound entangled state), tiles-upb, example3 (support), upb3 (complement CES),
/// upb3-span, ces. State-valued entries: dicke, mmul, wtype, ghz, zero-bell.
ResolvedExample resolve_example(const ExampleSpec &spec);
ResolvedExample resolve_example(std::string_view text);

/// One line per catalog entry with its keys and defaults.
std::vector<std::string> catalog_help();

} // namespace rankgauge

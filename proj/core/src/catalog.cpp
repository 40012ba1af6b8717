// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/catalog.hpp"

#include "rankgauge/errors.hpp"
#include "rankgauge/examples.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <limits>
#include <cmath>
#include <numbers>
#include <set>

namespace rankgauge {

namespace {

class ExprParser {
  public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    double parse() {
        const double v = expr();
        skip();
        if(pos_ != s_.size()) fail("unexpected character");
        return v;
    }

  private:
    [[noreturn]] void fail(const char *what) const {
        throw InputError(fmt::format("bad number '{}': {} at offset {}", s_, what, pos_));
    }
    void skip() {
        while(pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if(pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    double expr() {
        double v = term();
        for(;;) {
            if(eat('+')) v += term();
            else if(eat('-')) v -= term();
            else return v;
        }
    }
    double term() {
        double v = factor();
        for(;;) {
            if(eat('*')) v *= factor();
            else if(eat('/')) v /= factor();
            else return v;
        }
    }
    double factor() {
        if(eat('-')) return -factor();
        if(eat('+')) return factor();
        if(eat('(')) {
            const double v = expr();
            if(!eat(')')) fail("missing ')'");
            return v;
        }
        skip();
        if(s_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        double      v   = 0.0;
        const auto *beg = s_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(beg, s_.data() + s_.size(), v);
        if(ec != std::errc() || ptr == beg) fail("expected a number or 'pi'");
        pos_ += static_cast<std::size_t>(ptr - beg);
        return v;
    }

    std::string_view s_;
    std::size_t      pos_ = 0;
};

struct Entry {
    std::string_view                                  name;
    std::vector<std::pair<std::string_view, double>> defaults; // NaN = required
    std::string_view                                  what;
};

const std::vector<Entry> &entries() {
    constexpr double req = std::numeric_limits<double>::quiet_NaN();
    static const std::vector<Entry> table = {
        {"strip", {{"d", 3}, {"theta", std::numbers::pi / 2}, {"xi", 0}}, "2 x d strip subspace"},
        {"ges", {{"d", 3}, {"theta", std::numbers::pi / 2}, {"xi", 0}}, "2 x d x d genuinely entangled subspace"},
        {"tiles", {}, "support of the Tiles bound entangled state (3x3)"},
        {"tiles-upb", {}, "span of the Tiles UPB (3x3)"},
        {"example3", {}, "support of the rank-3 mixture in 4x4"},
        {"upb3", {}, "complement of the 3-qubit UPB (completely entangled)"},
        {"upb3-span", {}, "span of the 3-qubit UPB"},
        {"ces", {{"d1", req}, {"d2", req}, {"d3", req}}, "maximal completely entangled subspace"},
        {"dicke", {{"n", req}, {"k", req}}, "Dicke state |D_n^k>"},
        {"mmul", {{"n", 2}}, "n x n matrix multiplication tensor"},
        {"wtype", {{"a", req}, {"b", req}, {"c", req}}, "a|100> + b|010> + c|001> (rescaled to unit norm)"},
        {"ghz", {{"n", 3}}, "n-qubit GHZ state"},
        {"zero-bell", {}, "|0> (|00> + |11>)/sqrt(2)"},
    };
    return table;
}

int as_int(const std::map<std::string, double> &p, const std::string &key) {
    const double v = p.at(key);
    if(v != std::round(v)) throw InputError(fmt::format("example parameter '{}' must be an integer, got {}", key, v));
    return static_cast<int>(v);
}

std::string fmt_value(double v) { return fmt::format("{}", v); }

} // namespace

double parse_number_expr(std::string_view expr) { return ExprParser(expr).parse(); }

ExampleSpec parse_example_spec(std::string_view text) {
    ExampleSpec spec;
    const auto  colon = text.find(':');
    spec.name         = std::string(text.substr(0, colon));
    const Entry *entry = nullptr;
    for(const auto &e : entries())
        if(e.name == spec.name) entry = &e;
    if(entry == nullptr) throw InputError(fmt::format("unknown example '{}'", spec.name));

    if(colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while(!rest.empty()) {
            const auto       comma = rest.find(',');
            std::string_view item  = rest.substr(0, comma);
            rest                   = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
            const auto eq          = item.find('=');
            if(eq == std::string_view::npos) throw InputError(fmt::format("example '{}': expected key=value, got '{}'", spec.name, item));
            std::string key(item.substr(0, eq));
            bool        known = false;
            for(const auto &[k, v] : entry->defaults) known |= (k == key);
            if(!known) throw InputError(fmt::format("example '{}' has no parameter '{}'", spec.name, key));
            spec.params[key] = parse_number_expr(item.substr(eq + 1));
        }
    }
    for(const auto &[k, v] : entry->defaults) {
        if(spec.params.count(std::string(k))) continue;
        if(std::isnan(v)) throw InputError(fmt::format("example '{}' requires parameter '{}'", spec.name, k));
        spec.params[std::string(k)] = v;
    }
    return spec;
}

ResolvedExample resolve_example(const ExampleSpec &spec) {
    namespace ex    = examples;
    const auto &p   = spec.params;
    std::string canonical = spec.name;
    for(const auto &e : entries()) {
        if(e.name != spec.name) continue;
        std::string sep = ":";
        for(const auto &[k, v] : e.defaults) {
            canonical += sep + std::string(k) + "=" + fmt_value(p.at(std::string(k)));
            sep = ",";
        }
    }
    auto from_state = [&](PureState psi) {
        const PureState one[] = {psi};
        return ResolvedExample{canonical, Subspace::from_spanning_set(one), std::move(psi)};
    };
    const std::string &n = spec.name;
    if(n == "strip") return {canonical, ex::strip_subspace({as_int(p, "d"), p.at("theta"), p.at("xi")}), std::nullopt};
    if(n == "ges") return {canonical, ex::ges_subspace(as_int(p, "d"), p.at("theta"), p.at("xi")), std::nullopt};
    if(n == "tiles") return {canonical, support_space(ex::tiles_bound_entangled_state()), std::nullopt};
    if(n == "tiles-upb") return {canonical, ex::tiles_upb_subspace(), std::nullopt};
    if(n == "example3") return {canonical, support_space(ex::example3_state()), std::nullopt};
    if(n == "upb3") return {canonical, complement_basis(ex::upb_3qubit_subspace()), std::nullopt};
    if(n == "upb3-span") return {canonical, ex::upb_3qubit_subspace(), std::nullopt};
    if(n == "ces") return {canonical, ex::max_ces_subspace(as_int(p, "d1"), as_int(p, "d2"), as_int(p, "d3")), std::nullopt};
    if(n == "dicke") return from_state(ex::dicke_state(as_int(p, "n"), as_int(p, "k")));
    if(n == "mmul") return from_state(ex::matrix_mult_tensor(as_int(p, "n")));
    if(n == "wtype") {
        const double norm = std::sqrt(p.at("a") * p.at("a") + p.at("b") * p.at("b") + p.at("c") * p.at("c"));
        if(!(norm > 0.0)) throw InputError("wtype: coefficients are all zero");
        return from_state(ex::w_type_state({p.at("a") / norm, p.at("b") / norm, p.at("c") / norm}));
    }
    if(n == "ghz") return from_state(ex::ghz_state(as_int(p, "n")));
    if(n == "zero-bell") {
        CVector amp = CVector::Zero(8);
        amp[0] = amp[3] = 1.0 / std::sqrt(2.0);
        return from_state(PureState(DimList{2, 2, 2}, amp));
    }
    throw InputError(fmt::format("unknown example '{}'", n));
}

ResolvedExample resolve_example(std::string_view text) {
    try {
        return resolve_example(parse_example_spec(text));
    } catch(const UsageError &e) { throw InputError(fmt::format("example '{}': {}", text, e.what())); }
}

std::vector<std::string> catalog_help() {
    std::vector<std::string> out;
    for(const auto &e : entries()) {
        std::string keys;
        for(const auto &[k, v] : e.defaults) keys += fmt::format("{}{}{}", keys.empty() ? "" : ",", k, std::isnan(v) ? "" : "=" + fmt_value(v));
        out.push_back(fmt::format("{:<10} {:<32} {}", e.name, keys, e.what));
    }
    return out;
}

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "rankgauge/io.hpp"

#include "rankgauge/errors.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace rankgauge {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw InputError(fmt::format("field '{}': {}", field, what));
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for(std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if(text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

VectorSet parse_vector_set(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch(const json::parse_error &e) {
        // e.byte points one past the offending character
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError(fmt::format("malformed JSON at line {}, column {}: {}", line, col, e.what()));
    }
    if(!doc.is_object()) field_error("<root>", "expected an object");

    if(!doc.contains("dims") || !doc["dims"].is_array()) field_error("dims", "missing or not an array");
    std::vector<int> dims;
    for(std::size_t k = 0; k < doc["dims"].size(); ++k) {
        const auto &d = doc["dims"][k];
        if(!d.is_number_integer() || d.get<long long>() < 2) field_error(fmt::format("dims[{}]", k), "expected an integer >= 2");
        dims.push_back(d.get<int>());
    }
    if(dims.empty()) field_error("dims", "empty");

    bool normalized = false;
    if(doc.contains("normalized")) {
        if(!doc["normalized"].is_boolean()) field_error("normalized", "expected true or false");
        normalized = doc["normalized"].get<bool>();
    }

    VectorSet out{DimList(dims), {}, normalized};
    if(!doc.contains("vectors") || !doc["vectors"].is_array()) field_error("vectors", "missing or not an array");
    const auto &vectors = doc["vectors"];
    if(vectors.empty()) field_error("vectors", "empty");
    for(std::size_t v = 0; v < vectors.size(); ++v) {
        const auto &vec = vectors[v];
        if(!vec.is_array() || static_cast<Index>(vec.size()) != out.dims.total())
            throw UsageError(fmt::format("field 'vectors[{}]': length does not match dims {} (expected {} [re,im] pairs)", v,
                                         out.dims.to_string(), out.dims.total()));
        CVector amp(out.dims.total());
        for(std::size_t i = 0; i < vec.size(); ++i) {
            const auto &z = vec[i];
            if(!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                field_error(fmt::format("vectors[{}][{}]", v, i), "expected [re, im]");
            amp[static_cast<Index>(i)] = Complex(z[0].get<double>(), z[1].get<double>());
        }
        if(!amp.allFinite()) field_error(fmt::format("vectors[{}]", v), "non-finite amplitude");
        if(normalized && std::abs(amp.norm() - 1.0) > 1e-8)
            field_error(fmt::format("vectors[{}]", v), fmt::format("declared normalized but has norm {}", amp.norm()));
        out.vectors.emplace_back(out.dims, std::move(amp));
    }
    return out;
}

VectorSet load_vector_set(const std::filesystem::path &path) {
    std::ifstream in(path);
    if(!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_vector_set(ss.str());
    } catch(const InputError &e) { throw InputError(fmt::format("{}: {}", path.string(), e.what())); }
}

std::string vector_set_to_json(const DimList &dims, const std::vector<CVector> &vectors, bool normalized) {
    json doc;
    doc["dims"] = std::vector<int>(dims.dims().begin(), dims.dims().end());
    json vs     = json::array();
    for(const auto &v : vectors) {
        json amps = json::array();
        for(Index i = 0; i < v.size(); ++i) amps.push_back({v[i].real(), v[i].imag()});
        vs.push_back(std::move(amps));
    }
    doc["vectors"]    = std::move(vs);
    doc["normalized"] = normalized;
    return doc.dump(2) + "\n";
}

std::string state_to_json(const PureState &state) { return vector_set_to_json(state.dims(), {state.amp()}, state.is_normalized()); }

std::string subspace_to_json(const Subspace &sub) {
    std::vector<CVector> cols;
    for(Index j = 0; j < sub.dim(); ++j) cols.emplace_back(sub.basis().col(j));
    return vector_set_to_json(sub.dims(), cols, true);
}

} // namespace rankgauge

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#include "output.hpp"

#include "rankgauge/errors.hpp"
#include "version.hpp"

#include <fmt/format.h>

#include <fstream>

namespace rankgauge::cli {

std::string num(double v) { return fmt::format("{:.17g}", v); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

std::string CsvTable::str() const {
    auto line = [](const std::vector<std::string> &cells) {
        std::string out;
        for(std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
        return out + "\n";
    };
    std::string out = line(header_);
    for(const auto &r : rows_) out += line(r);
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for(unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

std::filesystem::path write_file(const std::filesystem::path &dir, const std::string &name, const std::string &text) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if(ec) throw InputError(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
    const auto    path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if(!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
    out << text;
    return path;
}

nlohmann::json Manifest::to_json() const {
    return {
        {"command", command},       {"argv", argv},           {"config", config},   {"seed", seed},
        {"input_hash", input_hash}, {"version", kVersion},    {"wall_time", wall_time},
        {"outputs", outputs},
    };
}

} // namespace rankgauge::cli

// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rankgauge::cli {

/// 17 significant digits, locale independent.
std::string num(double v);

/// Accumulates `\n`-terminated CSV rows.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header);
    void add(std::vector<std::string> row);
    [[nodiscard]] std::string str() const;

  private:
    std::vector<std::string>              header_;
    std::vector<std::vector<std::string>> rows_;
};

std::uint64_t fnv1a64(std::string_view data);
std::string   hex64(std::uint64_t v);

/// Writes `text` to dir/name (creating dir) and returns the path.
std::filesystem::path write_file(const std::filesystem::path &dir, const std::string &name, const std::string &text);

/// Run metadata written next to every result file.
struct Manifest {
    std::string              command;
    std::vector<std::string> argv;
    nlohmann::json           config = nlohmann::json::object();
    std::uint64_t            seed   = 0;
    std::string              input_hash;
    double                   wall_time = 0.0;
    std::vector<std::string> outputs;

    [[nodiscard]] nlohmann::json to_json() const;
};

} // namespace rankgauge::cli

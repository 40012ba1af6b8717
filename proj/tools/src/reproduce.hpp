// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "output.hpp"

#include "rankgauge/optimizer.hpp"

#include <string>
#include <vector>

namespace rankgauge::cli {

struct ReproduceOptions {
    OptimConfig cfg;
    int         samples      = 200;  // fig2
    int         points       = 1000; // fig3
    bool        full         = false;
    long        max_total_dim = 0;   // table2 cap on d1*d2*d3, 0 = none
    double      grid_step    = 0.1;
    double      grid_max     = 1.0;
};

/// One output file of a reproduce target.
struct DataFile {
    std::string name;
    CsvTable    table;
};

/// Known targets: fig1, fig2, fig3, table2, examples.
bool is_reproduce_target(const std::string &target);
std::vector<std::string> reproduce_targets();

/// Throws UsageError for unknown targets.
std::vector<DataFile> reproduce(const std::string &target, const ReproduceOptions &opt);

struct TableRow {
    int    d1, d2, d3;
    double reference;
};
/// Dimension list of the CES timing table with reference E_2 values.
std::vector<TableRow> table2_rows(bool full);

} // namespace rankgauge::cli

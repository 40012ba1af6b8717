// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/tensor.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace rankgauge {

enum class Termination {
    GradientTolerance, ///< |grad|_inf below tol_grad
    LossStagnation,    ///< relative loss change below tol_loss_rel for `stagnation_window` iterations
    NoProgress,        ///< line search cannot find a lower value at working precision
    IterationCap,      ///< max_iters reached
    Failed,            ///< singular parameters persisted through every reinitialization
};

std::string_view to_string(Termination t);

/// Objective callback: returns f(x) and writes the gradient into `grad`.
using GradientObjective = std::function<double(const RVector &x, RVector &grad)>;

struct LbfgsOptions {
    double tol_grad          = 1e-10;
    double tol_loss_rel      = 1e-14;
    int    stagnation_window = 5;
    int    max_iters         = 10000;
    int    memory            = 10;
    double wolfe_c1          = 1e-4;
    double wolfe_c2          = 0.9;
    int    max_line_search   = 40;
    bool   record_history    = false;
};

struct LbfgsResult {
    RVector             x;
    double              value = 0.0;
    RVector             gradient;
    int                 iterations  = 0;
    int                 evaluations = 0;
    Termination         reason      = Termination::IterationCap;
    std::vector<double> history; ///< accepted values, starting with f(x0); only if record_history
};

/// Limited-memory BFGS with a strong-Wolfe line search. Curvature pairs with
/// s.y <= 1e-12 |s||y| are discarded. Exceptions thrown by the objective propagate.
LbfgsResult lbfgs_minimize(const GradientObjective &fun, RVector x0, const LbfgsOptions &opts);

} // namespace rankgauge

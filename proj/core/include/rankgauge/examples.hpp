// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rankgauge/subspace.hpp"

namespace rankgauge::examples {

/// Strip subspace parameters: a = cos(theta/2), b = e^{i xi} sin(theta/2).
struct StripParams {
    int    d     = 3;
    double theta = 1.5707963267948966;
    double xi    = 0.0;
};

/// span{ a|0>|i> + b|1>|i+1> : i = 0..d-2 } in C^2 (x) C^d.
Subspace strip_subspace(const StripParams &p);
/// (1 - sqrt(1 - sin^2(theta) sin^2(pi/d))) / 2
double strip_e2_closed_form(const StripParams &p);

/// span{ a|0>|i>|j> + b|1>|i+1>|j+1> } in C^2 (x) C^d (x) C^d; dimension (d-1)^2.
Subspace ges_subspace(int d, double theta, double xi = 0.0);
/// Same value on every bipartition; equals the strip formula.
double ges_e2_closed_form(int d, double theta);

/// Span of the five "Tiles" product vectors in 3x3.
Subspace tiles_upb_subspace();
/// P_perp / (9 - 5) for the Tiles UPB.
MixedState tiles_bound_entangled_state();

/// (1/3) sum |psi_i><psi_i| over three maximally entangled 4x4 vectors.
MixedState example3_state();

/// {|000>, |1,+,->, |-,1,+>, |+,-,1>}.
Subspace upb_3qubit_subspace();
/// 1 - 3 sqrt(6) / 8, the E_2 of the complement of upb_3qubit_subspace().
double upb_3qubit_complement_e2();

/// span{ |i1 i2 i3> - |j1 j2 j3> : i1+i2+i3 = j1+j2+j3 }.
Subspace max_ces_subspace(int d1, int d2, int d3);
/// d1 d2 d3 - d1 - d2 - d3 + 2
Index max_ces_dimension(int d1, int d2, int d3);

/// Normalized n-qubit Dicke state with k excitations.
PureState dicke_state(int n, int k);
/// 1 - C(n,k) (k/n)^k ((n-k)/n)^(n-k)
double dicke_e2_closed_form(int n, int k);
/// (sqrt((n-k)/n)|0> + sqrt(k/n)|1>)^(x)n
PureState dicke_closest_product(int n, int k);

/// sum_{ijk} |ij>|ik>|jk> / n^(3/2), local dims n^2.
PureState matrix_mult_tensor(int n);

PureState ghz_state(int n);

struct WTypeCoeffs {
    double a, b, c;
};

/// a|100> + b|010> + c|001>. Coefficients must lie on the unit sphere within 1e-12.
PureState w_type_state(const WTypeCoeffs &c);
/// Largest squared overlap with a product state.
double w_type_lambda_sq_closed_form(const WTypeCoeffs &c);

} // namespace rankgauge::examples

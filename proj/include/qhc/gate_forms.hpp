// Copyright 2026 The QHC Synth Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <string_view>

#include "qhc/complex_linalg.hpp"

namespace qhc {

enum class GateLabel { HalfAdder, FullAdder };

[[nodiscard]] std::string_view to_string(GateLabel kind);

/// Coefficients of the two-input adder; all are functions of alpha+beta.
struct HalfAdderCoefficients {
    double a;
    double b;
    double f;
};

/// Coefficients of the three-input adder; all are functions of the input sum.
/// l and p + i q coincide; both are kept as independent fields.
struct FullAdderCoefficients {
    Complex l;
    double m;
    double n;
    double p;
    double q;
};

[[nodiscard]] HalfAdderCoefficients half_adder_coefficients(double sum);
[[nodiscard]] FullAdderCoefficients full_adder_coefficients(double sum);

/**
 * Closed-form two-qubit half-adder unitary
 *
 *   | A    B-F  0  B+F |
 *   | B+F  A    0  B-F |
 *   | 0    0    1  0   |
 *   | B-F  B+F  0  A   |
 *
 * with A = (2 cos(2 pi s / 3) + 1) / 3, B = (1 - cos(2 pi s / 3)) / 3 and
 * F = sin(2 pi s / 3) / sqrt 3, s = alpha + beta.
 */
[[nodiscard]] ComplexMatrix half_adder_closed_form(double alpha, double beta);

/// Closed-form two-qubit full-adder unitary (a circulant in l, m, n, p, q with
/// an overall 1/4). Unitary for every real input.
[[nodiscard]] ComplexMatrix full_adder_closed_form(double alpha, double gamma,
                                                   double beta);

/// Closed form evaluated at a total input sum.
[[nodiscard]] ComplexMatrix closed_form_at_sum(GateLabel kind, double sum);

/// The 4-cycle |00> -> |01> -> |10> -> |11> -> |00> as a permutation matrix.
[[nodiscard]] ComplexMatrix appendix_R();

/// i log R on the principal branch, built from the exact cycle spectrum.
[[nodiscard]] ComplexMatrix appendix_H();

/// Spectrum of the cycle a gate family is generated from.
[[nodiscard]] SpectralDecomposition gate_spectrum(GateLabel kind);

/// Cycle length of a gate family (3 for the half adder, 4 for the full adder).
[[nodiscard]] std::size_t cycle_length(GateLabel kind);

/**
 * Max entrywise |closed form - exp(-i s H)| over grid_points uniformly spaced
 * sums covering [0, L]. The sweep runs on the OpenMP kernel.
 * InvalidParameter when grid_points < 2.
 */
[[nodiscard]] double cross_validate(GateLabel kind, std::size_t grid_points);

} // namespace qhc

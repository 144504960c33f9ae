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

// Grid sweeps over one-parameter gate families. Each kernel has an OpenMP
// version in qhc::parallel and a plain loop in qhc::serial; the serial
// versions are the reference the parallel ones are tested against.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qhc/complex_linalg.hpp"

namespace qhc {

using MatrixFamily = std::function<ComplexMatrix(double)>;

/// count points evenly covering [lo, hi], both ends included (count >= 2).
[[nodiscard]] std::vector<double> uniform_grid(double lo, double hi,
                                               std::size_t count);

namespace serial {

/// max over s in points of max_abs_diff(lhs(s), rhs(s)).
[[nodiscard]] double max_grid_deviation(std::span<const double> points,
                                        const MatrixFamily& lhs,
                                        const MatrixFamily& rhs);

/// max over s in points of unitarity_defect(family(s)).
[[nodiscard]] double max_unitarity_defect(std::span<const double> points,
                                          const MatrixFamily& family);

/// Row i holds |<k| U(points[i]) |column>|^2 for every basis index k.
[[nodiscard]] std::vector<std::vector<double>>
column_probabilities(const SpectralDecomposition& spec,
                     std::span<const double> points, std::size_t column);

} // namespace serial

namespace parallel {

[[nodiscard]] double max_grid_deviation(std::span<const double> points,
                                        const MatrixFamily& lhs,
                                        const MatrixFamily& rhs);

[[nodiscard]] double max_unitarity_defect(std::span<const double> points,
                                          const MatrixFamily& family);

[[nodiscard]] std::vector<std::vector<double>>
column_probabilities(const SpectralDecomposition& spec,
                     std::span<const double> points, std::size_t column);

} // namespace parallel

} // namespace qhc

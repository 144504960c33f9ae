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
#include <random>

#include <doctest.h>

#include "qhc/errors.hpp"
#include "qhc/gate_forms.hpp"
#include "qhc/kernels.hpp"

using namespace qhc;

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(0.0, 4.0, 5);
    CHECK(g == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});
    CHECK(uniform_grid(0.0, 3.0, 101).back() == 3.0);
    CHECK_THROWS_AS((void)uniform_grid(0.0, 1.0, 1), InvalidParameter);
}

TEST_CASE("parallel kernels match the serial reference") {
    const auto points = uniform_grid(-4.0, 4.0, 513);
    const auto spec = gate_spectrum(GateLabel::FullAdder);
    const MatrixFamily closed = [](double s) {
        return closed_form_at_sum(GateLabel::FullAdder, s);
    };
    const MatrixFamily spectral = [&spec](double s) {
        return exp_from_spectrum(spec, s);
    };

    CHECK(parallel::max_grid_deviation(points, closed, spectral) ==
          serial::max_grid_deviation(points, closed, spectral));
    CHECK(parallel::max_unitarity_defect(points, closed) ==
          serial::max_unitarity_defect(points, closed));
    CHECK(parallel::column_probabilities(spec, points, 0) ==
          serial::column_probabilities(spec, points, 0));

    CHECK(serial::max_grid_deviation(points, closed, spectral) <= 1e-9);
    CHECK(serial::max_unitarity_defect(points, closed) <= 1e-12);
}

TEST_CASE("parallel kernels propagate exceptions") {
    const std::vector<double> points{0.0, 1.0, NAN, 2.0};
    const auto spec = gate_spectrum(GateLabel::HalfAdder);
    const MatrixFamily spectral = [&spec](double s) {
        return exp_from_spectrum(spec, s);
    };
    CHECK_THROWS_AS((void)parallel::max_unitarity_defect(points, spectral),
                    InvalidParameter);
    CHECK_THROWS_AS((void)parallel::column_probabilities(spec, points, 0),
                    InvalidParameter);
    CHECK_THROWS_AS((void)parallel::column_probabilities(spec, points, 4),
                    DimensionError);
}

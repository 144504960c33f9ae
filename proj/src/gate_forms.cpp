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
#include "qhc/gate_forms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qhc/errors.hpp"
#include "qhc/kernels.hpp"

namespace qhc {

namespace {

constexpr std::array<std::size_t, 3> kHalfAdderOrbit{0, 1, 3};
constexpr std::array<std::size_t, 4> kFullAdderOrbit{0, 1, 2, 3};

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw InvalidParameter(std::string(name) + " is not finite");
    }
}

} // namespace

std::string_view to_string(GateLabel kind) {
    switch (kind) {
    case GateLabel::HalfAdder:
        return "half-adder";
    case GateLabel::FullAdder:
        return "full-adder";
    }
    return "unknown";
}

HalfAdderCoefficients half_adder_coefficients(double sum) {
    require_finite(sum, "input sum");
    const double angle = 2.0 / 3.0 * std::numbers::pi * sum;
    const double c = std::cos(angle);
    return {
        .a = (2.0 * c + 1.0) / 3.0,
        .b = (1.0 - c) / 3.0,
        .f = std::sin(angle) / std::numbers::sqrt3,
    };
}

FullAdderCoefficients full_adder_coefficients(double sum) {
    require_finite(sum, "input sum");
    const double half = 0.5 * std::numbers::pi * sum;
    const double full = std::numbers::pi * sum;
    return {
        .l = std::polar(1.0, full),
        .m = std::cos(half),
        .n = std::sin(half),
        .p = std::cos(full),
        .q = std::sin(full),
    };
}

ComplexMatrix half_adder_closed_form(double alpha, double beta) {
    require_finite(alpha, "alpha");
    require_finite(beta, "beta");
    const auto [a, b, f] = half_adder_coefficients(alpha + beta);
    const Complex A = a;
    const Complex P = b + f;
    const Complex M = b - f;
    const Complex O = 0.0;
    const Complex I = 1.0;
    // clang-format off
    return {4, {A, M, O, P,
                P, A, O, M,
                O, O, I, O,
                M, P, O, A}};
    // clang-format on
}

ComplexMatrix full_adder_closed_form(double alpha, double gamma, double beta) {
    require_finite(alpha, "alpha");
    require_finite(gamma, "gamma");
    require_finite(beta, "beta");
    const auto c = full_adder_coefficients(alpha + gamma + beta);
    const Complex iq{0.0, c.q};
    const Complex diag = (c.l + 2.0 * c.m + 1.0) / 4.0;
    const Complex down = (2.0 * c.n - c.p - iq + 1.0) / 4.0;
    const Complex across = (c.l - 2.0 * c.m + 1.0) / 4.0;
    const Complex up = (-2.0 * c.n - c.p - iq + 1.0) / 4.0;
    // clang-format off
    return {4, {diag,   up,     across, down,
                down,   diag,   up,     across,
                across, down,   diag,   up,
                up,     across, down,   diag}};
    // clang-format on
}

ComplexMatrix closed_form_at_sum(GateLabel kind, double sum) {
    switch (kind) {
    case GateLabel::HalfAdder:
        return half_adder_closed_form(sum, 0.0);
    case GateLabel::FullAdder:
        return full_adder_closed_form(sum, 0.0, 0.0);
    }
    throw InvalidParameter("unknown gate label");
}

ComplexMatrix appendix_R() {
    const Complex O = 0.0;
    const Complex I = 1.0;
    // clang-format off
    return {4, {O, O, O, I,
                I, O, O, O,
                O, I, O, O,
                O, O, I, O}};
    // clang-format on
}

ComplexMatrix appendix_H() {
    return generator(cycle_spectrum(kFullAdderOrbit, 4));
}

SpectralDecomposition gate_spectrum(GateLabel kind) {
    switch (kind) {
    case GateLabel::HalfAdder:
        return cycle_spectrum(kHalfAdderOrbit, 4);
    case GateLabel::FullAdder:
        return cycle_spectrum(kFullAdderOrbit, 4);
    }
    throw InvalidParameter("unknown gate label");
}

std::size_t cycle_length(GateLabel kind) {
    return kind == GateLabel::HalfAdder ? kHalfAdderOrbit.size()
                                        : kFullAdderOrbit.size();
}

double cross_validate(GateLabel kind, std::size_t grid_points) {
    if (grid_points < 2) {
        throw InvalidParameter("cross validation needs at least 2 grid points");
    }
    const auto spec = gate_spectrum(kind);
    const auto sums = uniform_grid(0.0, static_cast<double>(cycle_length(kind)),
                                   grid_points);
    return parallel::max_grid_deviation(
        sums, [kind](double s) { return closed_form_at_sum(kind, s); },
        [&spec](double s) { return exp_from_spectrum(spec, s); });
}

} // namespace qhc

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
#include "qhc/kernels.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "qhc/errors.hpp"

namespace qhc {

namespace {

std::vector<double> probabilities_at(const SpectralDecomposition& spec,
                                     double s, std::size_t column) {
    const ComplexMatrix u = exp_from_spectrum(spec, s);
    std::vector<double> out(u.dim());
    for (std::size_t k = 0; k < u.dim(); ++k) {
        out[k] = std::norm(u(k, column));
    }
    return out;
}

void check_column(const SpectralDecomposition& spec, std::size_t column) {
    if (column >= spec.dim) {
        throw DimensionError("column index outside the spectrum's dimension");
    }
}

// Runs body(i) for every i in [0, n) across OpenMP threads and rethrows the
// first exception once the team has joined.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(qhc_kernel_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count < 2) {
        throw InvalidParameter("a grid needs at least 2 points");
    }
    std::vector<double> out(count);
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + step * static_cast<double>(i);
    }
    out.back() = hi;
    return out;
}

namespace serial {

double max_grid_deviation(std::span<const double> points,
                          const MatrixFamily& lhs, const MatrixFamily& rhs) {
    double worst = 0.0;
    for (double s : points) {
        worst = std::max(worst, max_abs_diff(lhs(s), rhs(s)));
    }
    return worst;
}

double max_unitarity_defect(std::span<const double> points,
                            const MatrixFamily& family) {
    double worst = 0.0;
    for (double s : points) {
        worst = std::max(worst, unitarity_defect(family(s)));
    }
    return worst;
}

std::vector<std::vector<double>>
column_probabilities(const SpectralDecomposition& spec,
                     std::span<const double> points, std::size_t column) {
    check_column(spec, column);
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (double s : points) {
        out.push_back(probabilities_at(spec, s, column));
    }
    return out;
}

} // namespace serial

namespace parallel {

double max_grid_deviation(std::span<const double> points,
                          const MatrixFamily& lhs, const MatrixFamily& rhs) {
    std::vector<double> per_point(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        per_point[i] = max_abs_diff(lhs(points[i]), rhs(points[i]));
    });
    return per_point.empty()
               ? 0.0
               : *std::max_element(per_point.begin(), per_point.end());
}

double max_unitarity_defect(std::span<const double> points,
                            const MatrixFamily& family) {
    std::vector<double> per_point(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        per_point[i] = unitarity_defect(family(points[i]));
    });
    return per_point.empty()
               ? 0.0
               : *std::max_element(per_point.begin(), per_point.end());
}

std::vector<std::vector<double>>
column_probabilities(const SpectralDecomposition& spec,
                     std::span<const double> points, std::size_t column) {
    check_column(spec, column);
    std::vector<std::vector<double>> out(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        out[i] = probabilities_at(spec, points[i], column);
    });
    return out;
}

} // namespace parallel

} // namespace qhc

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
#include "qhc/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qhc/errors.hpp"

namespace qhc {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw DimensionError("matrix dimension " + std::to_string(dim) +
                             " outside [1, " + std::to_string(kMaxDim) + "]");
    }
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                    const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch " +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Accumulates w * v v^dagger into out (row-major, dim*dim).
void add_projector(std::vector<Complex>& out, const ComplexVector& v,
                   Complex weight) {
    const std::size_t n = v.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (v[r] == Complex{}) {
            continue;
        }
        const Complex wr = weight * v[r];
        for (std::size_t c = 0; c < n; ++c) {
            out[r * n + c] += wr * std::conj(v[c]);
        }
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim_);
    if (entries_.size() != dim_ * dim_) {
        throw DimensionError("expected " + std::to_string(dim_ * dim_) +
                             " entries, got " +
                             std::to_string(entries_.size()));
    }
    if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
        throw InvalidParameter("matrix entry is not finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    check_dim(dim);
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        e[i * dim + i] = 1.0;
    }
    return {dim, std::move(e)};
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    check_dim(dim);
    return {dim, std::vector<Complex>(dim * dim)};
}

ComplexVector ComplexMatrix::column(std::size_t col) const {
    ComplexVector out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        out[r] = (*this)(r, col);
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out[i * n + j] += aik * b(k, j);
            }
        }
    }
    return {n, std::move(out)};
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j * n + i] = std::conj(a(i, j));
        }
    }
    return {n, std::move(out)};
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "add");
    std::vector<Complex> out(a.entries().begin(), a.entries().end());
    auto rhs = b.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rhs[i];
    }
    return {a.dim(), std::move(out)};
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "subtract");
    std::vector<Complex> out(a.entries().begin(), a.entries().end());
    auto rhs = b.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= rhs[i];
    }
    return {a.dim(), std::move(out)};
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    std::vector<Complex> out(a.entries().begin(), a.entries().end());
    for (auto& z : out) {
        z *= factor;
    }
    return {a.dim(), std::move(out)};
}

ComplexMatrix power(const ComplexMatrix& a, unsigned k) {
    ComplexMatrix result = ComplexMatrix::identity(a.dim());
    ComplexMatrix base = a;
    while (k > 0) {
        if (k & 1u) {
            result = matmul(result, base);
        }
        k >>= 1u;
        if (k > 0) {
            base = matmul(base, base);
        }
    }
    return result;
}

ComplexVector apply(const ComplexMatrix& a, std::span<const Complex> v) {
    const std::size_t n = a.dim();
    if (v.size() != n) {
        throw DimensionError("apply: matrix dimension " + std::to_string(n) +
                             " vs vector length " + std::to_string(v.size()));
    }
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double unitarity_defect(const ComplexMatrix& a) {
    const ComplexMatrix gram = matmul(adjoint(a), a);
    return max_abs_diff(gram, ComplexMatrix::identity(a.dim()));
}

double hermiticity_defect(const ComplexMatrix& a) {
    return max_abs_diff(a, adjoint(a));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    auto x = a.entries();
    auto y = b.entries();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - y[i]));
    }
    return worst;
}

SpectralDecomposition cycle_spectrum(std::span<const std::size_t> orbit,
                                     std::size_t dim) {
    check_dim(dim);
    if (orbit.empty()) {
        throw InvalidOrbit("orbit must contain at least one index");
    }
    std::vector<bool> on_orbit(dim, false);
    for (std::size_t idx : orbit) {
        if (idx >= dim) {
            throw InvalidOrbit("orbit index " + std::to_string(idx) +
                               " out of range for dimension " +
                               std::to_string(dim));
        }
        if (on_orbit[idx]) {
            throw InvalidOrbit("orbit index " + std::to_string(idx) +
                               " repeated");
        }
        on_orbit[idx] = true;
    }

    const std::size_t len = orbit.size();
    const double norm = 1.0 / std::sqrt(static_cast<double>(len));
    constexpr double two_pi = 2.0 * std::numbers::pi;

    SpectralDecomposition spec;
    spec.dim = dim;
    spec.eigenangles.reserve(dim);
    spec.eigenvectors.reserve(dim);

    // The shift sends orbit[k] -> orbit[k+1], so the Fourier vector with
    // components exp(-2 pi i j k / L) has eigenvalue exp(2 pi i j / L).
    for (std::size_t j = 0; j < len; ++j) {
        // Principal branch: reduce j into (-L/2, L/2] so the angle lands
        // in (-pi, pi] without rounding through 2 pi.
        auto signed_j = static_cast<long long>(j);
        if (2 * j > len) {
            signed_j -= static_cast<long long>(len);
        }
        spec.eigenangles.push_back(two_pi * static_cast<double>(signed_j) /
                                   static_cast<double>(len));

        ComplexVector v(dim);
        for (std::size_t k = 0; k < len; ++k) {
            const std::size_t turns = (j * k) % len;
            const double phase =
                -two_pi * static_cast<double>(turns) / static_cast<double>(len);
            v[orbit[k]] = std::polar(norm, phase);
        }
        spec.eigenvectors.push_back(std::move(v));
    }

    for (std::size_t idx = 0; idx < dim; ++idx) {
        if (on_orbit[idx]) {
            continue;
        }
        ComplexVector e(dim);
        e[idx] = 1.0;
        spec.eigenangles.push_back(0.0);
        spec.eigenvectors.push_back(std::move(e));
        spec.fixed_subspace_indices.push_back(idx);
    }
    return spec;
}

ComplexMatrix exp_from_spectrum(const SpectralDecomposition& spec, double s) {
    if (!std::isfinite(s)) {
        throw InvalidParameter("evolution parameter is not finite");
    }
    std::vector<Complex> out(spec.dim * spec.dim);
    for (std::size_t j = 0; j < spec.eigenvectors.size(); ++j) {
        add_projector(out, spec.eigenvectors[j],
                      std::polar(1.0, s * spec.eigenangles[j]));
    }
    return {spec.dim, std::move(out)};
}

ComplexMatrix generator(const SpectralDecomposition& spec) {
    std::vector<Complex> out(spec.dim * spec.dim);
    for (std::size_t j = 0; j < spec.eigenvectors.size(); ++j) {
        if (spec.eigenangles[j] == 0.0) {
            continue;
        }
        add_projector(out, spec.eigenvectors[j], -spec.eigenangles[j]);
    }
    return {spec.dim, std::move(out)};
}

double orthonormality_defect(const SpectralDecomposition& spec) {
    double worst = 0.0;
    const auto& vs = spec.eigenvectors;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i; j < vs.size(); ++j) {
            Complex dot{};
            for (std::size_t k = 0; k < spec.dim; ++k) {
                dot += std::conj(vs[i][k]) * vs[j][k];
            }
            const double expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(dot - expected));
        }
    }
    return worst;
}

ComplexMatrix reconstruct(const SpectralDecomposition& spec) {
    return exp_from_spectrum(spec, 1.0);
}

} // namespace qhc

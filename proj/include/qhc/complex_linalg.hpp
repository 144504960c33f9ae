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
#include <cstddef>
#include <span>
#include <vector>

namespace qhc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Largest Hilbert-space dimension handled by the dense kernels.
inline constexpr std::size_t kMaxDim = 64;

/// Tolerance for algebraic identities (unitarity, hermiticity, group law).
inline constexpr double kIdentityTolerance = 1e-12;
/// Tolerance for comparing two independently evaluated forms of a gate.
inline constexpr double kCrossFormTolerance = 1e-9;

/**
 * Dense square complex matrix, row-major. Immutable once built: every
 * operation returns a fresh matrix. Entries are checked to be finite on
 * construction.
 */
class ComplexMatrix {
  public:
    /// Throws DimensionError unless entries.size() == dim*dim and
    /// 1 <= dim <= kMaxDim; InvalidParameter on a non-finite entry.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] ComplexVector column(std::size_t col) const;

    friend bool operator==(const ComplexMatrix&,
                           const ComplexMatrix&) = default;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

[[nodiscard]] ComplexMatrix matmul(const ComplexMatrix& a,
                                   const ComplexMatrix& b);
[[nodiscard]] ComplexMatrix adjoint(const ComplexMatrix& a);
[[nodiscard]] ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
[[nodiscard]] ComplexMatrix subtract(const ComplexMatrix& a,
                                     const ComplexMatrix& b);
[[nodiscard]] ComplexMatrix scale(const ComplexMatrix& a, Complex factor);
/// a^k for k >= 0 by repeated squaring.
[[nodiscard]] ComplexMatrix power(const ComplexMatrix& a, unsigned k);
[[nodiscard]] ComplexVector apply(const ComplexMatrix& a,
                                  std::span<const Complex> v);

/// Max-abs-entry norm of a^dagger a - I. Zero iff a is unitary.
[[nodiscard]] double unitarity_defect(const ComplexMatrix& a);
/// Max-abs-entry norm of a - a^dagger.
[[nodiscard]] double hermiticity_defect(const ComplexMatrix& a);
/// Max entrywise |a - b|. Throws DimensionError on mismatch.
[[nodiscard]] double max_abs_diff(const ComplexMatrix& a,
                                  const ComplexMatrix& b);

/// Spectral data of a unitary: angles phi_j in (-pi, pi] with orthonormal
/// eigenvectors v_j, so that the matrix equals sum_j exp(i phi_j) v_j v_j^dagger.
struct SpectralDecomposition {
    std::size_t dim = 0;
    std::vector<double> eigenangles;
    std::vector<ComplexVector> eigenvectors;
    /// Basis indices fixed by the decomposed permutation; each carries a
    /// standard-basis eigenvector with eigenangle 0.
    std::vector<std::size_t> fixed_subspace_indices;
};

/**
 * Exact spectral decomposition of the permutation that sends orbit[k] to
 * orbit[k+1 mod L] and fixes every other index. Orbit eigenvectors are
 * discrete-Fourier vectors supported on the orbit; eigenangles are the
 * principal angles of the L-th roots of unity, with -1 mapped to +pi.
 *
 * Throws InvalidOrbit on an empty orbit, duplicate or out-of-range indices,
 * and DimensionError when dim is outside [1, kMaxDim].
 */
[[nodiscard]] SpectralDecomposition
cycle_spectrum(std::span<const std::size_t> orbit, std::size_t dim);

/// U(s) = sum_j exp(i s phi_j) v_j v_j^dagger, i.e. exp(-i s H) with
/// H = i log of the decomposed unitary. InvalidParameter on non-finite s.
[[nodiscard]] ComplexMatrix exp_from_spectrum(const SpectralDecomposition& spec,
                                              double s);

/// H = sum_j (-phi_j) v_j v_j^dagger, the Hermitian generator with
/// exp(-iH) equal to the decomposed unitary.
[[nodiscard]] ComplexMatrix generator(const SpectralDecomposition& spec);

/// Max over pairs of |<v_i, v_j> - delta_ij|.
[[nodiscard]] double orthonormality_defect(const SpectralDecomposition& spec);

/// sum_j exp(i phi_j) v_j v_j^dagger.
[[nodiscard]] ComplexMatrix reconstruct(const SpectralDecomposition& spec);

} // namespace qhc

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

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qhc/complex_linalg.hpp"
#include "qhc/synth.hpp"

namespace qhc {

inline constexpr double kNormTolerance = 1e-10;
/// A basis outcome is reported once one probability reaches 1 - this.
inline constexpr double kBasisTolerance = 1e-6;
/// apply() refuses matrices whose unitarity defect exceeds this.
inline constexpr double kApplyUnitarityTolerance = 1e-9;

/// Normalized amplitudes over a 2^N computational basis.
class StateVector {
  public:
    /// Throws DimensionError unless the length is a power of two in
    /// [2, kMaxDim]; InvalidParameter on a non-finite amplitude or a norm
    /// off from 1 by more than kNormTolerance.
    explicit StateVector(ComplexVector amplitudes);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] unsigned qubits() const noexcept;
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_.at(i); }
    [[nodiscard]] std::vector<double> probabilities() const;
    [[nodiscard]] double norm() const;

  private:
    ComplexVector amps_;
};

struct BasisOutcome {
    std::size_t index = 0;
    std::string label;
};

struct SuperposedOutcome {
    std::vector<double> probabilities;
};

using DecodedOutcome = std::variant<BasisOutcome, SuperposedOutcome>;

/// |0...0> on qubits qubits (1 <= qubits <= kMaxOutputQubits).
[[nodiscard]] StateVector initial_state(unsigned qubits);

/// u |psi>. Throws DimensionError or NonUnitaryError.
[[nodiscard]] StateVector apply(const ComplexMatrix& u, const StateVector& psi);

[[nodiscard]] DecodedOutcome decode(const StateVector& psi,
                                    double tolerance = kBasisTolerance);

/// Decodes U(sum of inputs) |0...0>. Inputs may be any finite reals; Boolean
/// inputs reproduce the table the gate was synthesized from.
[[nodiscard]] DecodedOutcome evaluate_continuous(const QhcGate& gate,
                                                 std::span<const double> inputs,
                                                 double tolerance = kBasisTolerance);

/// Probability list behind any outcome (a one-hot list for basis outcomes).
[[nodiscard]] std::vector<double> outcome_probabilities(const DecodedOutcome& o,
                                                        std::size_t dim);

} // namespace qhc

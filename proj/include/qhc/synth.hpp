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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qhc/complex_linalg.hpp"
#include "qhc/gate_forms.hpp"

namespace qhc {

inline constexpr unsigned kMaxInputs = 16;
inline constexpr unsigned kMaxOutputQubits = 6;

/// Big-endian bit string of value, width characters long.
[[nodiscard]] std::string bit_label(std::uint64_t value, unsigned width);

/**
 * Total map from k-bit inputs to N-bit outputs. Inputs and outputs are
 * stored as integers read big-endian from their bit strings, so "01" is 1
 * and "10" is 2.
 */
class TruthTable {
  public:
    /// outputs[x] is the output for input x. Throws ValidationError unless
    /// outputs.size() == 2^input_count and every output fits in
    /// output_qubits bits.
    TruthTable(unsigned input_count, unsigned output_qubits,
               std::vector<std::uint32_t> outputs);

    [[nodiscard]] unsigned input_count() const noexcept { return inputs_; }
    [[nodiscard]] unsigned output_qubits() const noexcept { return qubits_; }
    [[nodiscard]] std::size_t row_count() const noexcept {
        return outputs_.size();
    }
    [[nodiscard]] std::uint32_t output(std::size_t input) const {
        return outputs_.at(input);
    }
    [[nodiscard]] std::span<const std::uint32_t> outputs() const noexcept {
        return outputs_;
    }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

  private:
    unsigned inputs_;
    unsigned qubits_;
    std::vector<std::uint32_t> outputs_;
};

/// Two-input adder table: weights 0, 1, 2 map to |00>, |01>, |11>.
[[nodiscard]] TruthTable half_adder_table();
/// Three-input adder table: weights 0..3 map to |00>, |01>, |10>, |11>.
[[nodiscard]] TruthTable full_adder_table();
/// Full-adder variant with input 110 sent to |11>; the U(2) column is |10>,
/// so a synthesized gate fails this table at exactly that row.
[[nodiscard]] TruthTable full_adder_table_main_text();
[[nodiscard]] TruthTable reference_table(GateLabel kind);

struct SymmetryProfile {
    bool is_symmetric = false;
    /// Output for each input Hamming weight 0..k; empty unless symmetric.
    std::vector<std::uint32_t> weight_outputs;
};

struct CyclePermutation {
    std::size_t dim = 0;
    /// Distinct basis indices, orbit[0] == 0.
    std::vector<std::size_t> orbit;

    [[nodiscard]] std::size_t length() const noexcept { return orbit.size(); }
    /// The permutation matrix sending orbit[k] to orbit[k+1 mod L].
    [[nodiscard]] ComplexMatrix matrix() const;
};

/// A synthesized gate: the cycle, its exact spectrum, and the family
/// U(s) = exp(-i s H) evaluated from that spectrum.
struct QhcGate {
    CyclePermutation cycle;
    SpectralDecomposition spectrum;
    unsigned input_count = 0;
    unsigned output_qubits = 0;

    [[nodiscard]] ComplexMatrix evaluate(double sum) const;
    [[nodiscard]] ComplexMatrix hamiltonian() const;
};

struct VerificationRow {
    std::uint32_t input = 0;
    std::uint32_t expected = 0;
    std::uint32_t obtained = 0;
    double deviation = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
};

[[nodiscard]] SymmetryProfile analyze_symmetry(const TruthTable& table);

/// Shortest cycle whose orbit, read from |0...0>, reproduces the
/// weight-indexed outputs. Throws NotSymmetric, InitialStateMismatch or
/// NonEmbeddable.
[[nodiscard]] CyclePermutation find_cycle(const SymmetryProfile& profile,
                                          unsigned output_qubits);

[[nodiscard]] QhcGate synthesize(const TruthTable& table);

/// Applies U(weight(x)) to |0...0> for every row and compares against the
/// expected basis vector entrywise. Failures are recorded, not thrown.
[[nodiscard]] VerificationReport verify(const QhcGate& gate,
                                        const TruthTable& table,
                                        double tolerance);

/// ceil(log2(number of distinct outputs)).
[[nodiscard]] unsigned qubit_count(const TruthTable& table);

} // namespace qhc

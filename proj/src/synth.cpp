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
#include "qhc/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "qhc/errors.hpp"

namespace qhc {

std::string bit_label(std::uint64_t value, unsigned width) {
    std::string out(width, '0');
    for (unsigned i = 0; i < width; ++i) {
        if ((value >> i) & 1u) {
            out[width - 1 - i] = '1';
        }
    }
    return out;
}

TruthTable::TruthTable(unsigned input_count, unsigned output_qubits,
                       std::vector<std::uint32_t> outputs)
    : inputs_(input_count), qubits_(output_qubits),
      outputs_(std::move(outputs)) {
    if (inputs_ == 0 || inputs_ > kMaxInputs) {
        throw ValidationError("input count " + std::to_string(inputs_) +
                              " outside [1, " + std::to_string(kMaxInputs) +
                              "]");
    }
    if (qubits_ == 0 || qubits_ > kMaxOutputQubits) {
        throw ValidationError("output qubit count " + std::to_string(qubits_) +
                              " outside [1, " +
                              std::to_string(kMaxOutputQubits) + "]");
    }
    const std::size_t rows = std::size_t{1} << inputs_;
    if (outputs_.size() != rows) {
        throw ValidationError("expected " + std::to_string(rows) +
                              " rows, got " + std::to_string(outputs_.size()));
    }
    const std::uint32_t limit = 1u << qubits_;
    for (std::size_t x = 0; x < rows; ++x) {
        if (outputs_[x] >= limit) {
            throw ValidationError("row " + bit_label(x, inputs_) +
                                  ": output does not fit in " +
                                  std::to_string(qubits_) + " bits");
        }
    }
}

namespace {

TruthTable weight_table(unsigned inputs, unsigned qubits,
                        const std::vector<std::uint32_t>& by_weight) {
    std::vector<std::uint32_t> outputs(std::size_t{1} << inputs);
    for (std::size_t x = 0; x < outputs.size(); ++x) {
        outputs[x] = by_weight[std::popcount(x)];
    }
    return {inputs, qubits, std::move(outputs)};
}

} // namespace

TruthTable half_adder_table() { return weight_table(2, 2, {0b00, 0b01, 0b11}); }

TruthTable full_adder_table() {
    return weight_table(3, 2, {0b00, 0b01, 0b10, 0b11});
}

TruthTable full_adder_table_main_text() {
    const auto base = full_adder_table();
    std::vector<std::uint32_t> outputs(base.outputs().begin(),
                                       base.outputs().end());
    outputs[0b110] = 0b11;
    return {3, 2, std::move(outputs)};
}

TruthTable reference_table(GateLabel kind) {
    return kind == GateLabel::HalfAdder ? half_adder_table()
                                        : full_adder_table();
}

ComplexMatrix CyclePermutation::matrix() const {
    std::vector<Complex> e(dim * dim);
    std::vector<bool> moved(dim, false);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        const std::size_t from = orbit[k];
        const std::size_t to = orbit[(k + 1) % orbit.size()];
        e[to * dim + from] = 1.0;
        moved[from] = true;
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (!moved[i]) {
            e[i * dim + i] = 1.0;
        }
    }
    return {dim, std::move(e)};
}

ComplexMatrix QhcGate::evaluate(double sum) const {
    return exp_from_spectrum(spectrum, sum);
}

ComplexMatrix QhcGate::hamiltonian() const { return generator(spectrum); }

SymmetryProfile analyze_symmetry(const TruthTable& table) {
    const unsigned k = table.input_count();
    std::vector<std::uint32_t> by_weight(k + 1);
    std::vector<bool> seen(k + 1, false);
    for (std::size_t x = 0; x < table.row_count(); ++x) {
        const auto w = static_cast<std::size_t>(std::popcount(x));
        if (!seen[w]) {
            seen[w] = true;
            by_weight[w] = table.output(x);
        } else if (by_weight[w] != table.output(x)) {
            return {};
        }
    }
    return {.is_symmetric = true, .weight_outputs = std::move(by_weight)};
}

CyclePermutation find_cycle(const SymmetryProfile& profile,
                            unsigned output_qubits) {
    if (!profile.is_symmetric || profile.weight_outputs.empty()) {
        throw NotSymmetric("outputs do not depend on input Hamming weight alone");
    }
    const auto& seq = profile.weight_outputs;
    if (seq.front() != 0) {
        throw InitialStateMismatch(
            "weight-0 output is " + bit_label(seq.front(), output_qubits) +
            ", but U(0) = I keeps |" + bit_label(0, output_qubits) + ">");
    }
    const std::size_t dim = std::size_t{1} << output_qubits;
    // A valid L never exceeds the sequence length: a repeat at positions
    // a < b forces L | (b - a), and without repeats L = k + 1 works.
    for (std::size_t len = 1; len <= seq.size(); ++len) {
        std::vector<std::size_t> orbit(seq.begin(), seq.begin() + len);
        std::set<std::size_t> distinct(orbit.begin(), orbit.end());
        if (distinct.size() != len) {
            break;
        }
        bool periodic = true;
        for (std::size_t s = len; s < seq.size() && periodic; ++s) {
            periodic = seq[s] == orbit[s % len];
        }
        if (periodic) {
            return {.dim = dim, .orbit = std::move(orbit)};
        }
    }
    std::string shown;
    for (auto v : seq) {
        shown += (shown.empty() ? "" : ",") + bit_label(v, output_qubits);
    }
    throw NonEmbeddable("weight outputs (" + shown +
                        ") do not trace a single cycle from |" +
                        bit_label(0, output_qubits) + ">");
}

QhcGate synthesize(const TruthTable& table) {
    auto cycle = find_cycle(analyze_symmetry(table), table.output_qubits());
    auto spectrum = cycle_spectrum(cycle.orbit, cycle.dim);
    return {.cycle = std::move(cycle),
            .spectrum = std::move(spectrum),
            .input_count = table.input_count(),
            .output_qubits = table.output_qubits()};
}

VerificationReport verify(const QhcGate& gate, const TruthTable& table,
                          double tolerance) {
    if (gate.input_count != table.input_count() ||
        gate.output_qubits != table.output_qubits()) {
        throw InvalidParameter("gate and table disagree on input or output width");
    }
    VerificationReport report;
    report.tolerance = tolerance;
    report.pass = true;

    // U(w) depends only on the weight, so evaluate it once per weight.
    std::vector<ComplexVector> columns(table.input_count() + 1);
    for (std::size_t w = 0; w < columns.size(); ++w) {
        columns[w] = gate.evaluate(static_cast<double>(w)).column(0);
    }

    for (std::size_t x = 0; x < table.row_count(); ++x) {
        const auto& amps = columns[std::popcount(x)];
        VerificationRow row;
        row.input = static_cast<std::uint32_t>(x);
        row.expected = table.output(x);
        double best = -1.0;
        for (std::size_t k = 0; k < amps.size(); ++k) {
            const double p = std::norm(amps[k]);
            if (p > best) {
                best = p;
                row.obtained = static_cast<std::uint32_t>(k);
            }
            const Complex target = k == row.expected ? 1.0 : 0.0;
            row.deviation = std::max(row.deviation, std::abs(amps[k] - target));
        }
        row.pass = row.obtained == row.expected && row.deviation <= tolerance;
        report.pass = report.pass && row.pass;
        report.max_deviation = std::max(report.max_deviation, row.deviation);
        report.rows.push_back(row);
    }
    return report;
}

unsigned qubit_count(const TruthTable& table) {
    const std::set<std::uint32_t> distinct(table.outputs().begin(),
                                           table.outputs().end());
    // ceil(log2(d)) == bit width of d - 1.
    return static_cast<unsigned>(std::bit_width(distinct.size() - 1));
}

} // namespace qhc

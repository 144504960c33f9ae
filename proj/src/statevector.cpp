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
#include "qhc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qhc/errors.hpp"

namespace qhc {

StateVector::StateVector(ComplexVector amplitudes)
    : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || amps_.size() > kMaxDim ||
        !std::has_single_bit(amps_.size())) {
        throw DimensionError("state length " + std::to_string(amps_.size()) +
                             " is not a power of two in [2, " +
                             std::to_string(kMaxDim) + "]");
    }
    for (auto z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidParameter("state amplitude is not finite");
        }
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw InvalidParameter("state is not normalized");
    }
}

unsigned StateVector::qubits() const noexcept {
    return static_cast<unsigned>(std::countr_zero(amps_.size()));
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    std::transform(amps_.begin(), amps_.end(), out.begin(),
                   [](Complex z) { return std::norm(z); });
    return out;
}

double StateVector::norm() const {
    double sq = 0.0;
    for (auto z : amps_) {
        sq += std::norm(z);
    }
    return std::sqrt(sq);
}

StateVector initial_state(unsigned qubits) {
    if (qubits == 0 || qubits > kMaxOutputQubits) {
        throw InvalidParameter("qubit count " + std::to_string(qubits) +
                               " outside [1, " +
                               std::to_string(kMaxOutputQubits) + "]");
    }
    ComplexVector amps(std::size_t{1} << qubits);
    amps[0] = 1.0;
    return StateVector(std::move(amps));
}

StateVector apply(const ComplexMatrix& u, const StateVector& psi) {
    if (u.dim() != psi.dim()) {
        throw DimensionError("apply: matrix dimension " +
                             std::to_string(u.dim()) + " vs state dimension " +
                             std::to_string(psi.dim()));
    }
    const double defect = unitarity_defect(u);
    if (defect > kApplyUnitarityTolerance) {
        throw NonUnitaryError("apply: unitarity defect " +
                              std::to_string(defect));
    }
    return StateVector(apply(u, psi.amplitudes()));
}

DecodedOutcome decode(const StateVector& psi, double tolerance) {
    auto probs = psi.probabilities();
    const auto top = std::max_element(probs.begin(), probs.end());
    if (*top >= 1.0 - tolerance) {
        const auto index = static_cast<std::size_t>(top - probs.begin());
        return BasisOutcome{index, bit_label(index, psi.qubits())};
    }
    return SuperposedOutcome{std::move(probs)};
}

DecodedOutcome evaluate_continuous(const QhcGate& gate,
                                   std::span<const double> inputs,
                                   double tolerance) {
    if (inputs.size() != gate.input_count) {
        throw InvalidParameter("expected " + std::to_string(gate.input_count) +
                               " inputs, got " + std::to_string(inputs.size()));
    }
    if (!std::all_of(inputs.begin(), inputs.end(),
                     [](double x) { return std::isfinite(x); })) {
        throw InvalidParameter("input is not finite");
    }
    const double sum = std::accumulate(inputs.begin(), inputs.end(), 0.0);
    return decode(apply(gate.evaluate(sum), initial_state(gate.output_qubits)),
                  tolerance);
}

std::vector<double> outcome_probabilities(const DecodedOutcome& o,
                                          std::size_t dim) {
    if (const auto* basis = std::get_if<BasisOutcome>(&o)) {
        std::vector<double> out(dim);
        out.at(basis->index) = 1.0;
        return out;
    }
    return std::get<SuperposedOutcome>(o).probabilities;
}

} // namespace qhc

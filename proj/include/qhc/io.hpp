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

// Document formats for the command-line front end.
//
// Truth table:
//   {"inputs": k, "output_qubits": N,
//    "rows": [{"in": "01", "out": "01"}, ...]}
// Matrix (JSON):
//   {"dim": d, "entries": [[{"re": x, "im": y}, ...], ...]}   row-major
// Matrix (CSV): one row per line, cells written as "a+bi".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qhc/complex_linalg.hpp"
#include "qhc/statevector.hpp"
#include "qhc/synth.hpp"

namespace qhc {

using Json = nlohmann::ordered_json;

enum class MatrixFormat { Json, Csv };

/// Throws ParseError for malformed documents and ValidationError for
/// missing, duplicate or mis-sized rows; messages name the offending row.
[[nodiscard]] TruthTable parse_truth_table(std::string_view text);
/// Rows are written in increasing input order.
[[nodiscard]] std::string emit_truth_table(const TruthTable& table);

[[nodiscard]] Json matrix_to_json(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix matrix_from_json(const Json& doc);
/// JSON output round-trips bit-exactly through parse_matrix_json.
[[nodiscard]] std::string emit_matrix(const ComplexMatrix& m,
                                      MatrixFormat format);
[[nodiscard]] ComplexMatrix parse_matrix_json(std::string_view text);
[[nodiscard]] MatrixFormat parse_matrix_format(std::string_view name);

enum class Scheme { QHC, ToffoliCnotHalf, ToffoliCnotFull, FredkinFull };

[[nodiscard]] std::string_view to_string(Scheme scheme);

struct ResourceReport {
    Scheme scheme = Scheme::QHC;
    unsigned qubits = 0;
    std::uint64_t hilbert_dim = 1;
    unsigned gate_count = 0;
    std::string citation;
};

/// QHC footprint of the table, followed by the published reversible-circuit
/// baselines when the table is the two- or three-input adder.
[[nodiscard]] std::vector<ResourceReport> resource_report(const TruthTable& table);

[[nodiscard]] Json to_json(const std::vector<ResourceReport>& reports);
[[nodiscard]] Json to_json(const VerificationReport& report,
                           const TruthTable& table);
[[nodiscard]] Json to_json(const DecodedOutcome& outcome);
[[nodiscard]] Json to_json(const CyclePermutation& cycle,
                           unsigned output_qubits);

} // namespace qhc

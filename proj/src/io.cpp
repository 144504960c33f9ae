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
#include "qhc/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "qhc/errors.hpp"

namespace qhc {

namespace {

std::string in_quotes(std::string_view s) { return "\"" + std::string(s) + "\""; }

unsigned read_count(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw ParseError(std::string("missing field ") + in_quotes(key));
    }
    if (!it->is_number_integer() || it->get<long long>() < 0) {
        throw ParseError(std::string("field ") + in_quotes(key) +
                         " must be a non-negative integer");
    }
    const auto value = it->get<long long>();
    if (value > 64) {
        throw ValidationError(std::string("field ") + in_quotes(key) + " = " +
                              std::to_string(value) + " is too large");
    }
    return static_cast<unsigned>(value);
}

std::string read_bits(const Json& row, const char* key, std::size_t index) {
    const std::string where = "rows[" + std::to_string(index) + "]";
    const auto it = row.find(key);
    if (it == row.end() || !it->is_string()) {
        throw ParseError(where + ": field " + in_quotes(key) +
                         " must be a bit string");
    }
    auto bits = it->get<std::string>();
    const auto bad = std::find_if(bits.begin(), bits.end(),
                                  [](char c) { return c != '0' && c != '1'; });
    if (bad != bits.end()) {
        throw ParseError(where + ": " + in_quotes(key) + " value " + in_quotes(bits) +
                         " contains non-bit character '" + *bad + "'");
    }
    return bits;
}

std::uint32_t bits_value(std::string_view bits) {
    std::uint32_t v = 0;
    for (char c : bits) {
        v = (v << 1u) | static_cast<std::uint32_t>(c == '1');
    }
    return v;
}

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

bool is_half_adder(const TruthTable& t) { return t == half_adder_table(); }
bool is_full_adder(const TruthTable& t) { return t == full_adder_table(); }

} // namespace

TruthTable parse_truth_table(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("truth table must be a JSON object");
    }
    const unsigned inputs = read_count(doc, "inputs");
    const unsigned qubits = read_count(doc, "output_qubits");
    if (inputs == 0 || inputs > kMaxInputs) {
        throw ValidationError("inputs = " + std::to_string(inputs) +
                              " outside [1, " + std::to_string(kMaxInputs) +
                              "]");
    }
    if (qubits == 0 || qubits > kMaxOutputQubits) {
        throw ValidationError("output_qubits = " + std::to_string(qubits) +
                              " outside [1, " +
                              std::to_string(kMaxOutputQubits) + "]");
    }
    const auto rows_it = doc.find("rows");
    if (rows_it == doc.end() || !rows_it->is_array()) {
        throw ParseError("field \"rows\" must be an array");
    }

    const std::size_t expected = std::size_t{1} << inputs;
    std::vector<std::optional<std::uint32_t>> outputs(expected);
    for (std::size_t i = 0; i < rows_it->size(); ++i) {
        const auto& row = (*rows_it)[i];
        const std::string where = "rows[" + std::to_string(i) + "]";
        if (!row.is_object()) {
            throw ParseError(where + ": must be an object");
        }
        const auto in = read_bits(row, "in", i);
        const auto out = read_bits(row, "out", i);
        if (in.size() != inputs) {
            throw ValidationError(where + ": input " + in_quotes(in) + " has " +
                                  std::to_string(in.size()) +
                                  " bits, expected " + std::to_string(inputs));
        }
        if (out.size() != qubits) {
            throw ValidationError(where + ": output " + in_quotes(out) + " has " +
                                  std::to_string(out.size()) +
                                  " bits, expected " + std::to_string(qubits));
        }
        auto& slot = outputs[bits_value(in)];
        if (slot) {
            throw ValidationError(where + ": duplicate input " + in_quotes(in));
        }
        slot = bits_value(out);
    }

    std::vector<std::uint32_t> values(expected);
    for (std::size_t x = 0; x < expected; ++x) {
        if (!outputs[x]) {
            throw ValidationError("missing row for input " +
                                  in_quotes(bit_label(x, inputs)));
        }
        values[x] = *outputs[x];
    }
    return {inputs, qubits, std::move(values)};
}

std::string emit_truth_table(const TruthTable& table) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < table.row_count(); ++x) {
        rows.push_back({{"in", bit_label(x, table.input_count())},
                        {"out", bit_label(table.output(x),
                                          table.output_qubits())}});
    }
    Json doc = {{"inputs", table.input_count()},
                {"output_qubits", table.output_qubits()},
                {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
        }
        entries.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& doc) {
    try {
        const auto dim = doc.at("dim").get<std::size_t>();
        const auto& rows = doc.at("entries");
        if (!rows.is_array() || rows.size() != dim) {
            throw ParseError("matrix: expected " + std::to_string(dim) +
                             " rows");
        }
        std::vector<Complex> entries;
        entries.reserve(dim * dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (!rows[r].is_array() || rows[r].size() != dim) {
                throw ParseError("matrix: row " + std::to_string(r) +
                                 " must hold " + std::to_string(dim) +
                                 " entries");
            }
            for (const auto& cell : rows[r]) {
                entries.emplace_back(cell.at("re").get<double>(),
                                     cell.at("im").get<double>());
            }
        }
        return {dim, std::move(entries)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

std::string emit_matrix(const ComplexMatrix& m, MatrixFormat format) {
    if (format == MatrixFormat::Json) {
        return matrix_to_json(m).dump() + "\n";
    }
    std::string out;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const Complex z = m(r, c);
            if (c > 0) {
                out += ',';
            }
            out += shortest(z.real());
            if (!std::signbit(z.imag())) {
                out += '+';
            }
            out += shortest(z.imag());
            out += 'i';
        }
        out += '\n';
    }
    return out;
}

ComplexMatrix parse_matrix_json(std::string_view text) {
    try {
        return matrix_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix: not valid JSON: ") + e.what());
    }
}

MatrixFormat parse_matrix_format(std::string_view name) {
    if (name == "json") {
        return MatrixFormat::Json;
    }
    if (name == "csv") {
        return MatrixFormat::Csv;
    }
    throw InvalidParameter("unknown matrix format " + in_quotes(name));
}

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
    case Scheme::QHC:
        return "QHC";
    case Scheme::ToffoliCnotHalf:
        return "ToffoliCnotHalf";
    case Scheme::ToffoliCnotFull:
        return "ToffoliCnotFull";
    case Scheme::FredkinFull:
        return "FredkinFull";
    }
    return "unknown";
}

std::vector<ResourceReport> resource_report(const TruthTable& table) {
    const unsigned n = qubit_count(table);
    std::vector<ResourceReport> out;
    out.push_back({.scheme = Scheme::QHC,
                   .qubits = n,
                   .hilbert_dim = std::uint64_t{1} << n,
                   .gate_count = 1,
                   .citation = "single parameterized unitary on ceil(log2 O) "
                               "qubits"});
    if (is_half_adder(table)) {
        out.push_back({.scheme = Scheme::ToffoliCnotHalf,
                       .qubits = 3,
                       .hilbert_dim = 8,
                       .gate_count = 2,
                       .citation = "Vedral et al., PRA 54, 147 (1996)"});
    } else if (is_full_adder(table)) {
        out.push_back({.scheme = Scheme::ToffoliCnotFull,
                       .qubits = 4,
                       .hilbert_dim = 16,
                       .gate_count = 4,
                       .citation = "Vedral et al., PRA 54, 147 (1996)"});
        out.push_back({.scheme = Scheme::FredkinFull,
                       .qubits = 5,
                       .hilbert_dim = 32,
                       .gate_count = 5,
                       .citation = "Moutinho et al., PRX Energy 2, 033002 (2023)"});
    }
    return out;
}

Json to_json(const std::vector<ResourceReport>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) {
        out.push_back({{"scheme", to_string(r.scheme)},
                       {"qubits", r.qubits},
                       {"hilbert_dim", r.hilbert_dim},
                       {"gate_count", r.gate_count},
                       {"citation", r.citation}});
    }
    return out;
}

Json to_json(const VerificationReport& report, const TruthTable& table) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back(
            {{"in", bit_label(row.input, table.input_count())},
             {"expected", bit_label(row.expected, table.output_qubits())},
             {"obtained", bit_label(row.obtained, table.output_qubits())},
             {"deviation", row.deviation},
             {"pass", row.pass}});
    }
    return {{"pass", report.pass},
            {"max_deviation", report.max_deviation},
            {"tolerance", report.tolerance},
            {"rows", std::move(rows)}};
}

Json to_json(const DecodedOutcome& outcome) {
    if (const auto* basis = std::get_if<BasisOutcome>(&outcome)) {
        return {{"kind", "basis"},
                {"label", basis->label},
                {"index", basis->index}};
    }
    return {{"kind", "superposed"},
            {"probabilities",
             std::get<SuperposedOutcome>(outcome).probabilities}};
}

Json to_json(const CyclePermutation& cycle, unsigned output_qubits) {
    Json labels = Json::array();
    for (auto idx : cycle.orbit) {
        labels.push_back(bit_label(idx, output_qubits));
    }
    return {{"dim", cycle.dim},
            {"length", cycle.length()},
            {"orbit", cycle.orbit},
            {"orbit_labels", std::move(labels)}};
}

} // namespace qhc

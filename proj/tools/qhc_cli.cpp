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
// qhc: synthesize, simulate, verify and cost Hamiltonian-computing gates.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhc/errors.hpp"
#include "qhc/gate_forms.hpp"
#include "qhc/io.hpp"
#include "qhc/statevector.hpp"
#include "qhc/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qhc::ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw qhc::ParseError("cannot write " + path);
    }
}

std::optional<qhc::GateLabel> builtin_gate(const std::string& name) {
    if (name == "half-adder") {
        return qhc::GateLabel::HalfAdder;
    }
    if (name == "full-adder") {
        return qhc::GateLabel::FullAdder;
    }
    return std::nullopt;
}

std::vector<double> parse_inputs(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw qhc::ParseError("--inputs: cannot read \"" + item +
                                  "\" as a real number");
        }
        out.push_back(v);
    }
    return out;
}

struct SynthOptions {
    std::string table;
    std::string emit_h;
    std::optional<double> emit_u;
    std::string format = "json";
    double tolerance = qhc::kCrossFormTolerance;
};

int run_synth(const SynthOptions& opt) {
    const auto format = qhc::parse_matrix_format(opt.format);
    const auto table = qhc::parse_truth_table(read_file(opt.table));
    const auto gate = qhc::synthesize(table);
    const auto report = qhc::verify(gate, table, opt.tolerance);

    qhc::Json out = {
        {"inputs", table.input_count()},
        {"output_qubits", table.output_qubits()},
        {"qubits_required", qhc::qubit_count(table)},
        {"cycle", qhc::to_json(gate.cycle, table.output_qubits())},
        {"eigenangles", gate.spectrum.eigenangles},
        {"hermiticity_defect", qhc::hermiticity_defect(gate.hamiltonian())},
        {"verification", qhc::to_json(report, table)},
    };
    if (!opt.emit_h.empty()) {
        write_file(opt.emit_h, qhc::emit_matrix(gate.hamiltonian(), format));
        out["hamiltonian_file"] = opt.emit_h;
    }
    if (opt.emit_u) {
        const auto u = gate.evaluate(*opt.emit_u);
        out["u_sum"] = *opt.emit_u;
        if (format == qhc::MatrixFormat::Json) {
            out["u"] = qhc::matrix_to_json(u);
        } else {
            out["u_csv"] = qhc::emit_matrix(u, format);
        }
    }
    std::cout << out.dump(2) << "\n";
    if (!report.pass) {
        std::cerr << "verification failed: max deviation "
                  << report.max_deviation << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

struct SimulateOptions {
    std::string gate;
    std::string inputs;
    double basis_tolerance = qhc::kBasisTolerance;
};

int run_simulate(const SimulateOptions& opt) {
    std::optional<qhc::TruthTable> table;
    if (const auto label = builtin_gate(opt.gate)) {
        table = qhc::reference_table(*label);
    } else {
        table = qhc::parse_truth_table(read_file(opt.gate));
    }
    const auto gate = qhc::synthesize(*table);
    const auto inputs = parse_inputs(opt.inputs);
    const auto outcome =
        qhc::evaluate_continuous(gate, inputs, opt.basis_tolerance);

    double sum = 0.0;
    for (double x : inputs) {
        sum += x;
    }
    const qhc::Json out = {
        {"gate", opt.gate},
        {"inputs", inputs},
        {"sum", sum},
        {"outcome", qhc::to_json(outcome)},
        {"probabilities",
         qhc::outcome_probabilities(
             outcome, std::size_t{1} << gate.output_qubits)},
    };
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct VerifyOptions {
    std::string gate;
    std::size_t grid = 101;
    double tolerance = qhc::kCrossFormTolerance;
};

int run_verify(const VerifyOptions& opt) {
    const auto label = builtin_gate(opt.gate);
    if (!label) {
        throw qhc::InvalidParameter("--gate must be half-adder or full-adder");
    }
    const auto table = qhc::reference_table(*label);

    const double spectral = qhc::cross_validate(*label, opt.grid);

    // Closed form on every Boolean input, against the truth table.
    double closed_worst = 0.0;
    for (std::size_t x = 0; x < table.row_count(); ++x) {
        const auto u = qhc::closed_form_at_sum(
            *label, static_cast<double>(std::popcount(x)));
        const auto col = u.column(0);
        for (std::size_t k = 0; k < col.size(); ++k) {
            const qhc::Complex target = k == table.output(x) ? 1.0 : 0.0;
            closed_worst = std::max(closed_worst, std::abs(col[k] - target));
        }
    }

    const auto gate = qhc::synthesize(table);
    const auto report = qhc::verify(gate, table, opt.tolerance);

    const double worst = std::max({spectral, closed_worst, report.max_deviation});
    const bool pass = worst <= opt.tolerance && report.pass;
    const qhc::Json out = {
        {"gate", opt.gate},
        {"grid", opt.grid},
        {"tolerance", opt.tolerance},
        {"cycle_length", qhc::cycle_length(*label)},
        {"closed_form_vs_spectral", spectral},
        {"closed_form_truth_table", closed_worst},
        {"synthesized", qhc::to_json(report, table)},
        {"max_deviation", worst},
        {"pass", pass},
    };
    std::cout << out.dump(2) << "\n";
    return pass ? kExitOk : kExitFailed;
}

int run_report(const std::string& path) {
    const auto table = qhc::parse_truth_table(read_file(path));
    const qhc::Json out = {
        {"inputs", table.input_count()},
        {"output_qubits", table.output_qubits()},
        {"resources", qhc::to_json(qhc::resource_report(table))},
    };
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-computing gate synthesis and verification"};
    app.require_subcommand(1);

    SynthOptions synth;
    auto* synth_cmd = app.add_subcommand("synth", "Synthesize a gate from a truth table");
    synth_cmd->add_option("--table", synth.table, "Truth-table JSON file")->required();
    synth_cmd->add_option("--emit-h", synth.emit_h, "Write the Hermitian generator to FILE");
    synth_cmd->add_option("--emit-u", synth.emit_u, "Include U(SUM) in the output");
    synth_cmd->add_option("--emit", synth.format, "Matrix format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    synth_cmd->add_option("--tolerance", synth.tolerance, "Verification tolerance");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Evaluate a gate on real-valued inputs");
    sim_cmd->add_option("--gate", sim.gate, "half-adder, full-adder, or a truth-table file")
        ->required();
    sim_cmd->add_option("--inputs", sim.inputs, "Comma-separated real inputs")->required();
    sim_cmd->add_option("--basis-tolerance", sim.basis_tolerance,
                        "Probability slack for reporting a basis outcome");

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check a built-in gate against its closed form");
    verify_cmd->add_option("--gate", ver.gate, "half-adder or full-adder")
        ->required()
        ->check(CLI::IsMember({"half-adder", "full-adder"}));
    verify_cmd->add_option("--grid", ver.grid, "Grid points over one period")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
    verify_cmd->add_option("--tolerance", ver.tolerance, "Maximum entrywise deviation");

    std::string report_table;
    auto* report_cmd = app.add_subcommand("report", "Compare qubit and gate resources");
    report_cmd->add_option("--table", report_table, "Truth-table JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*synth_cmd) {
            return run_synth(synth);
        }
        if (*sim_cmd) {
            return run_simulate(sim);
        }
        if (*verify_cmd) {
            return run_verify(ver);
        }
        return run_report(report_table);
    } catch (const qhc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

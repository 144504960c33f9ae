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
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <doctest.h>

#include "oracles.hpp"
#include "qhc/errors.hpp"
#include "qhc/gate_forms.hpp"
#include "qhc/synth.hpp"

using namespace qhc;

namespace {

TruthTable table_from_weights(unsigned inputs, unsigned qubits,
                              const std::vector<std::uint32_t>& by_weight) {
    std::vector<std::uint32_t> out(std::size_t{1} << inputs);
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = by_weight[std::popcount(x)];
    }
    return {inputs, qubits, out};
}

} // namespace

TEST_CASE("truth table validation") {
    CHECK_THROWS_AS(TruthTable(2, 2, {0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(TruthTable(1, 1, {0, 2}), ValidationError);
    CHECK_THROWS_AS(TruthTable(0, 1, {0}), ValidationError);
    CHECK_THROWS_AS(TruthTable(1, 7, {0, 0}), ValidationError);
    CHECK(bit_label(1, 2) == "01");
    CHECK(bit_label(2, 2) == "10");
    CHECK(bit_label(5, 4) == "0101");
}

TEST_CASE("reference tables") {
    const auto half = half_adder_table();
    CHECK(half.outputs().size() == 4);
    CHECK(std::vector<std::uint32_t>(half.outputs().begin(), half.outputs().end()) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b01, 0b11});
    const auto full = full_adder_table();
    CHECK(std::vector<std::uint32_t>(full.outputs().begin(), full.outputs().end()) ==
          std::vector<std::uint32_t>{0b00, 0b01, 0b01, 0b10, 0b01, 0b10, 0b10, 0b11});
    const auto main_text = full_adder_table_main_text();
    CHECK(main_text.output(0b110) == 0b11);
    CHECK(main_text.output(0b101) == 0b10);
}

TEST_CASE("analyze_symmetry") {
    const auto half = analyze_symmetry(half_adder_table());
    CHECK(half.is_symmetric);
    CHECK(half.weight_outputs == std::vector<std::uint32_t>{0b00, 0b01, 0b11});

    const auto full = analyze_symmetry(full_adder_table());
    CHECK(full.is_symmetric);
    CHECK(full.weight_outputs == std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});

    const auto skew = analyze_symmetry(TruthTable(2, 2, {0b00, 0b01, 0b10, 0b11}));
    CHECK(!skew.is_symmetric);
    CHECK(skew.weight_outputs.empty());

    CHECK(!analyze_symmetry(full_adder_table_main_text()).is_symmetric);
}

TEST_CASE("find_cycle") {
    const auto half = find_cycle(analyze_symmetry(half_adder_table()), 2);
    CHECK(half.orbit == std::vector<std::size_t>{0, 1, 3});
    CHECK(half.dim == 4);

    const auto full = find_cycle(analyze_symmetry(full_adder_table()), 2);
    CHECK(full.orbit == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(full.matrix() == appendix_R());

    const SymmetryProfile stuck{true, {0b00, 0b01, 0b01}};
    CHECK_THROWS_AS((void)find_cycle(stuck, 2), NonEmbeddable);

    const SymmetryProfile shifted{true, {0b01, 0b00}};
    CHECK_THROWS_AS((void)find_cycle(shifted, 2), InitialStateMismatch);

    CHECK_THROWS_AS((void)find_cycle(SymmetryProfile{}, 2), NotSymmetric);

    // Periodic sequences pick the shortest cycle.
    const SymmetryProfile toggling{true, {0, 1, 0, 1}};
    CHECK(find_cycle(toggling, 1).orbit == std::vector<std::size_t>{0, 1});
    const SymmetryProfile constant{true, {0, 0, 0}};
    CHECK(find_cycle(constant, 2).orbit == std::vector<std::size_t>{0});
}

TEST_CASE("synthesize reproduces the closed forms") {
    const auto half = synthesize(half_adder_table());
    const auto full = synthesize(full_adder_table());
    for (int s = 0; s <= 3; ++s) {
        CHECK(max_abs_diff(half.evaluate(s), half_adder_closed_form(s, 0)) <= 1e-9);
        CHECK(max_abs_diff(full.evaluate(s), full_adder_closed_form(s, 0, 0)) <= 1e-9);
    }
    CHECK(hermiticity_defect(half.hamiltonian()) <= 1e-12);
    CHECK(max_abs_diff(full.hamiltonian(), appendix_H()) <= 1e-12);
    CHECK(max_abs_diff(full.evaluate(1.0), full.cycle.matrix()) <= 1e-12);

    // Constant-zero table collapses to the identity family.
    const auto constant = synthesize(TruthTable(2, 1, {0, 0, 0, 0}));
    CHECK(constant.cycle.length() == 1);
    CHECK(max_abs_diff(constant.evaluate(0.7), ComplexMatrix::identity(2)) <= 1e-12);

    CHECK_THROWS_AS((void)synthesize(TruthTable(2, 2, {0, 1, 2, 3})), NotSymmetric);
    CHECK_THROWS_AS((void)synthesize(TruthTable(1, 1, {1, 0})), InitialStateMismatch);
    CHECK_THROWS_AS((void)synthesize(table_from_weights(2, 2, {0, 1, 1})),
                    NonEmbeddable);
}

TEST_CASE("verify") {
    const auto half = synthesize(half_adder_table());
    const auto report = verify(half, half_adder_table(), 1e-9);
    CHECK(report.pass);
    CHECK(report.max_deviation <= 1e-12);
    CHECK(report.rows.size() == 4);

    const auto full = synthesize(full_adder_table());
    CHECK(verify(full, full_adder_table(), 1e-9).pass);

    const auto altered = verify(full, full_adder_table_main_text(), 1e-9);
    CHECK(!altered.pass);
    for (const auto& row : altered.rows) {
        CHECK(row.pass == (row.input != 0b110));
    }
    CHECK(altered.rows[0b110].obtained == 0b10);
    CHECK(altered.rows[0b110].expected == 0b11);

    CHECK_THROWS_AS((void)verify(full, half_adder_table(), 1e-9), InvalidParameter);
}

TEST_CASE("qubit_count") {
    CHECK(qubit_count(half_adder_table()) == 2);
    CHECK(qubit_count(full_adder_table()) == 2);
    CHECK(qubit_count(TruthTable(2, 2, {0, 0, 0, 0})) == 0);
    CHECK(qubit_count(TruthTable(2, 3, {0, 1, 2, 3})) == 2);
    CHECK(qubit_count(TruthTable(3, 3, {0, 1, 2, 3, 4, 0, 0, 0})) == 3);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const unsigned k = 1 + rng() % 4;
        const unsigned n = 1 + rng() % 4;
        std::vector<std::uint32_t> out(std::size_t{1} << k);
        for (auto& v : out) {
            v = static_cast<std::uint32_t>(rng() % (1u << n));
        }
        const std::set<std::uint32_t> distinct(out.begin(), out.end());
        unsigned expected = 0;
        while ((std::size_t{1} << expected) < distinct.size()) {
            ++expected;
        }
        CHECK(qubit_count(TruthTable(k, n, out)) == expected);
    }
}

TEST_CASE("synthesis agrees with exhaustive permutation search") {
    std::size_t embeddable = 0;
    std::size_t rejected = 0;
    for (unsigned n = 1; n <= 2; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (unsigned k = 1; k <= 3; ++k) {
            for (const auto& seq : oracle::all_sequences(k + 1, 1u << n)) {
                const auto table = table_from_weights(k, n, seq);
                const auto perms = oracle::matching_permutations(seq, dim);
                bool ok = true;
                std::optional<QhcGate> gate;
                try {
                    gate = synthesize(table);
                } catch (const NonEmbeddable&) {
                    ok = false;
                } catch (const InitialStateMismatch&) {
                    ok = false;
                }
                CHECK(ok == !perms.empty());
                if (!ok) {
                    ++rejected;
                    continue;
                }
                ++embeddable;
                CHECK(verify(*gate, table, 1e-9).pass);
                const auto u1 = gate->evaluate(1.0);
                const bool matches_one = std::any_of(
                    perms.begin(), perms.end(), [&](const auto& p) {
                        return max_abs_diff(u1, oracle::permutation_matrix(p)) <=
                               1e-10;
                    });
                CHECK(matches_one);
            }
        }
    }
    CHECK(embeddable > 0);
    CHECK(rejected > 0);
}

TEST_CASE("synthesized gates are periodic with principal spectra") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    const double pi = std::numbers::pi;
    for (const auto& table :
         {half_adder_table(), full_adder_table(),
          table_from_weights(3, 3, {0, 5, 2, 7}), table_from_weights(3, 2, {0, 3, 0, 3})}) {
        const auto gate = synthesize(table);
        const auto len = static_cast<double>(gate.cycle.length());
        for (double phi : gate.spectrum.eigenangles) {
            CHECK(phi > -pi);
            CHECK(phi <= pi);
        }
        CHECK(hermiticity_defect(gate.hamiltonian()) <= 1e-12);
        for (int t = 0; t < 10; ++t) {
            const double s = dist(rng);
            CHECK(max_abs_diff(gate.evaluate(s + len), gate.evaluate(s)) <= 1e-10);
        }
    }
}

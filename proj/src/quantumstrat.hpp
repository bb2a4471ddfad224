/*
 * Copyright 2026 The ptgames authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PTGAMES_QUANTUMSTRAT_HPP
#define PTGAMES_QUANTUMSTRAT_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "game.hpp"
#include "magicsquare.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// The 2-ebit quantum strategy for the magic-square game.
//
// Alice holds qubits (a, c), Bob holds (b, d); they share a fixed 4-term
// state. Each party applies one of three local 4x4 unitaries selected by its
// input, measures both qubits in the computational basis, and maps the two
// outcome bits to a parity-padded row/column. Exact small-state simulation:
// amplitudes are indexed by bits (a, c, b, d) with a most significant, and
// matrices act on column vectors in basis order |00>, |01>, |10>, |11>.
// ---------------------------------------------------------------------------

using Amplitude = std::complex<double>;

struct JointState {
    // amplitudes[8a + 4c + 2b + d]
    std::array<Amplitude, 16> amplitudes{};
    double norm_squared() const;
};

struct LocalUnitary {
    // Row-major 4x4.
    std::array<Amplitude, 16> entries{};

    Amplitude at(int row, int col) const { return entries[4 * row + col]; }
    Amplitude& at(int row, int col) { return entries[4 * row + col]; }
    // Conjugate-transpose product equals identity entrywise within tol.
    bool is_unitary(double tol = 1e-12) const;
};

struct OutcomeDistribution {
    // probabilities[8*a1 + 4*a2 + 2*b1 + b2] with (a1,a2) Alice's outcome
    // bits and (b1,b2) Bob's.
    std::array<double, 16> probabilities{};
    double total() const;
};

// Outcomes below this probability are treated as exact zeros; genuine
// amplitudes here are halves and 1/sqrt(2), so numerical noise sits many
// orders of magnitude lower.
inline constexpr double kSupportThreshold = 1e-9;

enum class Party { Alice, Bob };

// The shared state: +1/2 on |00>|11> and |11>|00>, -1/2 on |01>|10> and
// |10>|01>.
JointState initial_state();

// The six 4x4 operators, transcribed verbatim: U1..U3 for Alice, V1..V3 for
// Bob (index 1..3).
LocalUnitary paper_unitary(Party party, int index);

// Apply `alice` on qubits (a,c) and `bob` on (b,d) of the shared state and
// return the squared magnitudes per computational-basis outcome.
OutcomeDistribution joint_distribution_with(const LocalUnitary& alice, const LocalUnitary& bob);
// Same with the built-in operators selected by the inputs (1..3).
OutcomeDistribution joint_distribution(int x_a, int x_b);

// Row (a1, a2, a1^a2); column (b1, b2, b1^b2^1).
MagicAnswer outcome_to_answers_n3(int a1, int a2, int b1, int b2);

// For all 9 input pairs, every outcome with probability above the support
// threshold must map to a winning answer. Cases count (input pair, supported
// outcome) combinations.
VerificationReport quantum_verify_n3();
// Same check with substituted operator triples (mutation and erratum hooks).
VerificationReport quantum_verify_n3_with(const std::array<LocalUnitary, 3>& alice_ops,
                                          const std::array<LocalUnitary, 3>& bob_ops);

// Odd n >= 5. Low inputs (<= n-3) use the fixed low-index operator; the last
// three inputs map onto the 3x3 strategy via index - n + 3. Answers: low
// Alice inputs give the fixed rows (1,..,1,0,0,0) for input 1 and all-zero
// otherwise; low Bob inputs give the fixed column (1,0,...,0); high inputs
// pad the 3x3 outcome answers with leading zeros.
MagicAnswer quantum_round_odd(int n, int x_a, int x_b, const std::array<int, 4>& outcome);

// Exhaustive over all n^2 input pairs and every supported outcome of the
// case-appropriate distribution. alice_low / bob_low choose the fixed
// operator applied on low inputs (any of 1..3 must preserve all-win).
VerificationReport quantum_verify_odd(int n, int alice_low = 1, int bob_low = 1);

// Seeded sampling round after round; n = 3 or odd n >= 5.
SimulationStats quantum_simulate(int n, long long rounds, std::uint64_t seed);

} // namespace ptg

#endif

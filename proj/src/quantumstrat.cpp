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
#include "quantumstrat.hpp"

#include <cmath>
#include <random>

#include "errors.hpp"

namespace ptg {

namespace {

constexpr Amplitude kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_operator_index(int index) {
    if (index < 1 || index > 3)
        throw Error(ErrorKind::InvalidArgument,
                    "operator index must be 1..3, got " + std::to_string(index));
}

std::string outcome_label(int a1, int a2, int b1, int b2, double p) {
    return "outcome(a1=" + std::to_string(a1) + ",a2=" + std::to_string(a2) +
           ",b1=" + std::to_string(b1) + ",b2=" + std::to_string(b2) +
           ") p=" + std::to_string(p);
}

} // namespace

double JointState::norm_squared() const {
    double sum = 0.0;
    for (const auto& amp : amplitudes) sum += std::norm(amp);
    return sum;
}

bool LocalUnitary::is_unitary(double tol) const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Amplitude acc{0.0, 0.0};
            for (int k = 0; k < 4; ++k) acc += std::conj(at(k, i)) * at(k, j);
            const Amplitude expected = (i == j) ? Amplitude{1.0, 0.0} : Amplitude{0.0, 0.0};
            if (std::abs(acc - expected) > tol) return false;
        }
    return true;
}

double OutcomeDistribution::total() const {
    double sum = 0.0;
    for (double p : probabilities) sum += p;
    return sum;
}

JointState initial_state() {
    JointState state;
    state.amplitudes[0b0011] = {0.5, 0.0};  // +|00>_ac |11>_bd
    state.amplitudes[0b0110] = {-0.5, 0.0}; // -|01>_ac |10>_bd
    state.amplitudes[0b1001] = {-0.5, 0.0}; // -|10>_ac |01>_bd
    state.amplitudes[0b1100] = {0.5, 0.0};  // +|11>_ac |00>_bd
    return state;
}

LocalUnitary paper_unitary(Party party, int index) {
    require_operator_index(index);
    LocalUnitary u;
    if (party == Party::Alice) {
        switch (index) {
            case 1: {
                const Amplitude m[16] = {kI, 0, 0, 1,  0, -kI, 1, 0,
                                         0,  kI, 1, 0, 1, 0,  0, kI};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * kInvSqrt2;
                break;
            }
            case 2: {
                const Amplitude m[16] = {kI,  1, 1,  kI,  -kI, 1, -1, kI,
                                         kI,  1, -1, -kI, -kI, 1, 1,  -kI};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * 0.5;
                break;
            }
            case 3: {
                const Amplitude m[16] = {-1, -1, -1, 1,  1, 1,  -1, 1,
                                         1,  -1, 1,  1,  1, -1, -1, -1};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * 0.5;
                break;
            }
        }
    } else {
        switch (index) {
            case 1: {
                const Amplitude m[16] = {kI,  -kI, 1,   1, -kI, -kI, 1, -1,
                                         1,   1,   -kI, kI, -kI, kI, 1, 1};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * 0.5;
                break;
            }
            case 2: {
                const Amplitude m[16] = {-1, kI,  1, kI,  1,  kI,  1, -kI,
                                         1,  -kI, 1, kI,  -1, -kI, 1, -kI};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * 0.5;
                break;
            }
            case 3: {
                const Amplitude m[16] = {1, 0, 0, 1,  -1, 0, 0,  1,
                                         0, 1, 1, 0,  0,  1, -1, 0};
                for (int i = 0; i < 16; ++i) u.entries[i] = m[i] * kInvSqrt2;
                break;
            }
        }
    }
    return u;
}

OutcomeDistribution joint_distribution_with(const LocalUnitary& alice, const LocalUnitary& bob) {
    const JointState psi = initial_state();
    OutcomeDistribution dist;
    // View the state as a 4x4 matrix Psi[ac][bd]; the transformed amplitudes
    // are (alice * Psi * bob^T)[ac][bd].
    for (int ac = 0; ac < 4; ++ac)
        for (int bd = 0; bd < 4; ++bd) {
            Amplitude out{0.0, 0.0};
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    out += alice.at(ac, k) * bob.at(bd, l) * psi.amplitudes[4 * k + l];
            dist.probabilities[4 * ac + bd] = std::norm(out);
        }
    return dist;
}

OutcomeDistribution joint_distribution(int x_a, int x_b) {
    require_operator_index(x_a);
    require_operator_index(x_b);
    return joint_distribution_with(paper_unitary(Party::Alice, x_a),
                                   paper_unitary(Party::Bob, x_b));
}

MagicAnswer outcome_to_answers_n3(int a1, int a2, int b1, int b2) {
    return {{a1, a2, a1 ^ a2}, {b1, b2, b1 ^ b2 ^ 1}};
}

VerificationReport quantum_verify_n3_with(const std::array<LocalUnitary, 3>& alice_ops,
                                          const std::array<LocalUnitary, 3>& bob_ops) {
    const auto game = magic_game_spec(3);
    VerificationReport report;
    report.game = game.name;
    report.parameters["n"] = "3";
    report.parameters["strategy"] = "quantum";
    for (int x_a = 1; x_a <= 3; ++x_a)
        for (int x_b = 1; x_b <= 3; ++x_b) {
            const auto dist = joint_distribution_with(alice_ops[x_a - 1], bob_ops[x_b - 1]);
            for (int idx = 0; idx < 16; ++idx) {
                const double p = dist.probabilities[idx];
                if (p <= kSupportThreshold) continue;
                const int a1 = (idx >> 3) & 1, a2 = (idx >> 2) & 1;
                const int b1 = (idx >> 1) & 1, b2 = idx & 1;
                const auto answer = outcome_to_answers_n3(a1, a2, b1, b2);
                const auto violated = game.win_violation(x_a, x_b, answer.row, answer.col);
                ++report.cases_total;
                if (violated.empty()) {
                    ++report.cases_won;
                } else {
                    report.failures.push_back({game.show_inputs(x_a, x_b),
                                               outcome_label(a1, a2, b1, b2, p),
                                               game.show_outputs(answer.row, answer.col),
                                               violated});
                }
            }
        }
    return report;
}

VerificationReport quantum_verify_n3() {
    return quantum_verify_n3_with({paper_unitary(Party::Alice, 1), paper_unitary(Party::Alice, 2),
                                   paper_unitary(Party::Alice, 3)},
                                  {paper_unitary(Party::Bob, 1), paper_unitary(Party::Bob, 2),
                                   paper_unitary(Party::Bob, 3)});
}

namespace {

void require_odd_ge5(int n) {
    if (n < 5 || n % 2 == 0)
        throw Error(ErrorKind::InvalidArgument,
                    "odd-size quantum rounds need odd n >= 5, got " + std::to_string(n));
}

std::vector<int> low_alice_row(int n, int x_a) {
    std::vector<int> row(n, 0);
    if (x_a == 1)
        for (int j = 0; j < n - 3; ++j) row[j] = 1;
    return row;
}

std::vector<int> low_bob_col(int n) {
    std::vector<int> col(n, 0);
    col[0] = 1;
    return col;
}

std::vector<int> padded_row(int n, int a1, int a2) {
    std::vector<int> row(n, 0);
    row[n - 3] = a1;
    row[n - 2] = a2;
    row[n - 1] = a1 ^ a2;
    return row;
}

std::vector<int> padded_col(int n, int b1, int b2) {
    std::vector<int> col(n, 0);
    col[n - 3] = b1;
    col[n - 2] = b2;
    col[n - 1] = b1 ^ b2 ^ 1;
    return col;
}

} // namespace

MagicAnswer quantum_round_odd(int n, int x_a, int x_b, const std::array<int, 4>& outcome) {
    require_odd_ge5(n);
    if (x_a < 1 || x_a > n || x_b < 1 || x_b > n)
        throw Error(ErrorKind::InvalidArgument, "inputs out of range 1.." + std::to_string(n));
    const bool alice_low = x_a <= n - 3;
    const bool bob_low = x_b <= n - 3;
    MagicAnswer answer;
    answer.row = alice_low ? low_alice_row(n, x_a) : padded_row(n, outcome[0], outcome[1]);
    answer.col = bob_low ? low_bob_col(n) : padded_col(n, outcome[2], outcome[3]);
    return answer;
}

VerificationReport quantum_verify_odd(int n, int alice_low, int bob_low) {
    require_odd_ge5(n);
    require_operator_index(alice_low);
    require_operator_index(bob_low);
    const auto game = magic_game_spec(n);
    VerificationReport report;
    report.game = game.name;
    report.parameters["n"] = std::to_string(n);
    report.parameters["strategy"] = "quantum";
    if (alice_low != 1 || bob_low != 1) {
        report.parameters["alice_low"] = std::to_string(alice_low);
        report.parameters["bob_low"] = std::to_string(bob_low);
    }
    for (int x_a = 1; x_a <= n; ++x_a)
        for (int x_b = 1; x_b <= n; ++x_b) {
            const int ia = x_a <= n - 3 ? alice_low : x_a - n + 3;
            const int ib = x_b <= n - 3 ? bob_low : x_b - n + 3;
            const auto dist = joint_distribution(ia, ib);
            for (int idx = 0; idx < 16; ++idx) {
                const double p = dist.probabilities[idx];
                if (p <= kSupportThreshold) continue;
                const int a1 = (idx >> 3) & 1, a2 = (idx >> 2) & 1;
                const int b1 = (idx >> 1) & 1, b2 = idx & 1;
                const auto answer = quantum_round_odd(n, x_a, x_b, {a1, a2, b1, b2});
                const auto violated = game.win_violation(x_a, x_b, answer.row, answer.col);
                ++report.cases_total;
                if (violated.empty()) {
                    ++report.cases_won;
                } else {
                    report.failures.push_back({game.show_inputs(x_a, x_b),
                                               outcome_label(a1, a2, b1, b2, p),
                                               game.show_outputs(answer.row, answer.col),
                                               violated});
                }
            }
        }
    return report;
}

SimulationStats quantum_simulate(int n, long long rounds, std::uint64_t seed) {
    if (n != 3) require_odd_ge5(n);
    if (rounds < 1) throw Error(ErrorKind::InvalidArgument, "rounds must be >= 1");
    const auto game = magic_game_spec(n);
    std::mt19937_64 rng(seed);
    const auto uniform01 = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    SimulationStats stats;
    stats.rounds = rounds;
    for (long long r = 0; r < rounds; ++r) {
        const int x_a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int x_b = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int ia = (n == 3) ? x_a : (x_a <= n - 3 ? 1 : x_a - n + 3);
        const int ib = (n == 3) ? x_b : (x_b <= n - 3 ? 1 : x_b - n + 3);
        const auto dist = joint_distribution(ia, ib);
        const double u = uniform01();
        double cumulative = 0.0;
        int idx = 15;
        for (int i = 0; i < 16; ++i) {
            cumulative += dist.probabilities[i];
            if (u < cumulative) {
                idx = i;
                break;
            }
        }
        const int a1 = (idx >> 3) & 1, a2 = (idx >> 2) & 1;
        const int b1 = (idx >> 1) & 1, b2 = idx & 1;
        const auto answer = (n == 3) ? outcome_to_answers_n3(a1, a2, b1, b2)
                                     : quantum_round_odd(n, x_a, x_b, {a1, a2, b1, b2});
        if (game.win_violation(x_a, x_b, answer.row, answer.col).empty()) ++stats.wins;
    }
    stats.win_rate = static_cast<double>(stats.wins) / static_cast<double>(stats.rounds);
    return stats;
}

} // namespace ptg

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
#include "magicsquare.hpp"

#include <numeric>

#include "errors.hpp"

namespace ptg {

namespace {

void require_odd_size(int n) {
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorKind::InvalidArgument,
                    "magic square size must be odd and >= 3, got " + std::to_string(n) +
                        (n >= 2 && n % 2 == 0
                             ? " (even sizes admit a classical solution and are out of scope)"
                             : ""));
}

void require_index(int n, int index) {
    if (index < 1 || index > n)
        throw Error(ErrorKind::InvalidArgument,
                    "index " + std::to_string(index) + " out of range 1.." + std::to_string(n));
}

int parity(const std::vector<int>& bits) {
    return std::accumulate(bits.begin(), bits.end(), 0) % 2;
}

std::string bits_label(const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

} // namespace

std::vector<int> StrategyVectorFamily::e(int i) const {
    require_index(n, i);
    std::vector<int> v(n, 1);
    v[i - 1] = 0;
    return v;
}

std::vector<int> StrategyVectorFamily::f1() const { return std::vector<int>(n, 0); }

std::vector<int> StrategyVectorFamily::f2() const {
    std::vector<int> v(n, 0);
    v[n - 2] = 1;
    v[n - 1] = 1;
    return v;
}

std::vector<int> StrategyVectorFamily::g(int i) const {
    require_index(n - 1, i);
    auto v = e(i);
    v[n - 1] = 0;
    return v;
}

std::vector<int> StrategyVectorFamily::h1() const { return std::vector<int>(n, 1); }

StrategyVectorFamily strategy_vectors(int n) {
    require_odd_size(n);
    return StrategyVectorFamily{n};
}

std::vector<int> magic_strategy(MagicTag tag, int n, int index) {
    const auto family = strategy_vectors(n);
    require_index(n, index);
    switch (tag) {
        case MagicTag::A0:
            return index <= n - 1 ? family.e(index) : family.f1();
        case MagicTag::A1:
            if (index <= n - 2) return family.e(index);
            if (index == n - 1) return family.e(n);
            return family.f2();
        case MagicTag::B0:
            return index <= n - 1 ? family.g(index) : family.h1();
        case MagicTag::B1:
            if (index <= n - 2) return family.g(index);
            if (index == n - 1) return family.h1();
            return family.g(n - 1);
    }
    throw Error(ErrorKind::Internal, "unreachable strategy tag");
}

GameSpec<int, int, std::vector<int>, std::vector<int>> magic_game_spec(int n) {
    require_odd_size(n);
    GameSpec<int, int, std::vector<int>, std::vector<int>> game;
    game.name = "magic-square";
    game.alice_inputs.resize(n);
    game.bob_inputs.resize(n);
    std::iota(game.alice_inputs.begin(), game.alice_inputs.end(), 1);
    std::iota(game.bob_inputs.begin(), game.bob_inputs.end(), 1);
    game.promise = [](const int&, const int&) { return true; };
    game.win_violation = [n](const int& x_a, const int& x_b, const std::vector<int>& row,
                             const std::vector<int>& col) {
        if (static_cast<int>(row.size()) != n || parity(row) != 0)
            return std::string("row-parity");
        if (static_cast<int>(col.size()) != n || parity(col) != 1)
            return std::string("col-parity");
        if (row[x_b - 1] != col[x_a - 1]) return std::string("intersection");
        return std::string();
    };
    game.show_inputs = [](const int& x_a, const int& x_b) {
        return "x_a=" + std::to_string(x_a) + " x_b=" + std::to_string(x_b);
    };
    game.show_outputs = [](const std::vector<int>& row, const std::vector<int>& col) {
        return "row=" + bits_label(row) + " col=" + bits_label(col);
    };
    return game;
}

MagicAnswer magic_nlbox_round(int n, int x_a, int x_b, const PRBoxBranch& branch) {
    require_odd_size(n);
    require_index(n, x_a);
    require_index(n, x_b);
    const int x = x_a == n ? 1 : 0;
    const int y = x_b == n ? 1 : 0;
    if (branch.x != x || branch.y != y)
        throw Error(ErrorKind::InvalidArgument,
                    "branch carries box inputs (" + std::to_string(branch.x) + "," +
                        std::to_string(branch.y) + ") but the wiring requires (" +
                        std::to_string(x) + "," + std::to_string(y) + ")");
    if ((branch.a ^ branch.b) != (x & y))
        throw Error(ErrorKind::InvalidArgument, "branch outputs violate a XOR b = x*y");
    return {magic_strategy(branch.a == 0 ? MagicTag::A0 : MagicTag::A1, n, x_a),
            magic_strategy(branch.b == 0 ? MagicTag::B0 : MagicTag::B1, n, x_b)};
}

namespace {

ResourceEnumerator<int, int, int, int> box_resource(int n) {
    return [n](const int& x_a, const int& x_b) {
        const int x = x_a == n ? 1 : 0;
        const int y = x_b == n ? 1 : 0;
        std::vector<ResourceBranch<int, int>> branches;
        for (const auto& br : pr_branches(x, y))
            branches.push_back({"(a=" + std::to_string(br.a) + ",b=" + std::to_string(br.b) + ")",
                                br.weight, br.a, br.b});
        return branches;
    };
}

PairStrategy<int, int, std::vector<int>, std::vector<int>, int, int> box_strategy(int n) {
    PairStrategy<int, int, std::vector<int>, std::vector<int>, int, int> strategy;
    strategy.alice = [n](const int& x_a, const int& box_out) {
        return magic_strategy(box_out == 0 ? MagicTag::A0 : MagicTag::A1, n, x_a);
    };
    strategy.bob = [n](const int& x_b, const int& box_out) {
        return magic_strategy(box_out == 0 ? MagicTag::B0 : MagicTag::B1, n, x_b);
    };
    return strategy;
}

} // namespace

VerificationReport magic_verify_nlbox(int n) {
    const auto game = magic_game_spec(n);
    auto report = verify_exhaustive(game, box_strategy(n), box_resource(n));
    report.parameters["n"] = std::to_string(n);
    report.parameters["strategy"] = "nlbox";
    return report;
}

SimulationStats magic_simulate_nlbox(int n, long long rounds, std::uint64_t seed) {
    const auto game = magic_game_spec(n);
    return simulate(game, box_strategy(n), box_resource(n), rounds, seed);
}

ImpossibilityReport classical_impossibility(int n) {
    require_odd_size(n);
    ImpossibilityReport report;
    report.n = n;
    // Row constraints force the total entry parity to 0, column constraints
    // force it to n mod 2; both cannot hold for odd n.
    report.parity_contradiction = (0 != n % 2);

    if (n != 3) return report;
    report.exhaustive_ran = true;
    report.input_pairs = n * n;

    // All 2^9 candidate grids.
    for (int grid = 0; grid < 512; ++grid) {
        ++report.matrices_checked;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            int row_sum = 0;
            for (int j = 0; j < 3; ++j) row_sum += (grid >> (3 * i + j)) & 1;
            if (row_sum % 2 != 0) ok = false;
        }
        for (int j = 0; j < 3 && ok; ++j) {
            int col_sum = 0;
            for (int i = 0; i < 3; ++i) col_sum += (grid >> (3 * i + j)) & 1;
            if (col_sum % 2 != 1) ok = false;
        }
        if (ok) ++report.matrices_valid;
    }

    // All deterministic strategy pairs: an even-parity row per Alice input
    // paired with an odd-parity column per Bob input (4 choices each).
    std::vector<std::vector<int>> even_rows, odd_cols;
    for (int bits = 0; bits < 8; ++bits) {
        std::vector<int> v = {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
        if (parity(v) == 0) even_rows.push_back(v);
        else odd_cols.push_back(v);
    }
    for (int a0 = 0; a0 < 4; ++a0)
        for (int a1 = 0; a1 < 4; ++a1)
            for (int a2 = 0; a2 < 4; ++a2) {
                const int alice[3] = {a0, a1, a2};
                for (int b0 = 0; b0 < 4; ++b0)
                    for (int b1 = 0; b1 < 4; ++b1)
                        for (int b2 = 0; b2 < 4; ++b2) {
                            const int bob[3] = {b0, b1, b2};
                            ++report.strategy_pairs_checked;
                            int wins = 0;
                            for (int xa = 0; xa < 3; ++xa)
                                for (int xb = 0; xb < 3; ++xb)
                                    if (even_rows[alice[xa]][xb] == odd_cols[bob[xb]][xa])
                                        ++wins;
                            if (wins > report.best_strategy_wins)
                                report.best_strategy_wins = wins;
                        }
            }
    return report;
}

} // namespace ptg

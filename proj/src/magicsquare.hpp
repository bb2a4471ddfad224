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
#ifndef PTGAMES_MAGICSQUARE_HPP
#define PTGAMES_MAGICSQUARE_HPP

#include <vector>

#include "game.hpp"
#include "nlbox.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// The odd-size magic-square game.
//
// Alice gets a row index and answers a length-n bit row with even parity;
// Bob gets a column index and answers a length-n bit column with odd parity;
// they win when the answers agree at the intersection. No global n x n grid
// with those parities exists for odd n, so no classical strategy wins every
// pair, yet a single NL-box does. Indices are 1-based throughout, matching
// the usual matrix convention.
// ---------------------------------------------------------------------------

struct MagicAnswer {
    std::vector<int> row; // Alice, length n
    std::vector<int> col; // Bob, length n
};

// The row/column building blocks for size n:
//   e_i : all ones except a 0 at position i           (even parity)
//   f_1 : all zeros                                   (even parity)
//   f_2 : zeros with ones at positions n-1 and n      (even parity)
//   g_i : e_i with position n forced to 0, i <= n-1   (odd parity)
//   h_1 : all ones                                    (odd parity)
struct StrategyVectorFamily {
    int n = 0;
    std::vector<int> e(int i) const;
    std::vector<int> f1() const;
    std::vector<int> f2() const;
    std::vector<int> g(int i) const;
    std::vector<int> h1() const;
};

// Rejects even or sub-3 sizes (even-size squares have a classical solution
// and sit outside this game).
StrategyVectorFamily strategy_vectors(int n);

enum class MagicTag { A0, A1, B0, B1 };

// The four strategies, indexed by the party's input:
//   A0: rows e_1..e_{n-1}, then f_1
//   A1: rows e_1..e_{n-2}, e_n, then f_2
//   B0: columns g_1..g_{n-1}, then h_1
//   B1: columns g_1..g_{n-2}, h_1, then g_{n-1}
std::vector<int> magic_strategy(MagicTag tag, int n, int index);

// Win tags: "row-parity", "col-parity", "intersection". The promise is the
// full input product set.
GameSpec<int, int, std::vector<int>, std::vector<int>> magic_game_spec(int n);

// One round under a fixed box branch; both parties feed the box 1 exactly
// when their index equals n.
MagicAnswer magic_nlbox_round(int n, int x_a, int x_b, const PRBoxBranch& branch);

// Exhaustive check over all n^2 input pairs and both branches.
VerificationReport magic_verify_nlbox(int n);

// Seeded round-after-round play with the box strategy.
SimulationStats magic_simulate_nlbox(int n, long long rounds, std::uint64_t seed);

struct ImpossibilityReport {
    int n = 0;
    // No n x n bit matrix has all row sums even and all column sums odd when
    // n is odd: the total parity differs row-wise vs column-wise.
    bool parity_contradiction = false;
    // n = 3 only: full enumeration results.
    bool exhaustive_ran = false;
    long long matrices_checked = 0;
    long long matrices_valid = 0;
    long long strategy_pairs_checked = 0;
    int best_strategy_wins = 0; // max input pairs won by any deterministic pair
    int input_pairs = 0;
};

// The classical impossibility: parity argument for every odd n, plus for
// n = 3 the brute-force enumeration of all 512 candidate grids and all 4096
// deterministic strategy pairs.
ImpossibilityReport classical_impossibility(int n);

} // namespace ptg

#endif

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
#ifndef PTGAMES_KSGAME_HPP
#define PTGAMES_KSGAME_HPP

#include <string>
#include <utility>
#include <vector>

#include "game.hpp"
#include "kscolour.hpp"
#include "nlbox.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// The impossible-colouring game over a KS set.
//
// Alice receives a basis index and must assign a bit to each of its members
// with exactly one 1; Bob receives a single vector promised to lie in Alice's
// basis and must assign it a bit equal to Alice's. No communication; one
// shared NL-box. Alice feeds the box 1 iff her basis is residual, Bob feeds 1
// iff his vector is in the flip set; box outputs select (A0|A1) and (B0|B1).
// ---------------------------------------------------------------------------

struct KSGameInput {
    int alice_basis = 0; // 0-based basis index
    int bob_vector = 0;  // vector id; promise: member of Alice's basis
};

struct AliceKSStrategy {
    // rows[basis][position] in {0,1}; every row has exactly one 1.
    std::vector<std::vector<int>> rows;
};

struct BobKSStrategy {
    // One bit per vector id; Bob sees only a vector, so he is necessarily
    // non-contextual.
    std::vector<int> values;
};

struct StrategyQuad {
    AliceKSStrategy a0, a1;
    BobKSStrategy b0, b1;
    std::vector<int> alice_box_input; // per basis: 1 iff residual
    std::vector<int> bob_box_input;   // per vector: 1 iff in the flip set M
};

// The four assignment tables for the built-in 18-vector set, with the box
// wired to basis 9 and vector (0,1,-1,0).
StrategyQuad builtin_quad_4d();

// Game six-tuple for an arbitrary valid KS set. Outputs: Alice a bit row of
// length d, Bob a single bit. Win tags: "exactly-one", "value-mismatch".
GameSpec<int, int, std::vector<int>, int> ks_game_spec(const KSSet& set);

// One round under a fixed box branch. The branch must carry exactly the box
// inputs the wiring derives from the game input. Returns Alice's row and
// Bob's bit.
std::pair<std::vector<int>, int> ks_play_round(const KSSet& set, const StrategyQuad& quad,
                                               const KSGameInput& input,
                                               const PRBoxBranch& branch);

// Exhaustive verification of a quad over every promise pair and both box
// branches.
VerificationReport ks_verify(const KSSet& set, const StrategyQuad& quad,
                             const std::string& quad_label = "quad");

// Seeded round-after-round play of the same game and resource.
SimulationStats ks_simulate(const KSSet& set, const StrategyQuad& quad, long long rounds,
                            std::uint64_t seed);

struct SufficientConditionReport {
    bool satisfied = false;
    // The game admits a plain classical strategy (prefix covers every basis);
    // synthesis degenerates to A0 = A1, B0 = B1 with the box never consulted.
    bool degenerate = false;
    int prefix_length = 0;
    int residual_count = 0;
    std::vector<int> flip_vectors; // M, sorted by id
    Colouring witness;             // prefix witness values (-1 off-prefix)
    std::string diagnosis;         // failed clause when !satisfied
};

// Searches for a flip set M and residual completion such that
//   (a) every residual basis contains at most one M member (exactly one when
//       the basis is infeasible without a flip),
//   (b) every M member occurs in some prefix basis,
//   (c) the full quad construction passes exhaustive verification.
// First witness under (basis, position) order. A failed search returns a
// diagnosis naming the binding clause instead of throwing.
SufficientConditionReport check_sufficient_condition(const KSSet& set);

// Builds the quad from a satisfied sufficient condition: A0 extends the
// prefix witness with M flipped in residual contexts; A1 is the companion
// full strategy with M's context values swapped and the rest re-solved; B0
// takes A0 off M and A1's residual value on M; B1 symmetrically. The quad is
// verified exhaustively before being returned. Throws on a failed condition.
StrategyQuad synthesize_quad(const KSSet& set);

} // namespace ptg

#endif

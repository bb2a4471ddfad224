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
#include "ksgame.hpp"

#include <algorithm>
#include <optional>

namespace ptg {

namespace {

std::string basis_label(int basis) { return "S" + std::to_string(basis + 1); }

std::string vector_label(const KSSet& set, int vector_id) {
    std::string s = "(";
    const auto& c = set.vectors[vector_id].components;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string bits_label(const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

int position_in_basis(const KSSet& set, int basis, int vector_id) {
    const auto& members = set.bases[basis].members;
    const auto it = std::find(members.begin(), members.end(), vector_id);
    return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

} // namespace

StrategyQuad builtin_quad_4d() {
    // Assignment tables for the built-in set, row-per-basis. Alice's two
    // strategies differ only on the bases holding (1,0,0,1), (1,0,0,-1) and
    // the contextual vector (0,1,-1,0).
    static const char* kA0[9] = {"1000", "1000", "1000", "1000", "0010",
                                 "0001", "1000", "1000", "0010"};
    static const char* kA1[9] = {"1000", "1000", "1000", "1000", "0001",
                                 "0010", "1000", "1000", "0001"};
    static const int kB0[18] = {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0};
    static const int kB1[18] = {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0};

    StrategyQuad quad;
    for (int b = 0; b < 9; ++b) {
        std::vector<int> r0, r1;
        for (int pos = 0; pos < 4; ++pos) {
            r0.push_back(kA0[b][pos] - '0');
            r1.push_back(kA1[b][pos] - '0');
        }
        quad.a0.rows.push_back(std::move(r0));
        quad.a1.rows.push_back(std::move(r1));
    }
    quad.b0.values.assign(kB0, kB0 + 18);
    quad.b1.values.assign(kB1, kB1 + 18);
    quad.alice_box_input.assign(9, 0);
    quad.alice_box_input[8] = 1; // S9 is the residual basis
    quad.bob_box_input.assign(18, 0);
    quad.bob_box_input[14] = 1; // the contextual vector (0,1,-1,0)
    return quad;
}

GameSpec<int, int, std::vector<int>, int> ks_game_spec(const KSSet& set) {
    validate(set);
    GameSpec<int, int, std::vector<int>, int> game;
    game.name = "impossible-colouring";
    game.alice_inputs.resize(set.bases.size());
    for (std::size_t b = 0; b < set.bases.size(); ++b)
        game.alice_inputs[b] = static_cast<int>(b);
    game.bob_inputs.resize(set.vectors.size());
    for (std::size_t v = 0; v < set.vectors.size(); ++v)
        game.bob_inputs[v] = static_cast<int>(v);
    game.promise = [&set](const int& basis, const int& vector_id) {
        return position_in_basis(set, basis, vector_id) >= 0;
    };
    game.win_violation = [&set](const int& basis, const int& vector_id,
                                const std::vector<int>& row, const int& bob_value) {
        if (std::count(row.begin(), row.end(), 1) != 1 ||
            static_cast<int>(row.size()) != set.dimension)
            return std::string("exactly-one");
        const int pos = position_in_basis(set, basis, vector_id);
        if (row[pos] != bob_value) return std::string("value-mismatch");
        return std::string();
    };
    game.show_inputs = [&set](const int& basis, const int& vector_id) {
        return "alice=" + basis_label(basis) + " bob=" + vector_label(set, vector_id);
    };
    game.show_outputs = [](const std::vector<int>& row, const int& bob_value) {
        return "row=" + bits_label(row) + " value=" + std::to_string(bob_value);
    };
    return game;
}

std::pair<std::vector<int>, int> ks_play_round(const KSSet& set, const StrategyQuad& quad,
                                               const KSGameInput& input,
                                               const PRBoxBranch& branch) {
    if (input.alice_basis < 0 || input.alice_basis >= static_cast<int>(set.bases.size()) ||
        input.bob_vector < 0 || input.bob_vector >= static_cast<int>(set.vectors.size()))
        throw Error(ErrorKind::InvalidArgument, "input indices out of range");
    if (position_in_basis(set, input.alice_basis, input.bob_vector) < 0)
        throw Error(ErrorKind::InvalidArgument,
                    "promise violation: " + vector_label(set, input.bob_vector) +
                        " is not a member of " + basis_label(input.alice_basis));
    const int x = quad.alice_box_input[input.alice_basis];
    const int y = quad.bob_box_input[input.bob_vector];
    if (branch.x != x || branch.y != y)
        throw Error(ErrorKind::InvalidArgument,
                    "branch carries box inputs (" + std::to_string(branch.x) + "," +
                        std::to_string(branch.y) + ") but the wiring requires (" +
                        std::to_string(x) + "," + std::to_string(y) + ")");
    if ((branch.a ^ branch.b) != (x & y))
        throw Error(ErrorKind::InvalidArgument, "branch outputs violate a XOR b = x*y");
    const auto& row =
        (branch.a == 0 ? quad.a0 : quad.a1).rows[input.alice_basis];
    const int value = (branch.b == 0 ? quad.b0 : quad.b1).values[input.bob_vector];
    return {row, value};
}

namespace {

ResourceEnumerator<int, int, int, int> quad_resource(const StrategyQuad& quad) {
    return [&quad](const int& basis, const int& vector_id) {
        const int x = quad.alice_box_input[basis];
        const int y = quad.bob_box_input[vector_id];
        std::vector<ResourceBranch<int, int>> branches;
        for (const auto& br : pr_branches(x, y))
            branches.push_back({"(a=" + std::to_string(br.a) + ",b=" + std::to_string(br.b) + ")",
                                br.weight, br.a, br.b});
        return branches;
    };
}

PairStrategy<int, int, std::vector<int>, int, int, int> quad_strategy(const StrategyQuad& quad) {
    PairStrategy<int, int, std::vector<int>, int, int, int> strategy;
    strategy.alice = [&quad](const int& basis, const int& box_out) {
        return (box_out == 0 ? quad.a0 : quad.a1).rows[basis];
    };
    strategy.bob = [&quad](const int& vector_id, const int& box_out) {
        return (box_out == 0 ? quad.b0 : quad.b1).values[vector_id];
    };
    return strategy;
}

} // namespace

VerificationReport ks_verify(const KSSet& set, const StrategyQuad& quad,
                             const std::string& quad_label) {
    const auto game = ks_game_spec(set);
    if (quad.a0.rows.size() != set.bases.size() || quad.a1.rows.size() != set.bases.size() ||
        quad.b0.values.size() != set.vectors.size() ||
        quad.b1.values.size() != set.vectors.size() ||
        quad.alice_box_input.size() != set.bases.size() ||
        quad.bob_box_input.size() != set.vectors.size())
        throw Error(ErrorKind::InvalidArgument, "strategy quad does not match the set's shape");
    const auto resource = quad_resource(quad);
    const auto strategy = quad_strategy(quad);
    auto report = verify_exhaustive(game, strategy, resource);
    report.parameters["set"] = set.name;
    report.parameters["dimension"] = std::to_string(set.dimension);
    report.parameters["vectors"] = std::to_string(set.vectors.size());
    report.parameters["bases"] = std::to_string(set.bases.size());
    report.parameters["quad"] = quad_label;
    return report;
}

SimulationStats ks_simulate(const KSSet& set, const StrategyQuad& quad, long long rounds,
                            std::uint64_t seed) {
    const auto game = ks_game_spec(set);
    return simulate(game, quad_strategy(quad), quad_resource(quad), rounds, seed);
}

namespace {

// A0's value table as an engine: non-flip vectors keep their witness value
// everywhere, flip vectors are split and take the opposite value in residual
// contexts, vectors unseen in the prefix stay free.
ColouringEngine make_a0_engine(const KSSet& set, const PrefixResult& prefix,
                               const std::vector<int>& flips) {
    ColouringEngine engine(set);
    std::vector<bool> in_m(set.vectors.size(), false);
    for (int v : flips) in_m[v] = true;
    for (int v = 0; v < static_cast<int>(set.vectors.size()); ++v) {
        if (prefix.witness[v] < 0) continue;
        if (!in_m[v]) continue;
        engine.split_contexts(v);
    }
    for (int v = 0; v < static_cast<int>(set.vectors.size()); ++v) {
        if (prefix.witness[v] < 0) continue;
        if (in_m[v]) {
            for (std::size_t b = 0; b < set.bases.size(); ++b) {
                if (position_in_basis(set, static_cast<int>(b), v) < 0) continue;
                const bool residual = static_cast<int>(b) >= prefix.prefix_length;
                engine.pin(v, static_cast<int>(b),
                           residual ? 1 - prefix.witness[v] : prefix.witness[v]);
            }
        } else {
            engine.pin(v, -1, prefix.witness[v]);
        }
    }
    return engine;
}

// A1's engine: flip vectors pinned to the swapped context values, everything
// else re-solved from scratch.
ColouringEngine make_a1_engine(const KSSet& set, const PrefixResult& prefix,
                               const std::vector<int>& flips) {
    ColouringEngine engine(set);
    for (int v : flips) engine.split_contexts(v);
    for (int v : flips) {
        for (std::size_t b = 0; b < set.bases.size(); ++b) {
            if (position_in_basis(set, static_cast<int>(b), v) < 0) continue;
            const bool residual = static_cast<int>(b) >= prefix.prefix_length;
            engine.pin(v, static_cast<int>(b),
                       residual ? prefix.witness[v] : 1 - prefix.witness[v]);
        }
    }
    return engine;
}

struct ConstructionResult {
    std::optional<StrategyQuad> quad;
    std::string failure;
};

ConstructionResult construct_quad(const KSSet& set, const PrefixResult& prefix,
                                  const std::vector<int>& flips) {
    const int r = static_cast<int>(set.bases.size());
    const int n = static_cast<int>(set.vectors.size());
    const int d = set.dimension;
    std::vector<bool> in_m(n, false);
    for (int v : flips) in_m[v] = true;

    auto engine_a0 = make_a0_engine(set, prefix, flips);
    if (!engine_a0.solve()) return {std::nullopt, "residual completion infeasible"};
    auto engine_a1 = make_a1_engine(set, prefix, flips);
    if (!engine_a1.solve())
        return {std::nullopt, "companion strategy re-solve infeasible"};

    StrategyQuad quad;
    quad.a0.rows.assign(r, std::vector<int>(d, 0));
    quad.a1.rows.assign(r, std::vector<int>(d, 0));
    for (int b = 0; b < r; ++b)
        for (int pos = 0; pos < d; ++pos) {
            const int v = set.bases[b].members[pos];
            quad.a0.rows[b][pos] = engine_a0.value_in(v, b);
            quad.a1.rows[b][pos] = engine_a1.value_in(v, b);
        }
    quad.b0.values.assign(n, 0);
    quad.b1.values.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (in_m[v]) {
            // On M, Bob mirrors the other strategy's residual-context value.
            quad.b0.values[v] = prefix.witness[v];
            quad.b1.values[v] = 1 - prefix.witness[v];
        } else {
            quad.b0.values[v] = engine_a0.value_of(v);
            quad.b1.values[v] = engine_a1.value_of(v);
        }
    }
    quad.alice_box_input.assign(r, 0);
    for (int b = prefix.prefix_length; b < r; ++b) quad.alice_box_input[b] = 1;
    quad.bob_box_input.assign(n, 0);
    for (int v : flips) quad.bob_box_input[v] = 1;
    return {std::move(quad), {}};
}

struct QuadSearchResult {
    SufficientConditionReport report;
    std::optional<StrategyQuad> quad;
};

// Enumerates candidate flip sets per residual basis by choosing which member
// carries the value 1 (positions tried low to high); the implied flips are
// the witness-valued members whose value changed. Each complete candidate is
// validated by full construction and exhaustive verification; the first one
// that verifies wins.
QuadSearchResult search_quad(const KSSet& set) {
    QuadSearchResult result;
    validate(set);
    const auto prefix = colour_prefix_maximal(set);
    const int r = static_cast<int>(set.bases.size());
    result.report.prefix_length = prefix.prefix_length;
    result.report.residual_count = prefix.residual_count;
    result.report.witness = prefix.witness;

    if (prefix.residual_count == 0) {
        auto built = construct_quad(set, prefix, {});
        if (!built.quad)
            throw Error(ErrorKind::Internal, "degenerate construction failed: " + built.failure);
        auto verified = ks_verify(set, *built.quad, "synthesized");
        if (!verified.all_won())
            throw Error(ErrorKind::Internal, "degenerate quad failed verification");
        result.report.satisfied = true;
        result.report.degenerate = true;
        result.quad = std::move(built.quad);
        return result;
    }

    std::vector<bool> in_m(set.vectors.size(), false);
    std::vector<int> flips;
    bool construction_failed = false;
    std::string construction_failure;

    const auto flip_count_in = [&](int basis) {
        int count = 0;
        for (int m : set.bases[basis].members)
            if (in_m[m]) ++count;
        return count;
    };

    // DFS over residual bases; returns true once a candidate verified.
    auto try_bases = [&](auto&& self, int basis) -> bool {
        if (basis == r) {
            std::vector<int> candidate(flips);
            std::sort(candidate.begin(), candidate.end());
            auto built = construct_quad(set, prefix, candidate);
            if (!built.quad) {
                construction_failed = true;
                construction_failure = built.failure;
                return false;
            }
            const auto verified = ks_verify(set, *built.quad, "synthesized");
            if (!verified.all_won()) {
                construction_failed = true;
                construction_failure = "constructed quad failed exhaustive verification";
                return false;
            }
            result.report.satisfied = true;
            result.report.flip_vectors = std::move(candidate);
            result.quad = std::move(built.quad);
            return true;
        }
        const auto& members = set.bases[basis].members;
        for (std::size_t kept = 0; kept < members.size(); ++kept) {
            std::vector<int> added;
            bool feasible = true;
            for (std::size_t pos = 0; pos < members.size(); ++pos) {
                const int m = members[pos];
                if (prefix.witness[m] < 0) continue; // fresh; settled by the solver
                const int effective = prefix.witness[m] ^ (in_m[m] ? 1 : 0);
                const int target = (pos == kept) ? 1 : 0;
                if (effective == target) continue;
                if (in_m[m]) { // a second reversal is not representable
                    feasible = false;
                    break;
                }
                added.push_back(m);
            }
            if (!feasible) continue;
            for (int m : added) in_m[m] = true;
            flips.insert(flips.end(), added.begin(), added.end());
            bool within_bound = true;
            for (int b = prefix.prefix_length; b < r && within_bound; ++b)
                if (flip_count_in(b) > 1) within_bound = false;
            if (within_bound && self(self, basis + 1)) return true;
            for (int m : added) in_m[m] = false;
            flips.resize(flips.size() - added.size());
        }
        return false;
    };

    if (try_bases(try_bases, prefix.prefix_length)) return result;

    // Exhausted: name the binding clause.
    if (construction_failed) {
        result.report.diagnosis = "construction: " + construction_failure;
        return result;
    }
    {
        // Would a completion exist if residual bases could reverse several
        // already-assigned vectors at once?
        ColouringEngine relaxed(set);
        for (int v = 0; v < static_cast<int>(set.vectors.size()); ++v) {
            if (prefix.witness[v] < 0) continue;
            bool in_residual = false;
            for (int b = prefix.prefix_length; b < r; ++b)
                if (position_in_basis(set, b, v) >= 0) in_residual = true;
            if (in_residual) {
                relaxed.split_contexts(v);
                for (int b = 0; b < r; ++b)
                    if (position_in_basis(set, b, v) >= 0 && b < prefix.prefix_length)
                        relaxed.pin(v, b, prefix.witness[v]);
            } else {
                relaxed.pin(v, -1, prefix.witness[v]);
            }
        }
        if (relaxed.solve()) {
            result.report.diagnosis =
                "clause (a): some residual basis requires two or more contextual flips";
            return result;
        }
    }
    {
        // Would it exist if vectors unseen in the prefix were allowed
        // context-dependent values?
        ColouringEngine relaxed(set);
        for (int v = 0; v < static_cast<int>(set.vectors.size()); ++v) {
            if (prefix.witness[v] < 0) {
                relaxed.split_contexts(v);
                continue;
            }
            bool in_residual = false;
            for (int b = prefix.prefix_length; b < r; ++b)
                if (position_in_basis(set, b, v) >= 0) in_residual = true;
            if (in_residual) {
                relaxed.split_contexts(v);
                for (int b = 0; b < r; ++b)
                    if (position_in_basis(set, b, v) >= 0 && b < prefix.prefix_length)
                        relaxed.pin(v, b, prefix.witness[v]);
            } else {
                relaxed.pin(v, -1, prefix.witness[v]);
            }
        }
        if (relaxed.solve()) {
            result.report.diagnosis =
                "clause (b): a required flip vector never occurs in the prefix bases";
            return result;
        }
    }
    result.report.diagnosis = "residual bases admit no contextual completion under this witness";
    return result;
}

} // namespace

SufficientConditionReport check_sufficient_condition(const KSSet& set) {
    return search_quad(set).report;
}

StrategyQuad synthesize_quad(const KSSet& set) {
    auto result = search_quad(set);
    if (!result.report.satisfied)
        throw Error(ErrorKind::NotSatisfied,
                    "sufficient condition not satisfied: " + result.report.diagnosis);
    return std::move(*result.quad);
}

} // namespace ptg

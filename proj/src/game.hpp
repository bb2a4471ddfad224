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
#ifndef PTGAMES_GAME_HPP
#define PTGAMES_GAME_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ptg {

// ---------------------------------------------------------------------------
// Two-party game framework.
//
// A game is a six-tuple: input sets for Alice and Bob, output sets (implied
// by the AOut/BOut template parameters), a promise over input pairs, and a
// winning relation over (inputs, outputs). Strategies are deterministic maps
// from (own input, own resource view) to an output; a shared resource is an
// enumerator of weighted deterministic branches per input pair. Verification
// is a universally quantified check over every promise-satisfying input pair
// and every branch.
// ---------------------------------------------------------------------------

struct Failure {
    std::string inputs;
    std::string branch;
    std::string outputs;
    std::string violated;

    friend bool operator==(const Failure& a, const Failure& b) {
        return a.inputs == b.inputs && a.branch == b.branch &&
               a.outputs == b.outputs && a.violated == b.violated;
    }
};

struct VerificationReport {
    std::string game;
    std::map<std::string, std::string> parameters;
    long long cases_total = 0;
    long long cases_won = 0;
    std::vector<Failure> failures;

    bool all_won() const { return cases_won == cases_total; }

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.game == b.game && a.parameters == b.parameters &&
               a.cases_total == b.cases_total && a.cases_won == b.cases_won &&
               a.failures == b.failures;
    }
};

struct SimulationStats {
    long long rounds = 0;
    long long wins = 0;
    double win_rate = 0.0;
};

// One deterministic branch of the shared resource for a fixed input pair.
// For a fixed input pair the weights of all enumerated branches must sum to
// exactly 1.
template <typename AView, typename BView>
struct ResourceBranch {
    std::string label;
    Rational weight;
    AView alice_view;
    BView bob_view;
};

template <typename AIn, typename BIn, typename AOut, typename BOut>
struct GameSpec {
    std::string name;
    std::vector<AIn> alice_inputs;
    std::vector<BIn> bob_inputs;
    std::function<bool(const AIn&, const BIn&)> promise;
    // Empty string = round won; otherwise the violated-condition tag.
    std::function<std::string(const AIn&, const BIn&, const AOut&, const BOut&)> win_violation;
    std::function<std::string(const AIn&, const BIn&)> show_inputs;
    std::function<std::string(const AOut&, const BOut&)> show_outputs;
};

template <typename AIn, typename BIn, typename AOut, typename BOut,
          typename AView, typename BView>
struct PairStrategy {
    std::function<AOut(const AIn&, const AView&)> alice;
    std::function<BOut(const BIn&, const BView&)> bob;
};

template <typename AIn, typename BIn, typename AView, typename BView>
using ResourceEnumerator =
    std::function<std::vector<ResourceBranch<AView, BView>>(const AIn&, const BIn&)>;

// Exhaustive verification: enumerate every promise-satisfying input pair in
// stored order and every resource branch in enumeration order, so reports are
// byte-stable. Rejects resources whose branch weights do not sum to exactly 1.
template <typename AIn, typename BIn, typename AOut, typename BOut,
          typename AView, typename BView>
VerificationReport verify_exhaustive(
    const GameSpec<AIn, BIn, AOut, BOut>& game,
    const PairStrategy<AIn, BIn, AOut, BOut, AView, BView>& strategy,
    const ResourceEnumerator<AIn, BIn, AView, BView>& resource) {
    VerificationReport report;
    report.game = game.name;
    for (const AIn& a : game.alice_inputs) {
        for (const BIn& b : game.bob_inputs) {
            if (!game.promise(a, b)) continue;
            const auto branches = resource(a, b);
            Rational total_weight(0);
            for (const auto& br : branches) total_weight = total_weight + br.weight;
            if (!(total_weight == Rational(1)))
                throw Error(ErrorKind::InvalidArgument,
                            "resource branch weights sum to " + total_weight.to_string() +
                                " (expected 1) at inputs " + game.show_inputs(a, b));
            for (const auto& br : branches) {
                const AOut ya = strategy.alice(a, br.alice_view);
                const BOut yb = strategy.bob(b, br.bob_view);
                const std::string violated = game.win_violation(a, b, ya, yb);
                ++report.cases_total;
                if (violated.empty()) {
                    ++report.cases_won;
                } else {
                    report.failures.push_back({game.show_inputs(a, b), br.label,
                                               game.show_outputs(ya, yb), violated});
                }
            }
        }
    }
    return report;
}

// Seeded Monte-Carlo view of the same game. Inputs are drawn uniformly from
// the promise-satisfying pairs and branches by their exact weights; all
// randomness comes from the explicit seed.
template <typename AIn, typename BIn, typename AOut, typename BOut,
          typename AView, typename BView>
SimulationStats simulate(
    const GameSpec<AIn, BIn, AOut, BOut>& game,
    const PairStrategy<AIn, BIn, AOut, BOut, AView, BView>& strategy,
    const ResourceEnumerator<AIn, BIn, AView, BView>& resource,
    long long rounds, std::uint64_t seed) {
    if (rounds < 1)
        throw Error(ErrorKind::InvalidArgument, "rounds must be >= 1");

    std::vector<std::pair<AIn, BIn>> promise_pairs;
    for (const AIn& a : game.alice_inputs)
        for (const BIn& b : game.bob_inputs)
            if (game.promise(a, b)) promise_pairs.emplace_back(a, b);
    if (promise_pairs.empty())
        throw Error(ErrorKind::InvalidArgument, "game has no promise-satisfying input pairs");

    std::mt19937_64 rng(seed);
    const auto draw = [&rng](std::uint64_t n) { return rng() % n; };

    SimulationStats stats;
    stats.rounds = rounds;
    for (long long r = 0; r < rounds; ++r) {
        const auto& [a, b] = promise_pairs[draw(promise_pairs.size())];
        const auto branches = resource(a, b);
        // Branch sampling stays exact: draw an integer below the common
        // denominator and walk the cumulative numerators.
        std::int64_t common_den = 1;
        for (const auto& br : branches)
            common_den = std::lcm(common_den, br.weight.den);
        const std::int64_t ticket =
            static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(common_den)));
        std::int64_t cumulative = 0;
        const auto* chosen = &branches.back();
        for (const auto& br : branches) {
            cumulative += br.weight.num * (common_den / br.weight.den);
            if (ticket < cumulative) {
                chosen = &br;
                break;
            }
        }
        const AOut ya = strategy.alice(a, chosen->alice_view);
        const BOut yb = strategy.bob(b, chosen->bob_view);
        if (game.win_violation(a, b, ya, yb).empty()) ++stats.wins;
    }
    stats.win_rate = static_cast<double>(stats.wins) / static_cast<double>(stats.rounds);
    return stats;
}

} // namespace ptg

#endif

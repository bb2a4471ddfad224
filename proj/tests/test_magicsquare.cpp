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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "magicsquare.hpp"

using namespace ptg;

namespace {

int parity(const std::vector<int>& bits) {
    return std::accumulate(bits.begin(), bits.end(), 0) % 2;
}

// Independent replay of the box protocol straight from the definitions.
bool oracle_round_wins(int n, int x_a, int x_b, int a, int b) {
    const auto row = magic_strategy(a == 0 ? MagicTag::A0 : MagicTag::A1, n, x_a);
    const auto col = magic_strategy(b == 0 ? MagicTag::B0 : MagicTag::B1, n, x_b);
    return parity(row) == 0 && parity(col) == 1 && row[x_b - 1] == col[x_a - 1];
}

} // namespace

TEST_CASE("strategy vector family") {
    SUBCASE("n=3 instances") {
        const auto family = strategy_vectors(3);
        CHECK(family.e(1) == std::vector<int>{0, 1, 1});
        CHECK(family.e(2) == std::vector<int>{1, 0, 1});
        CHECK(family.g(1) == std::vector<int>{0, 1, 0});
        CHECK(family.f1() == std::vector<int>{0, 0, 0});
        CHECK(family.f2() == std::vector<int>{0, 1, 1});
        CHECK(family.h1() == std::vector<int>{1, 1, 1});
    }
    SUBCASE("n=5 instances") {
        const auto family = strategy_vectors(5);
        CHECK(family.f2() == std::vector<int>{0, 0, 0, 1, 1});
        CHECK(family.e(5) == std::vector<int>{1, 1, 1, 1, 0});
        CHECK(family.g(4) == std::vector<int>{1, 1, 1, 0, 0});
    }
    SUBCASE("parities hold for the whole family across sizes") {
        for (int n : {3, 5, 7, 11, 21}) {
            const auto family = strategy_vectors(n);
            for (int i = 1; i <= n; ++i) CHECK(parity(family.e(i)) == 0);
            for (int i = 1; i <= n - 1; ++i) CHECK(parity(family.g(i)) == 1);
            CHECK(parity(family.f1()) == 0);
            CHECK(parity(family.f2()) == 0);
            CHECK(parity(family.h1()) == 1);
        }
    }
    SUBCASE("even and tiny sizes are rejected") {
        CHECK_THROWS_AS(strategy_vectors(4), Error);
        CHECK_THROWS_AS(strategy_vectors(1), Error);
        CHECK_THROWS_AS(strategy_vectors(0), Error);
    }
}

TEST_CASE("strategy rows and columns by input") {
    CHECK(magic_strategy(MagicTag::A0, 3, 3) == std::vector<int>{0, 0, 0});
    CHECK(magic_strategy(MagicTag::B1, 3, 2) == std::vector<int>{1, 1, 1});
    CHECK(magic_strategy(MagicTag::A1, 5, 4) == std::vector<int>{1, 1, 1, 1, 0});
    CHECK(magic_strategy(MagicTag::B0, 3, 1) == std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(magic_strategy(MagicTag::A0, 3, 4), Error);
    CHECK_THROWS_AS(magic_strategy(MagicTag::A0, 3, 0), Error);

    SUBCASE("row parity is always even, column parity always odd") {
        for (int n : {3, 5, 9, 15}) {
            for (int i = 1; i <= n; ++i) {
                CHECK(parity(magic_strategy(MagicTag::A0, n, i)) == 0);
                CHECK(parity(magic_strategy(MagicTag::A1, n, i)) == 0);
                CHECK(parity(magic_strategy(MagicTag::B0, n, i)) == 1);
                CHECK(parity(magic_strategy(MagicTag::B1, n, i)) == 1);
            }
        }
    }
}

TEST_CASE("game specification win predicate") {
    const auto game = magic_game_spec(3);
    CHECK(game.alice_inputs == std::vector<int>{1, 2, 3});
    CHECK(game.promise(1, 3));

    // Parities fine, intersection disagrees.
    CHECK(game.win_violation(1, 1, {0, 1, 1}, {1, 0, 0}) == "intersection");
    // All three conditions met.
    CHECK(game.win_violation(3, 1, {0, 0, 0}, {1, 0, 0}) == "");
    CHECK(game.win_violation(1, 1, {1, 1, 1}, {1, 0, 0}) == "row-parity");
    CHECK(game.win_violation(1, 1, {0, 1, 1}, {1, 1, 0}) == "col-parity");

    CHECK_THROWS_AS(magic_game_spec(4), Error);
    try {
        magic_game_spec(4);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("classical solution") != std::string::npos);
    }
}

TEST_CASE("strategy-pair agreement pattern") {
    // (A0,B0) and (A1,B1) agree at the intersection everywhere except (n,n);
    // (A0,B1) and (A1,B0) agree at (n,n).
    for (int n : {3, 5, 7}) {
        for (int x_a = 1; x_a <= n; ++x_a)
            for (int x_b = 1; x_b <= n; ++x_b) {
                const bool corner = (x_a == n && x_b == n);
                CHECK(oracle_round_wins(n, x_a, x_b, 0, 0) == !corner);
                CHECK(oracle_round_wins(n, x_a, x_b, 1, 1) == !corner);
                if (corner) {
                    CHECK(oracle_round_wins(n, x_a, x_b, 0, 1));
                    CHECK(oracle_round_wins(n, x_a, x_b, 1, 0));
                }
            }
    }
}

TEST_CASE("single box rounds") {
    SUBCASE("(n,n) with branch (a=0,b=1) wins") {
        const PRBoxBranch branch{1, 1, 0, 1, Rational(1, 2)};
        const auto answer = magic_nlbox_round(3, 3, 3, branch);
        CHECK(answer.row == std::vector<int>{0, 0, 0});
        CHECK(answer.col == std::vector<int>{1, 0, 0});
        CHECK(answer.row[2] == answer.col[2]);
    }
    SUBCASE("the forced pair (A0,B0) at (n,n) loses") {
        // Not reachable through the box wiring; checked straight from the
        // tables as the documented failure case.
        CHECK(!oracle_round_wins(3, 3, 3, 0, 0));
    }
    SUBCASE("n=7, inputs (2,5), branch (a=1,b=1) wins") {
        const PRBoxBranch branch{0, 0, 1, 1, Rational(1, 2)};
        const auto answer = magic_nlbox_round(7, 2, 5, branch);
        CHECK(parity(answer.row) == 0);
        CHECK(parity(answer.col) == 1);
        CHECK(answer.row[4] == answer.col[1]);
    }
    SUBCASE("wiring mismatches are rejected") {
        const PRBoxBranch branch{1, 1, 0, 1, Rational(1, 2)};
        CHECK_THROWS_AS(magic_nlbox_round(3, 1, 1, branch), Error);
    }
}

TEST_CASE("exhaustive verification across sizes") {
    const auto expect_all_win = [](int n) {
        const auto report = magic_verify_nlbox(n);
        CHECK(report.cases_total == 2LL * n * n);
        CHECK(report.cases_won == report.cases_total);
        CHECK(report.failures.empty());
    };
    expect_all_win(3);  // 18 cases
    expect_all_win(5);  // 50 cases
    expect_all_win(21); // 882 cases
    expect_all_win(201);

    // Independent oracle for n=3: every input pair under both box branches.
    for (int x_a = 1; x_a <= 3; ++x_a)
        for (int x_b = 1; x_b <= 3; ++x_b) {
            const int x = x_a == 3 ? 1 : 0;
            const int y = x_b == 3 ? 1 : 0;
            for (int a = 0; a < 2; ++a) CHECK(oracle_round_wins(3, x_a, x_b, a, a ^ (x & y)));
        }
}

TEST_CASE("classical impossibility") {
    SUBCASE("n=3 exhaustive enumerations") {
        const auto report = classical_impossibility(3);
        CHECK(report.parity_contradiction);
        CHECK(report.exhaustive_ran);
        CHECK(report.matrices_checked == 512);
        CHECK(report.matrices_valid == 0);
        CHECK(report.strategy_pairs_checked == 4096);
        CHECK(report.best_strategy_wins == 8);
        CHECK(report.best_strategy_wins < report.input_pairs);
    }
    SUBCASE("parity verdict holds across odd sizes") {
        for (int n = 3; n <= 99; n += 2) {
            const auto report = classical_impossibility(n);
            CHECK(report.parity_contradiction);
            if (n > 3) CHECK(!report.exhaustive_ran);
        }
    }
    SUBCASE("even sizes are rejected") {
        CHECK_THROWS_AS(classical_impossibility(4), Error);
    }
    SUBCASE("independent check: no 3x3 grid satisfies both constraints") {
        int valid = 0;
        for (int g = 0; g < 512; ++g) {
            bool ok = true;
            for (int i = 0; i < 3; ++i) {
                const int row = (g >> (3 * i)) & 7;
                if (__builtin_popcount(row) % 2 != 0) ok = false;
            }
            for (int j = 0; j < 3; ++j) {
                const int col = ((g >> j) & 1) + ((g >> (3 + j)) & 1) + ((g >> (6 + j)) & 1);
                if (col % 2 != 1) ok = false;
            }
            if (ok) ++valid;
        }
        CHECK(valid == 0);
    }
}

TEST_CASE("seeded simulation") {
    for (std::uint64_t seed : {0ULL, 9ULL, 77777ULL}) {
        const auto stats = magic_simulate_nlbox(5, 20000, seed);
        CHECK(stats.wins == 20000);
        CHECK(stats.win_rate == 1.0);
    }
    const auto a = magic_simulate_nlbox(3, 1234, 5);
    const auto b = magic_simulate_nlbox(3, 1234, 5);
    CHECK(a.wins == b.wins);
}

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

// End-to-end checks of the installed command-line contract: flags, output
// documents, and the 0/1/2 exit-code convention.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef PTG_CLI_PATH
#error "PTG_CLI_PATH must point at the built binary"
#endif
#ifndef PTG_DATA_DIR
#error "PTG_DATA_DIR must point at the bundled data directory"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(PTG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t read = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, read);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/ptgames_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("ks verify --builtin exits 0 with a full report") {
    const auto result = run_cli("ks verify --builtin");
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["game"] == "impossible-colouring");
    CHECK(doc["cases_total"] == 72);
    CHECK(doc["cases_won"] == 72);
    CHECK(doc["parameters"]["quad"] == "builtin");
}

TEST_CASE("ks verify --set synthesizes from the bundled document") {
    const auto result =
        run_cli(std::string("ks verify --set ") + PTG_DATA_DIR + "/cabello18.json");
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["cases_won"] == 72);
    CHECK(doc["parameters"]["quad"] == "synthesized");
}

TEST_CASE("ks verify with a permutation") {
    const auto result = run_cli("ks verify --builtin --permutation 9,1,2,3,4,5,6,7,8");
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["cases_won"] == 72);
    CHECK(doc["parameters"]["quad"] == "synthesized");
}

TEST_CASE("broken documents exit 2 with a positioned diagnostic") {
    const auto path = write_temp("broken_orthogonality.json", R"({
        "dimension": 4,
        "vectors": [[1,0,0,0],[1,1,0,0],[0,0,1,0],[0,0,0,1]],
        "bases": [[0,1,2,3]]})");
    const auto result = run_cli("ks verify --set " + path);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("basis 1") != std::string::npos);
    CHECK(result.output.find("orthogonal") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("ks colour prints counts, prefix and repair candidates") {
    for (const char* mode : {"exhaustive", "backtrack"}) {
        const auto result = run_cli(std::string("ks colour --mode ") + mode);
        CHECK(result.exit_code == 0);
        const auto doc = nlohmann::json::parse(result.output);
        CHECK(doc["colourings"] == 0);
        CHECK(doc["prefix_length"] == 8);
        CHECK(doc["residual_count"] == 1);
        CHECK(doc["sufficient_condition"]["flip_vectors"][0]["vector"] == "(0,1,-1,0)");
    }
}

TEST_CASE("ks colour on a colourable toy document") {
    const auto path = write_temp("two_bases.json", R"({
        "name": "toy",
        "dimension": 4,
        "vectors": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1],
                    [1,1,1,1],[1,1,-1,-1],[1,-1,1,-1],[1,-1,-1,1]],
        "bases": [[0,1,2,3],[4,5,6,7]]})");
    const auto result = run_cli("ks colour --set " + path);
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["colourings"] == 16);
    CHECK(doc["already_colourable"] == true);
    std::remove(path.c_str());
}

TEST_CASE("magic verify subcommands") {
    const auto nlbox = run_cli("magic --n 7 --strategy nlbox verify");
    CHECK(nlbox.exit_code == 0);
    CHECK(nlohmann::json::parse(nlbox.output)["cases_total"] == 98);

    const auto quantum = run_cli("magic --n 3 --strategy quantum verify");
    CHECK(quantum.exit_code == 0);
    CHECK(nlohmann::json::parse(quantum.output)["cases_won"] == 72);

    const auto even = run_cli("magic --n 4 verify");
    CHECK(even.exit_code == 2);
    CHECK(even.output.find("classical solution") != std::string::npos);
}

TEST_CASE("magic impossible reports the enumeration results") {
    const auto result = run_cli("magic --n 3 impossible");
    CHECK(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);
    CHECK(doc["exhaustive"]["matrices_valid"] == 0);
    CHECK(doc["exhaustive"]["matrices_checked"] == 512);
    CHECK(doc["exhaustive"]["best_strategy_wins"] == 8);
}

TEST_CASE("simulate is byte-deterministic and validates arguments") {
    const std::string args = "simulate --game magic --n 5 --strategy nlbox "
                             "--rounds 100000 --seed 7";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    const auto doc = nlohmann::json::parse(first.output);
    CHECK(doc["win_rate"] == 1.0);

    const auto zero_rounds = run_cli("simulate --game magic --n 3 --rounds 0 --seed 1");
    CHECK(zero_rounds.exit_code == 2);
}

TEST_CASE("box diagnostics print exact values") {
    const auto chsh = run_cli("box --check chsh");
    CHECK(chsh.exit_code == 0);
    const auto doc = nlohmann::json::parse(chsh.output);
    CHECK(doc["pr_box"] == "4");
    CHECK(doc["local_deterministic_max"] == "2");

    const auto nosig = run_cli("box --check nosignalling");
    CHECK(nosig.exit_code == 0);
    CHECK(nlohmann::json::parse(nosig.output)["pr_box"] == "pass");
}

TEST_CASE("text format renders summaries") {
    const auto result = run_cli("ks verify --builtin --format text");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("72/72") != std::string::npos);
}

TEST_CASE("unknown arguments exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("simulate --game chess --rounds 5").exit_code == 2);
    CHECK(run_cli("ks verify --set /nonexistent/file.json").exit_code == 2);
}

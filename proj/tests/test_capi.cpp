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

// Exercises the shared-library surface exactly as an external consumer
// would: through ptgames.h alone.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "ptgames.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    ptg_string_free(s);
    return out;
}

struct SetGuard {
    ptg_ks_set* set = nullptr;
    ~SetGuard() { ptg_ks_set_free(set); }
};

struct ReportGuard {
    ptg_report* report = nullptr;
    ~ReportGuard() { ptg_report_free(report); }
};

} // namespace

TEST_CASE("version and error slot") {
    CHECK(std::string(ptg_version()) == "0.1.0");
    CHECK(ptg_ks_set_builtin(nullptr) == PTG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ptg_last_error()).find("null") != std::string::npos);
    SetGuard guard;
    CHECK(ptg_ks_set_builtin(&guard.set) == PTG_OK);
    CHECK(std::string(ptg_last_error()).empty());
}

TEST_CASE("built-in set accessors") {
    SetGuard guard;
    REQUIRE(ptg_ks_set_builtin(&guard.set) == PTG_OK);
    int dimension = 0, vectors = 0, bases = 0;
    CHECK(ptg_ks_set_dimension(guard.set, &dimension) == PTG_OK);
    CHECK(ptg_ks_set_vector_count(guard.set, &vectors) == PTG_OK);
    CHECK(ptg_ks_set_basis_count(guard.set, &bases) == PTG_OK);
    CHECK(dimension == 4);
    CHECK(vectors == 18);
    CHECK(bases == 9);
}

TEST_CASE("set documents round-trip and fail with distinct statuses") {
    SetGuard builtin;
    REQUIRE(ptg_ks_set_builtin(&builtin.set) == PTG_OK);
    char* json = nullptr;
    REQUIRE(ptg_ks_set_to_json(builtin.set, &json) == PTG_OK);
    const std::string text = take(json);

    SetGuard reloaded;
    CHECK(ptg_ks_set_parse(text.c_str(), &reloaded.set) == PTG_OK);
    char* again = nullptr;
    REQUIRE(ptg_ks_set_to_json(reloaded.set, &again) == PTG_OK);
    CHECK(take(again) == text);

    SetGuard bad;
    CHECK(ptg_ks_set_parse("{", &bad.set) == PTG_ERR_PARSE);
    CHECK(ptg_ks_set_parse(R"({"dimension":4,
        "vectors":[[1,0,0,0],[1,1,0,0],[0,0,1,0],[0,0,0,1]],
        "bases":[[0,1,2,3]]})", &bad.set) == PTG_ERR_ORTHOGONALITY);
    CHECK(std::string(ptg_last_error()).find("basis 1") != std::string::npos);
    CHECK(ptg_ks_set_parse(R"({"dimension":4,
        "vectors":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
        "bases":[[0,1,2]]})", &bad.set) == PTG_ERR_ARITY);
    CHECK(ptg_ks_set_parse(R"({"dimension":4,
        "vectors":[[1,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
        "bases":[[0,1,2,3]]})", &bad.set) == PTG_ERR_DIMENSION);
    CHECK(ptg_ks_set_parse(R"({"dimension":4,
        "vectors":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
        "bases":[[0,1,2,7]]})", &bad.set) == PTG_ERR_DANGLING_INDEX);
}

TEST_CASE("verification reports through the C surface") {
    SetGuard set;
    REQUIRE(ptg_ks_set_builtin(&set.set) == PTG_OK);

    ReportGuard builtin_report;
    REQUIRE(ptg_ks_verify(set.set, 1, &builtin_report.report) == PTG_OK);
    long long total = 0, won = 0;
    CHECK(ptg_report_cases_total(builtin_report.report, &total) == PTG_OK);
    CHECK(ptg_report_cases_won(builtin_report.report, &won) == PTG_OK);
    CHECK(total == 72);
    CHECK(won == 72);

    char* json = nullptr;
    REQUIRE(ptg_report_to_json(builtin_report.report, &json) == PTG_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["game"] == "impossible-colouring");
    CHECK(doc["parameters"]["quad"] == "builtin");
    CHECK(doc["parameters"]["set"] == "cabello18");
    CHECK(doc["cases_total"] == 72);
    CHECK(doc["cases_won"] == 72);
    CHECK(doc["failures"].is_array());
    CHECK(doc["failures"].empty());
    CHECK(doc["tool_version"] == "0.1.0");

    ReportGuard synthesized_report;
    REQUIRE(ptg_ks_verify(set.set, 0, &synthesized_report.report) == PTG_OK);
    CHECK(ptg_report_cases_won(synthesized_report.report, &won) == PTG_OK);
    CHECK(won == 72);
}

TEST_CASE("permutation plus synthesized verification") {
    SetGuard set;
    REQUIRE(ptg_ks_set_builtin(&set.set) == PTG_OK);
    const int order[9] = {8, 0, 1, 2, 3, 4, 5, 6, 7};
    SetGuard permuted;
    REQUIRE(ptg_ks_set_permute(set.set, order, 9, &permuted.set) == PTG_OK);

    // The built-in tables no longer fit a reordered set.
    ReportGuard refused;
    CHECK(ptg_ks_verify(permuted.set, 1, &refused.report) == PTG_ERR_INVALID_ARGUMENT);

    ReportGuard report;
    REQUIRE(ptg_ks_verify(permuted.set, 0, &report.report) == PTG_OK);
    long long total = 0, won = 0;
    CHECK(ptg_report_cases_total(report.report, &total) == PTG_OK);
    CHECK(ptg_report_cases_won(report.report, &won) == PTG_OK);
    CHECK(total == 72);
    CHECK(won == 72);

    const int bad_order[9] = {0, 0, 1, 2, 3, 4, 5, 6, 7};
    SetGuard rejected;
    CHECK(ptg_ks_set_permute(set.set, bad_order, 9, &rejected.set) ==
          PTG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("colourability analysis document") {
    SetGuard set;
    REQUIRE(ptg_ks_set_builtin(&set.set) == PTG_OK);
    for (int backtrack : {0, 1}) {
        char* json = nullptr;
        REQUIRE(ptg_ks_colour_analysis(set.set, backtrack, &json) == PTG_OK);
        const auto doc = nlohmann::json::parse(take(json));
        CHECK(doc["colourings"] == 0);
        CHECK(doc["parity_witness"] == true);
        CHECK(doc["prefix_length"] == 8);
        CHECK(doc["residual_count"] == 1);
        CHECK(doc["already_colourable"] == false);
        bool contains_contextual_vector = false;
        for (const auto& entry : doc["repairable"])
            if (entry["vector"] == "(0,1,-1,0)") contains_contextual_vector = true;
        CHECK(contains_contextual_vector);
        CHECK(doc["sufficient_condition"]["satisfied"] == true);
        CHECK(doc["sufficient_condition"]["p"] == 8);
        CHECK(doc["sufficient_condition"]["k"] == 1);
        REQUIRE(doc["sufficient_condition"]["flip_vectors"].size() == 1);
        CHECK(doc["sufficient_condition"]["flip_vectors"][0]["vector"] == "(0,1,-1,0)");
    }
}

TEST_CASE("magic square through the C surface") {
    ReportGuard nlbox;
    REQUIRE(ptg_magic_verify_nlbox(7, &nlbox.report) == PTG_OK);
    long long total = 0, won = 0;
    CHECK(ptg_report_cases_total(nlbox.report, &total) == PTG_OK);
    CHECK(ptg_report_cases_won(nlbox.report, &won) == PTG_OK);
    CHECK(total == 98);
    CHECK(won == 98);

    ReportGuard quantum3;
    REQUIRE(ptg_magic_verify_quantum(3, &quantum3.report) == PTG_OK);
    CHECK(ptg_report_cases_won(quantum3.report, &won) == PTG_OK);
    CHECK(won == 72);

    ReportGuard quantum5;
    REQUIRE(ptg_magic_verify_quantum(5, &quantum5.report) == PTG_OK);
    CHECK(ptg_report_cases_total(quantum5.report, &total) == PTG_OK);
    CHECK(ptg_report_cases_won(quantum5.report, &won) == PTG_OK);
    CHECK(won == total);

    ReportGuard even;
    CHECK(ptg_magic_verify_nlbox(4, &even.report) == PTG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ptg_last_error()).find("odd") != std::string::npos);

    char* json = nullptr;
    REQUIRE(ptg_magic_impossibility(3, &json) == PTG_OK);
    const auto doc = nlohmann::json::parse(take(json));
    CHECK(doc["parity_contradiction"] == true);
    CHECK(doc["exhaustive"]["matrices_checked"] == 512);
    CHECK(doc["exhaustive"]["matrices_valid"] == 0);
    CHECK(doc["exhaustive"]["strategy_pairs_checked"] == 4096);
    CHECK(doc["exhaustive"]["best_strategy_wins"] == 8);

    REQUIRE(ptg_magic_impossibility(5, &json) == PTG_OK);
    const auto doc5 = nlohmann::json::parse(take(json));
    CHECK(doc5["parity_contradiction"] == true);
    CHECK(doc5["exhaustive"].is_null());
}

TEST_CASE("box diagnostics") {
    int64_t num = 0, den = 0;
    CHECK(ptg_box_chsh_pr(&num, &den) == PTG_OK);
    CHECK(num == 4);
    CHECK(den == 1);
    CHECK(ptg_box_chsh_local_max(&num, &den) == PTG_OK);
    CHECK(num == 2);
    CHECK(den == 1);
    int passes = 0;
    CHECK(ptg_box_no_signalling_pr(&passes) == PTG_OK);
    CHECK(passes == 1);
}

TEST_CASE("simulation documents are deterministic byte for byte") {
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(ptg_simulate("magic", 5, nullptr, "nlbox", 10000, 7, &first) == PTG_OK);
    REQUIRE(ptg_simulate("magic", 5, nullptr, "nlbox", 10000, 7, &second) == PTG_OK);
    const std::string doc1 = take(first);
    CHECK(doc1 == take(second));
    const auto parsed = nlohmann::json::parse(doc1);
    CHECK(parsed["game"] == "magic-square");
    CHECK(parsed["rounds"] == 10000);
    CHECK(parsed["wins"] == 10000);
    CHECK(parsed["win_rate"] == 1.0);
    CHECK(parsed["parameters"]["seed"] == "7");

    char* ks_doc = nullptr;
    REQUIRE(ptg_simulate("ks", 0, nullptr, "nlbox", 5000, 3, &ks_doc) == PTG_OK);
    const auto ks_parsed = nlohmann::json::parse(take(ks_doc));
    CHECK(ks_parsed["game"] == "impossible-colouring");
    CHECK(ks_parsed["win_rate"] == 1.0);
    CHECK(ks_parsed["parameters"]["quad"] == "builtin");

    char* quantum_doc = nullptr;
    REQUIRE(ptg_simulate("magic", 3, nullptr, "quantum", 2000, 5, &quantum_doc) == PTG_OK);
    CHECK(nlohmann::json::parse(take(quantum_doc))["win_rate"] == 1.0);

    char* out = nullptr;
    CHECK(ptg_simulate("chess", 3, nullptr, "nlbox", 10, 0, &out) ==
          PTG_ERR_INVALID_ARGUMENT);
    CHECK(ptg_simulate("magic", 3, nullptr, "nlbox", 0, 0, &out) ==
          PTG_ERR_INVALID_ARGUMENT);
    CHECK(ptg_simulate("ks", 0, nullptr, "quantum", 10, 0, &out) ==
          PTG_ERR_INVALID_ARGUMENT);
}

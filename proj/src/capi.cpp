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

// Implementation of the extern "C" surface declared in include/ptgames.h.
// Exceptions from the core never cross the boundary: they are mapped to
// status codes with the message stashed in a thread-local slot.

#include "ptgames.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "game.hpp"
#include "ks_json.hpp"
#include "kscolour.hpp"
#include "ksgame.hpp"
#include "magicsquare.hpp"
#include "nlbox.hpp"
#include "quantumstrat.hpp"
#include "report_json.hpp"
#include "version.hpp"

struct ptg_ks_set {
    ptg::KSSet set;
};

struct ptg_report {
    ptg::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

ptg_status status_of(ptg::ErrorKind kind) {
    switch (kind) {
        case ptg::ErrorKind::InvalidArgument: return PTG_ERR_INVALID_ARGUMENT;
        case ptg::ErrorKind::Parse: return PTG_ERR_PARSE;
        case ptg::ErrorKind::Dimension: return PTG_ERR_DIMENSION;
        case ptg::ErrorKind::Arity: return PTG_ERR_ARITY;
        case ptg::ErrorKind::Orthogonality: return PTG_ERR_ORTHOGONALITY;
        case ptg::ErrorKind::DuplicateVector: return PTG_ERR_DUPLICATE_VECTOR;
        case ptg::ErrorKind::DuplicateMember: return PTG_ERR_DUPLICATE_MEMBER;
        case ptg::ErrorKind::DanglingIndex: return PTG_ERR_DANGLING_INDEX;
        case ptg::ErrorKind::NotSatisfied: return PTG_ERR_NOT_SATISFIED;
        case ptg::ErrorKind::Internal: return PTG_ERR_INTERNAL;
    }
    return PTG_ERR_INTERNAL;
}

template <typename Fn>
ptg_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PTG_OK;
    } catch (const ptg::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PTG_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool condition, const char* message) {
    if (!condition) throw ptg::Error(ptg::ErrorKind::InvalidArgument, message);
}

std::string vector_string(const ptg::KSSet& set, int vector_id) {
    std::string s = "(";
    const auto& c = set.vectors[vector_id].components;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

} // namespace

extern "C" {

PTG_API const char* ptg_version(void) { return ptg::kToolVersion; }

PTG_API const char* ptg_last_error(void) { return g_last_error.c_str(); }

PTG_API void ptg_string_free(char* s) { delete[] s; }

PTG_API ptg_status ptg_ks_set_builtin(ptg_ks_set** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = new ptg_ks_set{ptg::builtin_cabello18()};
    });
}

PTG_API ptg_status ptg_ks_set_parse(const char* json_text, ptg_ks_set** out) {
    return wrap([&] {
        require(json_text != nullptr && out != nullptr, "arguments must not be null");
        *out = new ptg_ks_set{ptg::ks_set_from_json(json_text)};
    });
}

PTG_API ptg_status ptg_ks_set_to_json(const ptg_ks_set* set, char** json_out) {
    return wrap([&] {
        require(set != nullptr && json_out != nullptr, "arguments must not be null");
        *json_out = copy_string(ptg::ks_set_to_json(set->set));
    });
}

PTG_API ptg_status ptg_ks_set_permute(const ptg_ks_set* set, const int* order,
                                      size_t count, ptg_ks_set** out) {
    return wrap([&] {
        require(set != nullptr && order != nullptr && out != nullptr,
                "arguments must not be null");
        *out = new ptg_ks_set{ptg::permute_bases(set->set, {order, order + count})};
    });
}

PTG_API ptg_status ptg_ks_set_dimension(const ptg_ks_set* set, int* out) {
    return wrap([&] {
        require(set != nullptr && out != nullptr, "arguments must not be null");
        *out = set->set.dimension;
    });
}

PTG_API ptg_status ptg_ks_set_vector_count(const ptg_ks_set* set, int* out) {
    return wrap([&] {
        require(set != nullptr && out != nullptr, "arguments must not be null");
        *out = static_cast<int>(set->set.vectors.size());
    });
}

PTG_API ptg_status ptg_ks_set_basis_count(const ptg_ks_set* set, int* out) {
    return wrap([&] {
        require(set != nullptr && out != nullptr, "arguments must not be null");
        *out = static_cast<int>(set->set.bases.size());
    });
}

PTG_API void ptg_ks_set_free(ptg_ks_set* set) { delete set; }

PTG_API ptg_status ptg_ks_colour_analysis(const ptg_ks_set* set, int use_backtracking,
                                          char** json_out) {
    return wrap([&] {
        require(set != nullptr && json_out != nullptr, "arguments must not be null");
        const auto& ks = set->set;
        const auto mode = use_backtracking ? ptg::ColouringMode::Backtracking
                                           : ptg::ColouringMode::Exhaustive;
        const long long colourings = ptg::count_valid_colourings(ks, mode);
        const auto repair = ptg::contextual_repair_search(ks);
        const auto condition = ptg::check_sufficient_condition(ks);

        nlohmann::ordered_json doc;
        doc["set"] = ks.name;
        doc["dimension"] = ks.dimension;
        doc["vector_count"] = ks.vectors.size();
        doc["basis_count"] = ks.bases.size();
        doc["mode"] = use_backtracking ? "backtrack" : "exhaustive";
        doc["colourings"] = colourings;
        doc["parity_witness"] = ptg::parity_witness_holds(ks);
        doc["prefix_length"] = condition.prefix_length;
        doc["residual_count"] = condition.residual_count;
        doc["already_colourable"] = repair.already_colourable;
        nlohmann::ordered_json repairable = nlohmann::ordered_json::array();
        for (int v : repair.repairable) {
            nlohmann::ordered_json entry;
            entry["id"] = v;
            entry["vector"] = vector_string(ks, v);
            repairable.push_back(std::move(entry));
        }
        doc["repairable"] = std::move(repairable);
        nlohmann::ordered_json cond;
        cond["satisfied"] = condition.satisfied;
        cond["degenerate"] = condition.degenerate;
        cond["p"] = condition.prefix_length;
        cond["k"] = condition.residual_count;
        nlohmann::ordered_json flips = nlohmann::ordered_json::array();
        for (int v : condition.flip_vectors) {
            nlohmann::ordered_json entry;
            entry["id"] = v;
            entry["vector"] = vector_string(ks, v);
            flips.push_back(std::move(entry));
        }
        cond["flip_vectors"] = std::move(flips);
        if (!condition.satisfied) cond["diagnosis"] = condition.diagnosis;
        doc["sufficient_condition"] = std::move(cond);
        doc["tool_version"] = ptg::kToolVersion;
        *json_out = copy_string(doc.dump(2));
    });
}

PTG_API ptg_status ptg_ks_verify(const ptg_ks_set* set, int use_builtin_quad,
                                 ptg_report** out) {
    return wrap([&] {
        require(set != nullptr && out != nullptr, "arguments must not be null");
        const auto& ks = set->set;
        ptg::VerificationReport report;
        if (use_builtin_quad) {
            require(ks == ptg::builtin_cabello18(),
                    "the built-in strategy tables only fit the built-in set");
            report = ptg::ks_verify(ks, ptg::builtin_quad_4d(), "builtin");
        } else {
            report = ptg::ks_verify(ks, ptg::synthesize_quad(ks), "synthesized");
        }
        *out = new ptg_report{std::move(report)};
    });
}

PTG_API ptg_status ptg_magic_verify_nlbox(int n, ptg_report** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = new ptg_report{ptg::magic_verify_nlbox(n)};
    });
}

PTG_API ptg_status ptg_magic_verify_quantum(int n, ptg_report** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = new ptg_report{n == 3 ? ptg::quantum_verify_n3() : ptg::quantum_verify_odd(n)};
    });
}

PTG_API ptg_status ptg_magic_impossibility(int n, char** json_out) {
    return wrap([&] {
        require(json_out != nullptr, "json_out must not be null");
        const auto result = ptg::classical_impossibility(n);
        nlohmann::ordered_json doc;
        doc["game"] = "magic-square";
        doc["n"] = result.n;
        doc["parity_contradiction"] = result.parity_contradiction;
        if (result.exhaustive_ran) {
            nlohmann::ordered_json ex;
            ex["matrices_checked"] = result.matrices_checked;
            ex["matrices_valid"] = result.matrices_valid;
            ex["strategy_pairs_checked"] = result.strategy_pairs_checked;
            ex["best_strategy_wins"] = result.best_strategy_wins;
            ex["input_pairs"] = result.input_pairs;
            doc["exhaustive"] = std::move(ex);
        } else {
            doc["exhaustive"] = nullptr;
        }
        doc["tool_version"] = ptg::kToolVersion;
        *json_out = copy_string(doc.dump(2));
    });
}

PTG_API ptg_status ptg_box_chsh_pr(int64_t* num, int64_t* den) {
    return wrap([&] {
        require(num != nullptr && den != nullptr, "arguments must not be null");
        const auto value = ptg::chsh_value(ptg::CorrelationBox::pr());
        *num = value.num;
        *den = value.den;
    });
}

PTG_API ptg_status ptg_box_chsh_local_max(int64_t* num, int64_t* den) {
    return wrap([&] {
        require(num != nullptr && den != nullptr, "arguments must not be null");
        ptg::Rational best(0);
        for (int bits = 0; bits < 16; ++bits) {
            const auto box = ptg::CorrelationBox::local_deterministic(
                bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1);
            const auto value = ptg::chsh_value(box);
            if (best < value) best = value;
        }
        *num = best.num;
        *den = best.den;
    });
}

PTG_API ptg_status ptg_box_no_signalling_pr(int* passes) {
    return wrap([&] {
        require(passes != nullptr, "passes must not be null");
        const auto result = ptg::no_signalling_check(ptg::CorrelationBox::pr());
        *passes = result.status == ptg::BoxCheckStatus::Pass ? 1 : 0;
    });
}

PTG_API ptg_status ptg_simulate(const char* game, int n, const ptg_ks_set* set,
                                const char* strategy, long long rounds, uint64_t seed,
                                char** json_out) {
    return wrap([&] {
        require(game != nullptr && strategy != nullptr && json_out != nullptr,
                "arguments must not be null");
        const std::string game_name(game);
        const std::string strategy_name(strategy);
        std::map<std::string, std::string> parameters;
        parameters["strategy"] = strategy_name;
        parameters["seed"] = std::to_string(seed);
        ptg::SimulationStats stats;
        if (game_name == "ks") {
            require(strategy_name == "nlbox", "the ks game simulates the nlbox strategy only");
            if (set == nullptr) {
                const auto ks = ptg::builtin_cabello18();
                stats = ptg::ks_simulate(ks, ptg::builtin_quad_4d(), rounds, seed);
                parameters["set"] = ks.name;
                parameters["quad"] = "builtin";
            } else {
                stats = ptg::ks_simulate(set->set, ptg::synthesize_quad(set->set), rounds, seed);
                parameters["set"] = set->set.name;
                parameters["quad"] = "synthesized";
            }
            *json_out = copy_string(ptg::stats_to_json("impossible-colouring", parameters, stats));
        } else if (game_name == "magic") {
            parameters["n"] = std::to_string(n);
            if (strategy_name == "nlbox") {
                stats = ptg::magic_simulate_nlbox(n, rounds, seed);
            } else if (strategy_name == "quantum") {
                stats = ptg::quantum_simulate(n, rounds, seed);
            } else {
                throw ptg::Error(ptg::ErrorKind::InvalidArgument,
                                 "unknown strategy '" + strategy_name + "'");
            }
            *json_out = copy_string(ptg::stats_to_json("magic-square", parameters, stats));
        } else {
            throw ptg::Error(ptg::ErrorKind::InvalidArgument,
                             "unknown game '" + game_name + "' (expected ks or magic)");
        }
    });
}

PTG_API ptg_status ptg_report_cases_total(const ptg_report* report, long long* out) {
    return wrap([&] {
        require(report != nullptr && out != nullptr, "arguments must not be null");
        *out = report->report.cases_total;
    });
}

PTG_API ptg_status ptg_report_cases_won(const ptg_report* report, long long* out) {
    return wrap([&] {
        require(report != nullptr && out != nullptr, "arguments must not be null");
        *out = report->report.cases_won;
    });
}

PTG_API ptg_status ptg_report_to_json(const ptg_report* report, char** json_out) {
    return wrap([&] {
        require(report != nullptr && json_out != nullptr, "arguments must not be null");
        *json_out = copy_string(ptg::report_to_json(report->report));
    });
}

PTG_API void ptg_report_free(ptg_report* report) { delete report; }

} // extern "C"

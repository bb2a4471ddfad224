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

// Command-line front end. Talks to the core exclusively through the C API.
//
// Exit codes: 0 = all verified, 1 = verification failure found,
// 2 = input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptgames.h"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct KsSetDeleter {
    void operator()(ptg_ks_set* s) const { ptg_ks_set_free(s); }
};
struct ReportDeleter {
    void operator()(ptg_report* r) const { ptg_report_free(r); }
};
using KsSetHandle = std::unique_ptr<ptg_ks_set, KsSetDeleter>;
using ReportHandle = std::unique_ptr<ptg_report, ReportDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ptg_string_free(s);
    return out;
}

[[noreturn]] void fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitInputError);
}

void check(ptg_status status) {
    if (status != PTG_OK) fail_input(ptg_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

KsSetHandle load_set(const std::string& path) {
    const std::string text = read_file(path);
    ptg_ks_set* raw = nullptr;
    check(ptg_ks_set_parse(text.c_str(), &raw));
    return KsSetHandle(raw);
}

KsSetHandle builtin_set() {
    ptg_ks_set* raw = nullptr;
    check(ptg_ks_set_builtin(&raw));
    return KsSetHandle(raw);
}

// Permutations are entered with the 1-based basis labels used in reports.
KsSetHandle apply_permutation(const KsSetHandle& set, const std::string& permutation) {
    std::vector<int> order;
    std::stringstream stream(permutation);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            order.push_back(std::stoi(item) - 1);
        } catch (const std::exception&) {
            fail_input("permutation entries must be integers: '" + item + "'");
        }
    }
    ptg_ks_set* raw = nullptr;
    check(ptg_ks_set_permute(set.get(), order.data(), order.size(), &raw));
    return KsSetHandle(raw);
}

int print_report(const ReportHandle& report, const std::string& format) {
    long long total = 0, won = 0;
    check(ptg_report_cases_total(report.get(), &total));
    check(ptg_report_cases_won(report.get(), &won));
    char* json = nullptr;
    check(ptg_report_to_json(report.get(), &json));
    const std::string text = take_string(json);
    if (format == "text") {
        const auto doc = nlohmann::json::parse(text);
        std::cout << doc["game"].get<std::string>() << ": " << won << "/" << total
                  << " cases won\n";
        for (const auto& failure : doc["failures"])
            std::cout << "  FAIL " << failure["inputs"].get<std::string>() << " "
                      << failure["branch"].get<std::string>() << " -> "
                      << failure["outputs"].get<std::string>() << " ["
                      << failure["violated"].get<std::string>() << "]\n";
    } else {
        std::cout << text << "\n";
    }
    return won == total ? kExitVerified : kExitVerificationFailure;
}

void print_json_or_text(const std::string& json, const std::string& format,
                        const std::string& text_summary) {
    if (format == "text")
        std::cout << text_summary << "\n";
    else
        std::cout << json << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-telepathy game verification laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ptg_version()));

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // ---- ks ----------------------------------------------------------
    auto* ks = app.add_subcommand("ks", "impossible-colouring game over a KS set");
    ks->fallthrough();
    ks->require_subcommand(1);

    std::string ks_set_path;
    bool ks_builtin = false;
    std::string ks_permutation;
    auto* ks_verify = ks->add_subcommand(
        "verify", "verify the single-box strategy over every promise pair");
    ks_verify->fallthrough();
    ks_verify->add_option("--set", ks_set_path, "KS-set JSON document");
    ks_verify->add_flag("--builtin", ks_builtin,
                        "use the built-in 18-vector set and its strategy tables");
    ks_verify->add_option("--permutation", ks_permutation,
                          "comma-separated 1-based basis order, e.g. 9,1,2,3,4,5,6,7,8");

    std::string colour_set_path;
    std::string colour_mode = "exhaustive";
    auto* ks_colour = ks->add_subcommand("colour", "colourability and repair analysis");
    ks_colour->fallthrough();
    ks_colour->add_option("--set", colour_set_path, "KS-set JSON document (default: built-in)");
    ks_colour->add_option("--mode", colour_mode, "colouring count mode")
        ->check(CLI::IsMember({"exhaustive", "backtrack"}))
        ->capture_default_str();

    // ---- magic -------------------------------------------------------
    auto* magic = app.add_subcommand("magic", "odd-size magic-square game");
    magic->fallthrough();
    int magic_n = 3;
    std::string magic_strategy = "nlbox";
    std::string magic_action;
    magic->add_option("--n", magic_n, "square size (odd, >= 3)")->required();
    magic->add_option("--strategy", magic_strategy, "strategy to verify")
        ->check(CLI::IsMember({"nlbox", "quantum", "classical-search"}))
        ->capture_default_str();
    magic->add_option("action", magic_action, "verify | impossible")
        ->required()
        ->check(CLI::IsMember({"verify", "impossible"}));

    // ---- simulate ----------------------------------------------------
    auto* simulate = app.add_subcommand("simulate", "seeded round-after-round play");
    simulate->fallthrough();
    std::string sim_game;
    int sim_n = 3;
    std::string sim_set_path;
    std::string sim_strategy = "nlbox";
    long long sim_rounds = 0;
    std::uint64_t sim_seed = 0;
    simulate->add_option("--game", sim_game, "ks | magic")
        ->required()
        ->check(CLI::IsMember({"ks", "magic"}));
    simulate->add_option("--n", sim_n, "magic square size");
    simulate->add_option("--set", sim_set_path, "KS-set JSON document (ks game)");
    simulate->add_option("--strategy", sim_strategy, "nlbox | quantum")
        ->capture_default_str();
    simulate->add_option("--rounds", sim_rounds, "number of rounds (>= 1)")->required();
    simulate->add_option("--seed", sim_seed, "PRNG seed")->capture_default_str();

    // ---- box ---------------------------------------------------------
    auto* box = app.add_subcommand("box", "NL-box diagnostics");
    box->fallthrough();
    std::string box_check;
    box->add_option("--check", box_check, "chsh | nosignalling")
        ->required()
        ->check(CLI::IsMember({"chsh", "nosignalling"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (ks_verify->parsed()) {
        KsSetHandle set;
        bool use_builtin_quad = false;
        if (!ks_set_path.empty() && ks_builtin)
            fail_input("--set and --builtin are mutually exclusive");
        if (!ks_set_path.empty()) {
            set = load_set(ks_set_path);
        } else {
            set = builtin_set();
            use_builtin_quad = ks_permutation.empty();
        }
        if (!ks_permutation.empty()) set = apply_permutation(set, ks_permutation);
        ptg_report* raw = nullptr;
        check(ptg_ks_verify(set.get(), use_builtin_quad ? 1 : 0, &raw));
        return print_report(ReportHandle(raw), format);
    }

    if (ks_colour->parsed()) {
        KsSetHandle set = colour_set_path.empty() ? builtin_set() : load_set(colour_set_path);
        char* json = nullptr;
        check(ptg_ks_colour_analysis(set.get(), colour_mode == "backtrack" ? 1 : 0, &json));
        const std::string text = take_string(json);
        if (format == "text") {
            const auto doc = nlohmann::json::parse(text);
            std::cout << "set " << doc["set"].get<std::string>() << ": colourings "
                      << doc["colourings"] << ", parity witness "
                      << (doc["parity_witness"].get<bool>() ? "holds" : "absent")
                      << ", prefix p=" << doc["prefix_length"]
                      << ", residual k=" << doc["residual_count"] << "\n";
            std::cout << "repairable vectors:";
            for (const auto& entry : doc["repairable"])
                std::cout << " " << entry["vector"].get<std::string>();
            std::cout << "\n";
        } else {
            std::cout << text << "\n";
        }
        return kExitVerified;
    }

    if (magic->parsed()) {
        if (magic_action == "impossible" || magic_strategy == "classical-search") {
            char* json = nullptr;
            check(ptg_magic_impossibility(magic_n, &json));
            const std::string text = take_string(json);
            const auto doc = nlohmann::json::parse(text);
            bool confirmed = doc["parity_contradiction"].get<bool>();
            std::string summary = "n=" + std::to_string(magic_n) + ": parity contradiction " +
                                  (confirmed ? "holds" : "absent");
            if (!doc["exhaustive"].is_null()) {
                const auto& ex = doc["exhaustive"];
                confirmed = confirmed && ex["matrices_valid"].get<long long>() == 0 &&
                            ex["best_strategy_wins"].get<int>() < ex["input_pairs"].get<int>();
                summary += ", " + std::to_string(ex["matrices_valid"].get<long long>()) + " of " +
                           std::to_string(ex["matrices_checked"].get<long long>()) +
                           " grids valid, best deterministic strategy wins " +
                           std::to_string(ex["best_strategy_wins"].get<int>()) + " of " +
                           std::to_string(ex["input_pairs"].get<int>()) + " input pairs";
            }
            print_json_or_text(text, format, summary);
            return confirmed ? kExitVerified : kExitVerificationFailure;
        }
        ptg_report* raw = nullptr;
        if (magic_strategy == "quantum")
            check(ptg_magic_verify_quantum(magic_n, &raw));
        else
            check(ptg_magic_verify_nlbox(magic_n, &raw));
        return print_report(ReportHandle(raw), format);
    }

    if (simulate->parsed()) {
        KsSetHandle set;
        if (sim_game == "ks" && !sim_set_path.empty()) set = load_set(sim_set_path);
        char* json = nullptr;
        check(ptg_simulate(sim_game.c_str(), sim_n, set.get(), sim_strategy.c_str(),
                           sim_rounds, sim_seed, &json));
        const std::string text = take_string(json);
        if (format == "text") {
            const auto doc = nlohmann::json::parse(text);
            std::cout << doc["game"].get<std::string>() << ": " << doc["wins"] << "/"
                      << doc["rounds"] << " rounds won, win_rate " << doc["win_rate"] << "\n";
        } else {
            std::cout << text << "\n";
        }
        return kExitVerified;
    }

    if (box->parsed()) {
        if (box_check == "chsh") {
            int64_t pr_num = 0, pr_den = 0, local_num = 0, local_den = 0;
            check(ptg_box_chsh_pr(&pr_num, &pr_den));
            check(ptg_box_chsh_local_max(&local_num, &local_den));
            const auto show = [](int64_t num, int64_t den) {
                return den == 1 ? std::to_string(num)
                                : std::to_string(num) + "/" + std::to_string(den);
            };
            nlohmann::ordered_json doc;
            doc["check"] = "chsh";
            doc["pr_box"] = show(pr_num, pr_den);
            doc["local_deterministic_max"] = show(local_num, local_den);
            doc["tool_version"] = ptg_version();
            print_json_or_text(doc.dump(2), format,
                               "CHSH(PR box) = " + show(pr_num, pr_den) +
                                   ", max over 16 local deterministic boxes = " +
                                   show(local_num, local_den));
        } else {
            int passes = 0;
            check(ptg_box_no_signalling_pr(&passes));
            nlohmann::ordered_json doc;
            doc["check"] = "nosignalling";
            doc["pr_box"] = passes ? "pass" : "fail";
            doc["tool_version"] = ptg_version();
            print_json_or_text(doc.dump(2), format,
                               std::string("PR box no-signalling: ") +
                                   (passes ? "pass" : "fail"));
            if (!passes) return kExitVerificationFailure;
        }
        return kExitVerified;
    }

    return kExitInputError;
}

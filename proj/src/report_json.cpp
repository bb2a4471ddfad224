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
#include "report_json.hpp"

#include <json.hpp>

#include "version.hpp"

namespace ptg {

using ordered_json = nlohmann::ordered_json;

std::string report_to_json(const VerificationReport& report, int indent) {
    ordered_json doc;
    doc["game"] = report.game;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    doc["cases_total"] = report.cases_total;
    doc["cases_won"] = report.cases_won;
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json entry;
        entry["inputs"] = f.inputs;
        entry["branch"] = f.branch;
        entry["outputs"] = f.outputs;
        entry["violated"] = f.violated;
        failures.push_back(std::move(entry));
    }
    doc["failures"] = std::move(failures);
    doc["tool_version"] = kToolVersion;
    return doc.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report document: ") + e.what());
    }
    VerificationReport report;
    try {
        report.game = doc.at("game").get<std::string>();
        for (const auto& [key, value] : doc.at("parameters").items())
            report.parameters[key] = value.get<std::string>();
        report.cases_total = doc.at("cases_total").get<long long>();
        report.cases_won = doc.at("cases_won").get<long long>();
        for (const auto& entry : doc.at("failures")) {
            Failure f;
            f.inputs = entry.at("inputs").get<std::string>();
            f.branch = entry.at("branch").get<std::string>();
            f.outputs = entry.at("outputs").get<std::string>();
            f.violated = entry.at("violated").get<std::string>();
            report.failures.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report document: ") + e.what());
    }
    if (static_cast<long long>(report.failures.size()) !=
        report.cases_total - report.cases_won)
        throw Error(ErrorKind::Parse,
                    "report document: failures length does not equal cases_total - cases_won");
    return report;
}

std::string stats_to_json(const std::string& game,
                          const std::map<std::string, std::string>& parameters,
                          const SimulationStats& stats, int indent) {
    ordered_json doc;
    doc["game"] = game;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : parameters) params[key] = value;
    doc["parameters"] = std::move(params);
    doc["rounds"] = stats.rounds;
    doc["wins"] = stats.wins;
    doc["win_rate"] = stats.win_rate;
    doc["tool_version"] = kToolVersion;
    return doc.dump(indent);
}

} // namespace ptg

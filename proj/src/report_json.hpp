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
#ifndef PTGAMES_REPORT_JSON_HPP
#define PTGAMES_REPORT_JSON_HPP

#include <string>

#include "game.hpp"

namespace ptg {

// Report documents use a fixed key order:
//   {game, parameters, cases_total, cases_won, failures, tool_version}
// so serialized reports are diff-friendly CI artifacts.
std::string report_to_json(const VerificationReport& report, int indent = 2);
VerificationReport report_from_json(const std::string& text);

std::string stats_to_json(const std::string& game,
                          const std::map<std::string, std::string>& parameters,
                          const SimulationStats& stats, int indent = 2);

} // namespace ptg

#endif

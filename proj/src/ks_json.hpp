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
#ifndef PTGAMES_KS_JSON_HPP
#define PTGAMES_KS_JSON_HPP

#include <string>

#include "kscolour.hpp"

namespace ptg {

// KS-set document format:
//   {
//     "name": "cabello18",            // optional
//     "dimension": 4,
//     "vectors": [[0,0,0,1], ...],    // integer components, length = dimension
//     "bases": [[0,1,2,3], ...]       // 0-based indices into "vectors"
//   }
// Parsing validates every KSSet invariant and fails with a positioned
// diagnostic (distinct error kind per defect).
KSSet ks_set_from_json(const std::string& text);
std::string ks_set_to_json(const KSSet& set, int indent = 2);

} // namespace ptg

#endif

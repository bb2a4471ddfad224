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
#include "ks_json.hpp"

#include <json.hpp>

namespace ptg {

using ordered_json = nlohmann::ordered_json;

KSSet ks_set_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("KS-set document: ") + e.what());
    }
    KSSet set;
    try {
        if (!doc.is_object())
            throw Error(ErrorKind::Parse, "KS-set document: top level must be an object");
        set.name = doc.value("name", std::string("unnamed"));
        if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
            throw Error(ErrorKind::Parse, "KS-set document: missing integer field 'dimension'");
        set.dimension = doc["dimension"].get<int>();
        if (!doc.contains("vectors") || !doc["vectors"].is_array())
            throw Error(ErrorKind::Parse, "KS-set document: missing array field 'vectors'");
        if (!doc.contains("bases") || !doc["bases"].is_array())
            throw Error(ErrorKind::Parse, "KS-set document: missing array field 'bases'");
        std::size_t index = 0;
        for (const auto& entry : doc["vectors"]) {
            if (!entry.is_array())
                throw Error(ErrorKind::Parse, "KS-set document: vector " + std::to_string(index) +
                                                  " is not an array");
            KSVector v;
            for (const auto& c : entry) {
                if (!c.is_number_integer())
                    throw Error(ErrorKind::Parse,
                                "KS-set document: vector " + std::to_string(index) +
                                    " has a non-integer component");
                v.components.push_back(c.get<int>());
            }
            set.vectors.push_back(std::move(v));
            ++index;
        }
        index = 0;
        for (const auto& entry : doc["bases"]) {
            if (!entry.is_array())
                throw Error(ErrorKind::Parse, "KS-set document: basis " + std::to_string(index + 1) +
                                                  " is not an array");
            KSBasis basis;
            for (const auto& m : entry) {
                if (!m.is_number_integer())
                    throw Error(ErrorKind::Parse,
                                "KS-set document: basis " + std::to_string(index + 1) +
                                    " has a non-integer member index");
                basis.members.push_back(m.get<int>());
            }
            set.bases.push_back(std::move(basis));
            ++index;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("KS-set document: ") + e.what());
    }
    validate(set);
    return set;
}

std::string ks_set_to_json(const KSSet& set, int indent) {
    ordered_json doc;
    doc["name"] = set.name;
    doc["dimension"] = set.dimension;
    ordered_json vectors = ordered_json::array();
    for (const auto& v : set.vectors) vectors.push_back(v.components);
    doc["vectors"] = std::move(vectors);
    ordered_json bases = ordered_json::array();
    for (const auto& b : set.bases) bases.push_back(b.members);
    doc["bases"] = std::move(bases);
    return doc.dump(indent);
}

} // namespace ptg

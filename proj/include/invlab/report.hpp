/*
   Copyright 2026 The invlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INVLAB_REPORT_HPP
#define INVLAB_REPORT_HPP

#include <string>

#include <json.hpp>

#include "invlab/cech.hpp"

namespace invlab {

/// Exit codes: 0 pass, 1 theorem-violation alarm, 2 undetermined/resource,
/// 3 invalid scenario (raised before any report exists).
struct Report {
    nlohmann::json doc;
    std::string csv;       // primary CSV table, empty when the command has none
    std::string verdict;   // "pass" | "alarm" | "undetermined"
    int exit_code = 0;

    void finalize(const std::string& v) {
        verdict = v;
        exit_code = v == "pass" ? 0 : v == "alarm" ? 1 : 2;
        doc["verdict"] = v;
        doc["exit_code"] = exit_code;
    }
};

nlohmann::json component_json(const ComponentDim& c);
nlohmann::json observations_to_json(const std::vector<StageObservation>& obs);

/// Parse a CSV string back into rows of cells (used by the round-trip checks).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

} // namespace invlab

#endif

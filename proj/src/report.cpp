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

#include "invlab/report.hpp"

#include <sstream>

namespace invlab {

nlohmann::json observations_to_json(const std::vector<StageObservation>& obs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& o : obs) {
        arr.push_back({{"t", o.t}, {"dim", o.dim}, {"transition_rank", o.transition_rank}});
    }
    return arr;
}

nlohmann::json component_json(const ComponentDim& c) {
    nlohmann::json j;
    j["kind"] = c.finite() ? "finite" : "divergent";
    if (c.finite()) j["dim"] = c.dim;
    j["observations"] = observations_to_json(c.observations);
    return j;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace invlab

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

#ifndef INVLAB_SCENARIO_HPP
#define INVLAB_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "invlab/cech.hpp"
#include "invlab/groebner.hpp"
#include "invlab/group.hpp"

namespace invlab {

/// A declarative experiment description. Parsed and validated before any
/// computation; invalid scenarios fail with positioned diagnostics.
struct Scenario {
    std::string name;
    int field_index = 1; // 1 = Q, otherwise the cyclotomic index
    int vars = 0;
    std::vector<std::vector<std::vector<std::string>>> group_generator_text; // matrices, row major
    enum class IdealKind { SPlus, Unit, Zero, Explicit };
    IdealKind ideal_kind = IdealKind::Explicit;
    std::vector<std::string> ideal_text;
    int functor_i = 0;
    long n_min = -6;
    long n_max = 3;
    long coset_t_min = -5;
    long coset_t_max = 5;
    int window_extend = 20;
    CechPolicy policy;
    GroebnerBudget groebner;
    MonomialOrder groebner_order = MonomialOrder::GrevLex;
    struct Injection {
        long n_min = 0;
        long n_max = 8;
        int candidates = 8;
    } injection;
    int group_cap = 720;
    std::uint64_t seed = 1;
    nlohmann::json raw;
};

Scenario parse_scenario_json(const nlohmann::json& j, const std::string& origin);
Scenario parse_scenario_file(const std::string& path);

/// A scenario with the group closed and the ideal materialized as validated
/// invariant generators of IR in R.
struct ResolvedScenario {
    Scenario spec;
    MatrixGroup group;
    std::vector<MultiPoly> ideal_gens;
    long c = 1; // |G|!
};

ResolvedScenario resolve_scenario(const Scenario& s);

} // namespace invlab

#endif

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

#include "invlab/scenario.hpp"

#include <fstream>
#include <set>

#include "invlab/invariant.hpp"

namespace invlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& where, const std::string& what) {
    throw InputError(origin + ": " + where + ": " + what);
}

long get_int(const json& j, const std::string& origin, const std::string& where,
             long dflt, bool required = false) {
    if (!j.contains(where)) {
        if (required) fail(origin, where, "missing required field");
        return dflt;
    }
    if (!j.at(where).is_number_integer()) fail(origin, where, "expected an integer");
    return j.at(where).get<long>();
}

} // namespace

Scenario parse_scenario_json(const json& j, const std::string& origin) {
    if (!j.is_object()) fail(origin, "$", "scenario must be a JSON object");
    static const std::set<std::string> known{
        "name", "field", "vars", "group", "ideal", "functor", "degree_window",
        "coset", "window_extend", "policy", "groebner", "injection", "group_cap", "seed"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) fail(origin, it.key(), "unknown field");
    }
    Scenario s;
    s.raw = j;
    s.name = j.value("name", std::string("unnamed"));
    if (j.contains("field")) {
        const json& f = j.at("field");
        if (f.is_string() && (f == "Q" || f == "rationals")) s.field_index = 1;
        else if (f.is_object() && f.contains("cyclotomic")) {
            s.field_index = static_cast<int>(get_int(f, origin, "cyclotomic", 0, true));
            if (s.field_index < 2) fail(origin, "field.cyclotomic", "index must be >= 2");
        } else fail(origin, "field", "expected \"Q\" or {\"cyclotomic\": n}");
    }
    s.vars = static_cast<int>(get_int(j, origin, "vars", 0, true));
    if (s.vars < 1 || s.vars > 8) fail(origin, "vars", "expected 1..8 variables");

    if (j.contains("group")) {
        const json& g = j.at("group");
        if (!g.is_array()) fail(origin, "group", "expected a list of generator matrices");
        for (std::size_t k = 0; k < g.size(); ++k) {
            const json& mat = g[k];
            std::string where = "group[" + std::to_string(k) + "]";
            if (!mat.is_array() || static_cast<int>(mat.size()) != s.vars)
                fail(origin, where, "expected " + std::to_string(s.vars) + " rows");
            std::vector<std::vector<std::string>> rows;
            for (std::size_t rix = 0; rix < mat.size(); ++rix) {
                const json& row = mat[rix];
                if (!row.is_array() || static_cast<int>(row.size()) != s.vars)
                    fail(origin, where, "row " + std::to_string(rix) + " must have " +
                                            std::to_string(s.vars) + " entries");
                std::vector<std::string> cells;
                for (const json& cell : row) {
                    if (cell.is_number_integer()) cells.push_back(std::to_string(cell.get<long>()));
                    else if (cell.is_string()) cells.push_back(cell.get<std::string>());
                    else fail(origin, where, "matrix entries must be integers or field-element strings");
                }
                rows.push_back(std::move(cells));
            }
            s.group_generator_text.push_back(std::move(rows));
        }
    }

    if (j.contains("ideal")) {
        const json& id = j.at("ideal");
        if (id.is_string()) {
            std::string v = id.get<std::string>();
            if (v == "S+" || v == "S_plus" || v == "s_plus") s.ideal_kind = Scenario::IdealKind::SPlus;
            else if (v == "unit") s.ideal_kind = Scenario::IdealKind::Unit;
            else if (v == "zero") s.ideal_kind = Scenario::IdealKind::Zero;
            else fail(origin, "ideal", "unknown ideal keyword \"" + v + "\" (use \"S+\", \"unit\", \"zero\" or a list)");
        } else if (id.is_array()) {
            s.ideal_kind = Scenario::IdealKind::Explicit;
            for (const json& p : id) {
                if (!p.is_string()) fail(origin, "ideal", "generator entries must be polynomial strings");
                s.ideal_text.push_back(p.get<std::string>());
            }
        } else fail(origin, "ideal", "expected a keyword or a list of polynomial strings");
    } else {
        s.ideal_kind = Scenario::IdealKind::SPlus;
    }

    if (j.contains("functor")) {
        s.functor_i = static_cast<int>(get_int(j.at("functor"), origin, "i", 0, true));
        if (s.functor_i < 0) fail(origin, "functor.i", "must be >= 0");
    }
    if (j.contains("degree_window")) {
        const json& w = j.at("degree_window");
        s.n_min = get_int(w, origin, "n_min", s.n_min);
        s.n_max = get_int(w, origin, "n_max", s.n_max);
        if (s.n_min > s.n_max) fail(origin, "degree_window", "n_min > n_max");
    }
    if (j.contains("coset")) {
        const json& cs = j.at("coset");
        s.coset_t_min = get_int(cs, origin, "t_min", s.coset_t_min);
        s.coset_t_max = get_int(cs, origin, "t_max", s.coset_t_max);
        if (s.coset_t_min > s.coset_t_max) fail(origin, "coset", "t_min > t_max");
    }
    s.window_extend = static_cast<int>(get_int(j, origin, "window_extend", s.window_extend));
    if (j.contains("policy")) {
        const json& p = j.at("policy");
        s.policy.t_start = static_cast<int>(get_int(p, origin, "t_start", s.policy.t_start));
        s.policy.t_max = static_cast<int>(get_int(p, origin, "t_max", s.policy.t_max));
        s.policy.confirmation_window =
            static_cast<int>(get_int(p, origin, "confirmation_window", s.policy.confirmation_window));
        s.policy.monomial_budget = get_int(p, origin, "monomial_budget", s.policy.monomial_budget);
        if (p.contains("force_dense")) {
            if (!p.at("force_dense").is_boolean()) fail(origin, "policy.force_dense", "expected a boolean");
            s.policy.force_dense = p.at("force_dense").get<bool>();
        }
        if (s.policy.t_start < 1 || s.policy.t_max < s.policy.t_start)
            fail(origin, "policy", "need 1 <= t_start <= t_max");
        if (s.policy.confirmation_window < 1) fail(origin, "policy.confirmation_window", "must be >= 1");
    }
    if (j.contains("groebner")) {
        const json& g = j.at("groebner");
        s.groebner.max_pairs = get_int(g, origin, "max_pairs", s.groebner.max_pairs);
        s.groebner.max_basis = get_int(g, origin, "max_basis", s.groebner.max_basis);
        if (g.contains("order")) {
            std::string ord = g.at("order").is_string() ? g.at("order").get<std::string>() : "";
            if (ord == "grevlex") s.groebner_order = MonomialOrder::GrevLex;
            else if (ord == "lex") s.groebner_order = MonomialOrder::Lex;
            else fail(origin, "groebner.order", "expected \"grevlex\" or \"lex\"");
        }
    }
    if (j.contains("injection")) {
        const json& inj = j.at("injection");
        s.injection.n_min = get_int(inj, origin, "n_min", s.injection.n_min);
        s.injection.n_max = get_int(inj, origin, "n_max", s.injection.n_max);
        s.injection.candidates = static_cast<int>(get_int(inj, origin, "candidates", s.injection.candidates));
    }
    s.group_cap = static_cast<int>(get_int(j, origin, "group_cap", s.group_cap));
    s.seed = static_cast<std::uint64_t>(get_int(j, origin, "seed", 1));
    return s;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open scenario file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_scenario_json(j, path);
}

ResolvedScenario resolve_scenario(const Scenario& s) {
    ResolvedScenario rs;
    rs.spec = s;
    if (s.group_generator_text.empty()) {
        rs.group = trivial_group(s.vars);
    } else {
        std::vector<ExactMatrix> gens;
        for (std::size_t k = 0; k < s.group_generator_text.size(); ++k) {
            ExactMatrix mat(s.vars, s.vars);
            for (int i = 0; i < s.vars; ++i) {
                for (int jx = 0; jx < s.vars; ++jx) {
                    try {
                        mat.at(i, jx) = parse_field_element(s.group_generator_text[k][i][jx], s.field_index);
                    } catch (const InputError& e) {
                        throw InputError("group generator " + std::to_string(k + 1) + ", entry (" +
                                         std::to_string(i + 1) + "," + std::to_string(jx + 1) + "): " +
                                         e.what());
                    }
                }
            }
            gens.push_back(std::move(mat));
        }
        rs.group = close_group(gens, s.group_cap);
    }
    rs.c = factorial_checked(rs.group.order());

    switch (s.ideal_kind) {
        case Scenario::IdealKind::SPlus: {
            InvariantAlgebra alg = noether_generators(rs.group);
            rs.ideal_gens = alg.generators;
            break;
        }
        case Scenario::IdealKind::Unit:
            rs.ideal_gens = {MultiPoly::constant(s.vars, FieldElement::one())};
            break;
        case Scenario::IdealKind::Zero:
            rs.ideal_gens = {};
            break;
        case Scenario::IdealKind::Explicit: {
            for (std::size_t k = 0; k < s.ideal_text.size(); ++k) {
                try {
                    rs.ideal_gens.push_back(parse_poly(s.ideal_text[k], s.vars, s.field_index));
                } catch (const InputError& e) {
                    throw InputError("ideal generator " + std::to_string(k + 1) + ": " + e.what());
                }
            }
            break;
        }
    }
    validate_invariant_generators(rs.ideal_gens, rs.group);
    return rs;
}

} // namespace invlab

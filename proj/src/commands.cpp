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

#include "invlab/commands.hpp"

#include <sstream>

#include "invlab/invariant.hpp"
#include "invlab/oracle.hpp"
#include "invlab/prng.hpp"

namespace invlab {

namespace {

using nlohmann::json;

json preamble(const char* command, const ResolvedScenario& rs) {
    json doc;
    doc["command"] = command;
    doc["scenario"] = rs.spec.raw;
    doc["seed"] = rs.spec.seed;
    doc["group_order"] = rs.group.order();
    doc["c"] = rs.c;
    return doc;
}

long checked_pow(long base, int exp, const char* what) {
    long r = 1;
    for (int k = 0; k < exp; ++k) {
        if (base != 0 && r > 4000000000L / std::max(base, 1L))
            throw ResourceLimitError(std::string(what) + " exceeds the desk-scale budget");
        r *= base;
    }
    return r;
}

std::string value_text(const std::optional<ComponentDim>& v) {
    if (!v) return "undetermined";
    if (!v->finite()) return "divergent";
    return std::to_string(v->dim);
}

json entry_json(long t, long n, const std::optional<ComponentDim>& v, const std::string& note) {
    json e;
    e["t"] = t;
    e["n"] = n;
    if (v) {
        e["kind"] = v->finite() ? "finite" : "divergent";
        if (v->finite()) e["dim"] = v->dim;
        e["observations"] = observations_to_json(v->observations);
    } else {
        e["kind"] = "undetermined";
        if (!note.empty()) e["note"] = note;
    }
    return e;
}

json fit_json(const TailFit& fit) {
    json f;
    f["fitted"] = fit.fitted;
    if (!fit.fitted) return f;
    f["degree"] = fit.degree;
    f["window_from_t"] = fit.window_from;
    f["window_to_t"] = fit.window_to;
    json coeffs = json::array();
    for (const auto& c : fit.coeffs) coeffs.push_back(c.get_str());
    f["coeffs"] = coeffs;
    return f;
}

// invariant norm of a linear form: the product of its full G-orbit
MultiPoly group_norm(const MatrixGroup& group, const MultiPoly& linear) {
    MultiPoly prod = MultiPoly::constant(linear.num_vars(), FieldElement::one());
    for (const auto& sigma : group.elements) prod = prod * act_on_poly(sigma, linear);
    return prod;
}

} // namespace

long vanish_window_radius(int m, long c) {
    long hilbert = static_cast<long>(m) * (c - 1);
    long power = checked_pow(c - 1, m, "(c-1)^m window radius");
    return std::max(hilbert, power);
}

std::shared_ptr<CechContext> make_engine(const ResolvedScenario& rs) {
    if (rs.group.is_trivial())
        return std::make_shared<CechContext>(rs.spec.vars, rs.ideal_gens, rs.spec.policy);
    return std::make_shared<CechContext>(rs.group, rs.ideal_gens, rs.spec.policy);
}

Report cmd_invariants(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("invariants", rs);
    const MatrixGroup& group = rs.group;
    int m = rs.spec.vars;
    long c = rs.c;

    InvariantAlgebra alg = noether_generators(group);
    json gens = json::array();
    for (const auto& u : alg.generators) gens.push_back(u.to_string());
    std::vector<long> molien = molien_series(group, alg.slice_bound);
    bool molien_ok = true;
    json cert = json::array();
    for (long n = 0; n <= alg.slice_bound; ++n) {
        bool row_ok = alg.subalgebra_slice_dims[n] == alg.reynolds_slice_dims[n] &&
                      molien[n] == alg.reynolds_slice_dims[n];
        if (!row_ok) molien_ok = false;
        cert.push_back({{"n", n},
                        {"subalgebra_dim", alg.subalgebra_slice_dims[n]},
                        {"reynolds_dim", alg.reynolds_slice_dims[n]},
                        {"molien", molien[n]}});
    }
    rep.doc["noether"] = {{"generators", gens},
                          {"certificate", cert},
                          {"certificate_ok", alg.certificate_ok && molien_ok}};

    FundamentalInvariants fi =
        fundamental_invariants(group, rs.spec.seed, rs.spec.groebner, 5, rs.spec.groebner_order);
    json fj = json::array(), gj = json::array();
    for (const auto& f : fi.f) fj.push_back(f.to_string());
    for (const auto& g : fi.dual) gj.push_back(g.to_string(MonomialOrder::GrevLex, "D"));
    rep.doc["fundamental"] = {{"c", c},
                              {"f", fj},
                              {"dual", gj},
                              {"retries", fi.retries_used},
                              {"dual_retries", fi.dual_retries_used},
                              {"seed", fi.seed}};

    long reg_bound = static_cast<long>(m) * (c - 1) + c;
    bool regular = verify_regular_sequence(fi.f, reg_bound, rs.spec.groebner, rs.spec.groebner_order);
    bool dual_regular =
        verify_regular_sequence(fi.dual, reg_bound, rs.spec.groebner, rs.spec.groebner_order);
    rep.doc["regular_sequence"] = regular;
    rep.doc["dual_regular_sequence"] = dual_regular;

    QuotientProfile prof = quotient_profile(fi.f, c, rs.spec.groebner, rs.spec.groebner_order);
    std::vector<long> series = complete_intersection_series(m, c);
    bool matches_series = prof.dims == series;
    long expected_total = checked_pow(c, m, "c^m");
    json dims = json::array();
    std::ostringstream csv;
    csv << "degree,dim\n";
    for (std::size_t j = 0; j < prof.dims.size(); ++j) {
        dims.push_back(prof.dims[j]);
        csv << j << "," << prof.dims[j] << "\n";
    }
    rep.csv = csv.str();
    rep.doc["quotient_profile"] = {
        {"dims", dims},
        {"top_degree", prof.top_degree},
        {"total", prof.total},
        {"expected_total", expected_total},
        {"matches_complete_intersection_series", matches_series},
        {"hilbert_bound", prof.hilbert_bound},
        {"power_bound", prof.power_bound},
        {"bounds_differ", prof.bounds_differ},
        {"bound_discrepancy_flagged", prof.bounds_differ}};

    bool pass = alg.certificate_ok && molien_ok && regular && dual_regular && matches_series &&
                prof.total == expected_total;
    rep.finalize(pass ? "pass" : "alarm");
    return rep;
}

Report cmd_vanish_window(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("vanish-window", rs);
    int m = rs.spec.vars;
    int i = rs.spec.functor_i;
    long w_radius = vanish_window_radius(m, rs.c);
    long lo = -m - w_radius;
    long hi = w_radius;
    rep.doc["window"] = {{"lo", lo}, {"hi", hi}, {"radius", w_radius}, {"i", i}};
    auto ctx = make_engine(rs);

    auto scan = [&](long a, long b, json& rows, std::vector<long>& nonzero) -> bool {
        for (long n = a; n <= b; ++n) {
            std::optional<ComponentDim> v;
            std::string note;
            try {
                v = ctx->component(i, n);
            } catch (const UndeterminedError& e) {
                note = e.what();
            }
            rows.push_back(entry_json(0, n, v, note));
            if (!v) return false;
            if (v->nonzero()) nonzero.push_back(n);
        }
        return true;
    };

    json window_rows = json::array();
    std::vector<long> witnesses;
    bool determined = scan(lo, hi, window_rows, witnesses);
    rep.doc["window_components"] = window_rows;
    std::ostringstream csv;
    csv << "n,value\n";
    auto csv_rows = [&csv](const json& rows) {
        for (const auto& e : rows) {
            csv << e["n"].get<long>() << ","
                << (e["kind"] == "finite" ? std::to_string(e["dim"].get<long>())
                                          : e["kind"].get<std::string>())
                << "\n";
        }
    };
    if (!determined) {
        csv_rows(window_rows);
        rep.csv = csv.str();
        rep.doc["reason"] = "undetermined component inside the test window";
        rep.finalize("undetermined");
        return rep;
    }
    if (!witnesses.empty()) {
        csv_rows(window_rows);
        rep.csv = csv.str();
        rep.doc["hypothesis"] = "nonvanishing witnessed inside the window";
        rep.doc["witnesses"] = witnesses;
        rep.finalize("pass");
        return rep;
    }
    // the window vanishes; the theorem predicts everything vanishes
    long ext = rs.spec.window_extend;
    json ext_rows = json::array();
    std::vector<long> violations;
    bool det_lo = scan(lo - ext, lo - 1, ext_rows, violations);
    bool det_hi = scan(hi + 1, hi + ext, ext_rows, violations);
    rep.doc["extended_components"] = ext_rows;
    csv_rows(window_rows);
    csv_rows(ext_rows);
    rep.csv = csv.str();
    if (!det_lo || !det_hi) {
        rep.doc["reason"] = "undetermined component in the extended scan";
        rep.finalize("undetermined");
        return rep;
    }
    if (!violations.empty()) {
        rep.doc["violation_witnesses"] = violations;
        rep.doc["reason"] = "window vanishes but the extended scan does not";
        rep.finalize("alarm");
        return rep;
    }
    rep.doc["hypothesis"] = "window vanishes and the extended scan is consistent";
    rep.finalize("pass");
    return rep;
}

Report cmd_coset_report(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("coset-report", rs);
    int i = rs.spec.functor_i;
    long c = rs.c;
    auto ctx = make_engine(rs);
    bool any_undetermined = false;
    bool dichotomy_all = true;
    bool alarm = false;
    json cosets = json::array();
    std::ostringstream csv;
    csv << "l,t,n,value\n";
    for (long l = 0; l < c; ++l) {
        CosetProfile prof = coset_profile(*ctx, i, c, l, rs.spec.coset_t_min, rs.spec.coset_t_max);
        json cj;
        cj["l"] = l;
        json entries = json::array();
        for (const auto& e : prof.entries) {
            entries.push_back(entry_json(e.t, e.n, e.value, e.note));
            csv << l << "," << e.t << "," << e.n << "," << value_text(e.value) << "\n";
        }
        cj["entries"] = entries;
        cj["dichotomy_ok"] = prof.dichotomy_ok;
        cj["any_undetermined"] = prof.any_undetermined;
        if (prof.alpha) cj["alpha_fit"] = fit_json(*prof.alpha);
        if (prof.beta) cj["beta_fit"] = fit_json(*prof.beta);
        cj["degree_alarm"] = prof.degree_alarm;
        cosets.push_back(std::move(cj));
        any_undetermined = any_undetermined || prof.any_undetermined;
        dichotomy_all = dichotomy_all && prof.dichotomy_ok;
        alarm = alarm || prof.degree_alarm || !prof.dichotomy_ok;
    }
    rep.doc["cosets"] = cosets;
    rep.csv = csv.str();
    if (any_undetermined) {
        rep.doc["reason"] = "undetermined components; partial report";
        rep.finalize("undetermined");
    } else {
        rep.finalize(alarm ? "alarm" : "pass");
    }
    return rep;
}

Report cmd_periodicity(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("periodicity", rs);
    int i = rs.spec.functor_i;
    long c = rs.c;
    auto ctx = make_engine(rs);
    long t_lo = rs.spec.coset_t_min, t_hi = rs.spec.coset_t_max;
    int confirm = std::min<long>(3, t_hi - t_lo + 1);
    bool any_undetermined = false;
    bool all_stable = true;
    json cosets = json::array();
    std::ostringstream csv;
    csv << "l,t,n,nonzero\n";
    for (long l = 0; l < c; ++l) {
        json cj;
        cj["l"] = l;
        std::vector<int> pattern;
        bool undet = false;
        json entries = json::array();
        for (long t = t_lo; t <= t_hi; ++t) {
            long n = l + c * t;
            std::optional<ComponentDim> v;
            std::string note;
            try {
                v = ctx->component(i, n);
            } catch (const UndeterminedError& e) {
                note = e.what();
                undet = true;
            }
            int nz = v ? (v->nonzero() ? 1 : 0) : -1;
            pattern.push_back(nz);
            entries.push_back(entry_json(t, n, v, note));
            csv << l << "," << t << "," << n << "," << (nz < 0 ? std::string("undetermined") : std::to_string(nz)) << "\n";
        }
        cj["entries"] = entries;
        if (undet) {
            any_undetermined = true;
            cj["stable"] = false;
            cosets.push_back(std::move(cj));
            continue;
        }
        // longest constant suffix / prefix
        int suffix = 1;
        while (suffix < static_cast<int>(pattern.size()) &&
               pattern[pattern.size() - 1 - suffix] == pattern.back())
            ++suffix;
        int prefix = 1;
        while (prefix < static_cast<int>(pattern.size()) && pattern[prefix] == pattern.front())
            ++prefix;
        bool stable = suffix >= confirm && prefix >= confirm;
        cj["positive_tail"] = {{"value", pattern.back() == 1},
                               {"stable_length", suffix},
                               {"n0", l + c * (t_hi - suffix + 1)}};
        cj["negative_tail"] = {{"value", pattern.front() == 1},
                               {"stable_length", prefix},
                               {"n0_prime", l + c * (t_lo + prefix - 1)}};
        cj["stable"] = stable;
        all_stable = all_stable && stable;
        cosets.push_back(std::move(cj));
    }
    rep.doc["cosets"] = cosets;
    rep.csv = csv.str();
    if (any_undetermined) rep.finalize("undetermined");
    else if (!all_stable) {
        rep.doc["reason"] = "pattern not yet constant within the computed range";
        rep.finalize("undetermined");
    } else rep.finalize("pass");
    return rep;
}

Report cmd_injection_check(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("injection-check", rs);
    int m = rs.spec.vars;
    int i = rs.spec.functor_i;
    auto ctx = make_engine(rs);
    long n_lo = rs.spec.injection.n_min, n_hi = rs.spec.injection.n_max;

    // torsion screen: keep components with no surviving class killed by all
    // variable norms at once (X-torsion would produce such socle classes)
    std::vector<MultiPoly> norms;
    for (int v = 0; v < m; ++v)
        norms.push_back(group_norm(rs.group, MultiPoly::variable(m, v)).normalized_primitive());
    json screen = json::array();
    std::vector<long> eligible;
    for (long n = n_lo; n <= n_hi; ++n) {
        auto ev = ctx->joint_injection_evidence(norms, i, n);
        screen.push_back({{"n", n},
                          {"torsion_free", ev.injective},
                          {"surviving_joint_kernel", ev.surviving_kernel_dim}});
        if (ev.injective) eligible.push_back(n);
    }
    rep.doc["torsion_screen"] = screen;
    rep.doc["eligible_degrees"] = eligible;

    Prng rng(rs.spec.seed);
    json attempts = json::array();
    for (int attempt = 0; attempt < rs.spec.injection.candidates; ++attempt) {
        MultiPoly xi(m);
        bool nonzero = false;
        for (int v = 0; v < m; ++v) {
            long a = rng.uniform(-4, 4);
            if (a != 0) {
                Exponents e(m, 0);
                e[v] = 1;
                xi.add_term(e, FieldElement(Rational(a)));
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        MultiPoly theta = group_norm(rs.group, xi).normalized_primitive();
        json aj;
        aj["xi"] = xi.to_string();
        aj["theta"] = theta.to_string();
        aj["theta_degree"] = theta.degree();
        bool all_ok = true;
        json results = json::array();
        for (long n : eligible) {
            auto ev = ctx->injection_evidence(theta, i, n);
            results.push_back({{"n", n},
                               {"injective", ev.injective},
                               {"surviving_kernel_dim", ev.surviving_kernel_dim},
                               {"horizon_stage", ev.horizon_stage}});
            if (!ev.injective) { all_ok = false; break; }
        }
        aj["results"] = results;
        aj["success"] = all_ok;
        attempts.push_back(std::move(aj));
        if (all_ok) {
            rep.doc["attempts"] = attempts;
            rep.doc["found"] = {{"theta", theta.to_string()},
                                {"degree", theta.degree()},
                                {"verified_degrees", eligible},
                                {"attempt", attempt}};
            rep.finalize("pass");
            return rep;
        }
    }
    rep.doc["attempts"] = attempts;
    rep.doc["reason"] = "no injective candidate found within the budget";
    rep.finalize("undetermined");
    return rep;
}

Report cmd_oracle_compare(const ResolvedScenario& rs) {
    Report rep;
    rep.doc = preamble("oracle-compare", rs);
    int m = rs.spec.vars;
    auto ctx = make_engine(rs);
    std::ostringstream csv;
    csv << "n,engine,oracle\n";
    json rows = json::array();
    bool agree_all = true;
    bool monomial_route = rs.group.is_trivial();
    for (const auto& g : rs.ideal_gens) {
        if (g.term_count() != 1) monomial_route = false;
        else {
            for (const auto& [e, cc] : g.terms())
                for (int v : e)
                    if (v > 1) monomial_route = false;
        }
    }

    if (monomial_route) {
        rep.doc["route"] = "hochster";
        int i = rs.spec.functor_i;
        for (long n = rs.spec.n_min; n <= rs.spec.n_max; ++n) {
            const ComponentDim& eng = ctx->component(i, n);
            OracleComponent orc = monomial_component(rs.ideal_gens, m, i, n);
            std::string et = eng.finite() ? std::to_string(eng.dim) : "divergent";
            std::string ot = orc.divergent ? "divergent" : std::to_string(orc.dim);
            bool agree = (eng.finite() && !orc.divergent && eng.dim == orc.dim) ||
                         (!eng.finite() && orc.divergent);
            agree_all = agree_all && agree;
            rows.push_back({{"n", n}, {"engine", et}, {"oracle", ot}, {"agree", agree},
                            {"engine_observations", observations_to_json(eng.observations)}});
            csv << n << "," << et << "," << ot << "\n";
        }
    } else {
        rep.doc["route"] = "hsop-limit";
        if (rs.spec.ideal_kind != Scenario::IdealKind::SPlus)
            throw InputError("the h.s.o.p. oracle comparison requires ideal \"S+\"");
        FundamentalInvariants fi = fundamental_invariants(rs.group, rs.spec.seed, rs.spec.groebner,
                                                           5, rs.spec.groebner_order);
        if (!verify_regular_sequence(fi.f, static_cast<long>(m) * (rs.c - 1) + rs.c, rs.spec.groebner))
            throw Error("fundamental invariants failed the regular-sequence check");
        rep.doc["hsop"] = [&] {
            json fj = json::array();
            for (const auto& f : fi.f) fj.push_back(f.to_string());
            return fj;
        }();
        int i = m; // top local cohomology at an S_+-primary ideal
        for (long n = rs.spec.n_min; n <= rs.spec.n_max; ++n) {
            const ComponentDim& eng = ctx->component(i, n);
            HsopLimitResult orc = hsop_limit_component(rs.group, fi.f, rs.c, n,
                                                       rs.spec.policy.t_max + 8,
                                                       rs.spec.policy.confirmation_window);
            if (!orc.determined) {
                rows.push_back({{"n", n}, {"oracle", "undetermined"}});
                rep.doc["comparison"] = rows;
                rep.doc["reason"] = "oracle undetermined at n=" + std::to_string(n);
                rep.finalize("undetermined");
                return rep;
            }
            std::string et = eng.finite() ? std::to_string(eng.dim) : "divergent";
            bool agree = eng.finite() && eng.dim == orc.dim;
            agree_all = agree_all && agree;
            json stage = json::array();
            for (auto [t, d] : orc.stage_dims) stage.push_back({{"t", t}, {"dim", d}});
            rows.push_back({{"n", n}, {"engine", et}, {"oracle", orc.dim}, {"agree", agree},
                            {"engine_observations", observations_to_json(eng.observations)},
                            {"oracle_stages", stage}});
            csv << n << "," << et << "," << orc.dim << "\n";
        }
    }
    rep.doc["comparison"] = rows;
    rep.csv = csv.str();
    rep.finalize(agree_all ? "pass" : "alarm");
    return rep;
}

Report run_command(const std::string& name, const ResolvedScenario& rs) {
    auto dispatch = [&]() -> Report {
        if (name == "invariants") return cmd_invariants(rs);
        if (name == "vanish-window") return cmd_vanish_window(rs);
        if (name == "coset-report") return cmd_coset_report(rs);
        if (name == "periodicity") return cmd_periodicity(rs);
        if (name == "injection-check") return cmd_injection_check(rs);
        if (name == "oracle-compare") return cmd_oracle_compare(rs);
        throw InputError("unknown subcommand " + name);
    };
    try {
        return dispatch();
    } catch (const ResourceLimitError& e) {
        Report rep;
        rep.doc = preamble(name.c_str(), rs);
        rep.doc["resource_error"] = e.what();
        rep.finalize("undetermined");
        return rep;
    } catch (const UndeterminedError& e) {
        Report rep;
        rep.doc = preamble(name.c_str(), rs);
        rep.doc["undetermined"] = e.what();
        rep.doc["observations"] = nlohmann::json::parse(e.observations, nullptr, false);
        rep.finalize("undetermined");
        return rep;
    }
}

} // namespace invlab

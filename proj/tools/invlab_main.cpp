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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "invlab/commands.hpp"

namespace {

struct CommonOpts {
    std::string scenario_path;
    std::string out_path;
    std::string csv_path;
    long seed = -1;
    long t_max = -1;
    long max_pairs = -1;
    long monomial_budget = -1;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("scenario", o.scenario_path, "scenario file (JSON)")->required();
    cmd->add_option("--out", o.out_path, "write the JSON report here instead of stdout");
    cmd->add_option("--csv", o.csv_path, "write the primary CSV table here");
    cmd->add_option("--seed", o.seed, "override the scenario seed");
    cmd->add_option("--t-max", o.t_max, "override policy.t_max");
    cmd->add_option("--max-pairs", o.max_pairs, "override groebner.max_pairs");
    cmd->add_option("--monomial-budget", o.monomial_budget, "override policy.monomial_budget");
    cmd->add_flag("--quiet", o.quiet, "suppress the stderr summary");
}

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        std::cerr << "ignoring unparsable " << name << "=" << v << "\n";
        return fallback;
    }
}

int run(const std::string& command, const CommonOpts& o) {
    using namespace invlab;
    Scenario spec = parse_scenario_file(o.scenario_path);
    // work-budget overrides: environment first, then explicit flags
    spec.groebner.max_pairs = env_long("INVLAB_MAX_PAIRS", spec.groebner.max_pairs);
    spec.policy.monomial_budget = env_long("INVLAB_MONOMIAL_BUDGET", spec.policy.monomial_budget);
    spec.policy.t_max = static_cast<int>(env_long("INVLAB_T_MAX", spec.policy.t_max));
    if (o.seed >= 0) spec.seed = static_cast<std::uint64_t>(o.seed);
    if (o.t_max >= 1) spec.policy.t_max = static_cast<int>(o.t_max);
    if (o.max_pairs >= 1) spec.groebner.max_pairs = o.max_pairs;
    if (o.monomial_budget >= 1) spec.policy.monomial_budget = o.monomial_budget;

    auto start = std::chrono::steady_clock::now();
    ResolvedScenario rs = resolve_scenario(spec);
    Report rep = run_command(command, rs);
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    std::string text = rep.doc.dump(2);
    if (o.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(o.out_path);
        if (!out) throw invlab::InputError("cannot write " + o.out_path);
        out << text << "\n";
    }
    if (!o.csv_path.empty()) {
        std::ofstream csv(o.csv_path);
        if (!csv) throw invlab::InputError("cannot write " + o.csv_path);
        csv << rep.csv;
    }
    if (!o.quiet) {
        std::cerr << command << " " << spec.name << ": " << rep.verdict << " (exit "
                  << rep.exit_code << ", " << elapsed.count() << " ms)\n";
    }
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic laboratory for invariant rings and graded local cohomology"};
    app.require_subcommand(1);
    const char* names[] = {"invariants",   "vanish-window",   "coset-report",
                           "periodicity",  "injection-check", "oracle-compare"};
    const char* blurbs[] = {
        "Noether generators, fundamental invariants, quotient profile and bound comparison",
        "vanishing-window test with extended consistency scan",
        "per-coset dimensions, finiteness dichotomy and polynomial tail fits",
        "eventual constancy of the nonvanishing pattern per coset",
        "search for an invariant multiplier acting injectively on computed components",
        "Cech engine versus the independent oracles, exact agreement required"};
    CommonOpts opts[6];
    CLI::App* subs[6];
    for (int k = 0; k < 6; ++k) {
        subs[k] = app.add_subcommand(names[k], blurbs[k]);
        add_common(subs[k], opts[k]);
    }
    CLI11_PARSE(app, argc, argv);
    for (int k = 0; k < 6; ++k) {
        if (subs[k]->parsed()) {
            try {
                return run(names[k], opts[k]);
            } catch (const invlab::InputError& e) {
                std::cerr << "invalid scenario: " << e.what() << "\n";
                return 3;
            } catch (const invlab::ResourceLimitError& e) {
                std::cerr << "resource limit: " << e.what() << "\n";
                return 2;
            } catch (const invlab::UndeterminedError& e) {
                std::cerr << "undetermined: " << e.what() << "\n";
                return 2;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
    }
    return 3;
}

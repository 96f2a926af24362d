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

#ifndef INVLAB_COMMANDS_HPP
#define INVLAB_COMMANDS_HPP

#include "invlab/report.hpp"
#include "invlab/scenario.hpp"

namespace invlab {

Report cmd_invariants(const ResolvedScenario& rs);
Report cmd_vanish_window(const ResolvedScenario& rs);
Report cmd_coset_report(const ResolvedScenario& rs);
Report cmd_periodicity(const ResolvedScenario& rs);
Report cmd_injection_check(const ResolvedScenario& rs);
Report cmd_oracle_compare(const ResolvedScenario& rs);

/// Dispatch by subcommand name; wraps resource/undetermined failures into an
/// exit-code-2 report.
Report run_command(const std::string& name, const ResolvedScenario& rs);

/// The default vanishing-window radius W = max(m(c-1), (c-1)^m).
long vanish_window_radius(int m, long c);

/// Engine factory honoring the scenario policy (trivial groups get the
/// groupless engine so the block decomposition stays available).
std::shared_ptr<CechContext> make_engine(const ResolvedScenario& rs);

} // namespace invlab

#endif

// Copyright 2026 The autalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and plain-text renderings of analysis results. Field names are
// stable; see docs/schemas/ for the JSON layouts.

#ifndef AUTALG_REPORT_H_
#define AUTALG_REPORT_H_

#include <string>

#include "autalg/automaton.h"
#include "autalg/congruence.h"
#include "autalg/decompose.h"
#include "autalg/product.h"
#include "autalg/semigroup.h"
#include "autalg/structure.h"
#include "json.hpp"

namespace autalg {

using Json = nlohmann::ordered_json;

Json automaton_json(const Automaton& aut);
Json semigroup_json(const Automaton& aut, const TransitionSemigroup& sg,
                    bool with_cayley);
Json quasi_ideal_json(const Automaton& aut, const QuasiIdealReport& report);
Json partition_json(const Automaton& aut, const Partition& p);
// Ordered [from, to] name pairs.
Json state_map_json(const StateMap& map);
Json decomposition_json(const Automaton& aut,
                        const DecompositionReport& report);

// Aligned transition table, one row per state.
std::string transition_table_text(const Automaton& aut);
std::string semigroup_text(const Automaton& aut, const TransitionSemigroup& sg);
std::string quasi_ideal_text(const Automaton& aut,
                             const QuasiIdealReport& report);
std::string state_map_text(const StateMap& map);
std::string decomposition_text(const Automaton& aut,
                               const DecompositionReport& report);

}  // namespace autalg

#endif  // AUTALG_REPORT_H_

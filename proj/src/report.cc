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

#include "autalg/report.h"

#include <algorithm>

namespace autalg {
namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json block_list(const Automaton& aut,
                const std::vector<std::vector<StateIndex>>& blocks) {
  Json out = Json::array();
  for (const auto& block : blocks) {
    Json names = Json::array();
    for (StateIndex s : block) names.push_back(aut.state_name(s));
    out.push_back(std::move(names));
  }
  return out;
}

std::string blocks_text(const Automaton& aut,
                        const std::vector<std::vector<StateIndex>>& blocks) {
  std::string out;
  for (const auto& block : blocks) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += aut.state_name(block[i]);
    }
    out += '}';
  }
  return out;
}

Json violation_json(const Automaton& aut, const ImageViolation& v) {
  Json out;
  if (v.kind == ImageViolation::Kind::kOverlap) {
    out["kind"] = "overlap";
    out["first"] = render_word(aut, *v.first);
    out["second"] = render_word(aut, *v.second);
  } else {
    out["kind"] = "uncovered";
  }
  out["state"] = aut.state_name(v.state);
  return out;
}

std::string violation_text(const Automaton& aut, const ImageViolation& v) {
  if (v.kind == ImageViolation::Kind::kOverlap) {
    return "images of idempotents " + render_word(aut, *v.first) + " and " +
           render_word(aut, *v.second) +
           " overlap without being equal (differ at " +
           aut.state_name(v.state) + ")";
  }
  return "state " + aut.state_name(v.state) + " lies in no idempotent image";
}

std::string elements(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " element" : " elements");
}

}  // namespace

Json automaton_json(const Automaton& aut) {
  Json out;
  out["states"] =
      Json(std::vector<std::string>(aut.states().begin(), aut.states().end()));
  out["alphabet"] = Json(
      std::vector<std::string>(aut.alphabet().begin(), aut.alphabet().end()));
  Json delta = Json::array();
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      delta.push_back(Json::array({aut.state_name(s), aut.letter_name(a),
                                   aut.state_name(aut.next(s, a))}));
    }
  }
  out["delta"] = std::move(delta);
  return out;
}

Json semigroup_json(const Automaton& aut, const TransitionSemigroup& sg,
                    bool with_cayley) {
  Json out;
  out["size"] = sg.size();
  out["identity"] =
      sg.identity_element()
          ? Json(render_word(aut, sg.element(*sg.identity_element()).witness()))
          : Json(nullptr);
  Json elements = Json::array();
  for (const Transformation& t : sg.elements()) {
    Json e;
    e["witness"] = render_word(aut, t.witness());
    Json mapping = Json::array();
    for (StateIndex s : t.mapping()) mapping.push_back(aut.state_name(s));
    e["mapping"] = std::move(mapping);
    e["rank"] = rank(t);
    elements.push_back(std::move(e));
  }
  out["elements"] = std::move(elements);
  if (with_cayley) {
    const LabeledTable table = labeled_cayley(aut, sg, CayleyView::kSemigroup);
    Json rows = Json::array();
    for (const auto& row : table.cells) {
      Json r = Json::array();
      for (std::size_t cell : row) r.push_back(table.labels[cell]);
      rows.push_back(std::move(r));
    }
    out["cayley"] = std::move(rows);
  }
  return out;
}

Json quasi_ideal_json(const Automaton& aut, const QuasiIdealReport& report) {
  Json out;
  out["strongly_connected"] = report.strongly_connected;
  out["ideal_right_group"] = report.ideal_right_group;
  out["images_partition"] = report.images_partition;
  out["verdict"] = report.verdict;
  out["blocks"] = block_list(aut, report.blocks);
  Json violations = Json::array();
  for (const ImageViolation& v : report.violations) {
    violations.push_back(violation_json(aut, v));
  }
  out["violations"] = std::move(violations);
  out["semigroup_size"] = report.semigroup_size;
  out["ideal_size"] = report.ideal_size;
  out["min_rank"] = report.min_rank;
  Json idempotents = Json::array();
  for (const Word& w : report.idempotents) {
    idempotents.push_back(render_word(aut, w));
  }
  out["idempotents"] = std::move(idempotents);
  return out;
}

Json partition_json(const Automaton& aut, const Partition& p) {
  return block_list(aut, p.blocks());
}

Json state_map_json(const StateMap& map) {
  Json out = Json::array();
  for (StateIndex s = 0; s < map.mapping.size(); ++s) {
    out.push_back(Json::array(
        {map.domain->state_name(s), map.codomain->state_name(map.mapping[s])}));
  }
  return out;
}

Json decomposition_json(const Automaton& aut,
                        const DecompositionReport& report) {
  Json out;
  out["verdict"] = report.quasi_ideal.verdict;
  out["failure_stage"] = std::string(failure_stage_name(report.failure_stage));
  out["quasi_ideal"] = quasi_ideal_json(aut, report.quasi_ideal);
  if (!report.succeeded()) return out;
  out["pi"] = partition_json(aut, *report.pi);
  out["rho"] = partition_json(aut, *report.rho);
  out["quotient_pi"] = automaton_json(*report.quotient_pi);
  out["quotient_pi_class"] = {
      {"permutation", report.quotient_pi_class.permutation},
      {"strongly_connected", report.quotient_pi_class.strongly_connected}};
  out["quotient_rho"] = automaton_json(*report.quotient_rho);
  out["quotient_rho_class"] = {
      {"synchronizing", report.quotient_rho_class.synchronizing},
      {"strongly_connected", report.quotient_rho_class.strongly_connected}};
  out["iso"] = state_map_json(*report.iso);
  return out;
}

std::string transition_table_text(const Automaton& aut) {
  std::size_t state_width = 0;
  for (const std::string& s : aut.states()) {
    state_width = std::max(state_width, display_width(s));
  }
  std::size_t cell_width = state_width;
  for (const std::string& a : aut.alphabet()) {
    cell_width = std::max(cell_width, display_width(a));
  }
  std::string out = pad_right("", state_width);
  for (const std::string& a : aut.alphabet())
    out += ' ' + pad_left(a, cell_width);
  out += '\n';
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    out += pad_right(aut.state_name(s), state_width);
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      out += ' ' + pad_left(aut.state_name(aut.next(s, a)), cell_width);
    }
    out += '\n';
  }
  return out;
}

std::string semigroup_text(const Automaton& aut,
                           const TransitionSemigroup& sg) {
  std::size_t width = 0;
  for (const Transformation& t : sg.elements()) {
    width = std::max(width, display_width(render_word(aut, t.witness())));
  }
  std::string out = "|S(A)| = " + std::to_string(sg.size());
  if (auto id = sg.identity_element()) {
    out +=
        ", identity induced by " + render_word(aut, sg.element(*id).witness());
  }
  out += '\n';
  for (const Transformation& t : sg.elements()) {
    out += pad_left(render_word(aut, t.witness()), width) + " :";
    for (StateIndex s : t.mapping()) out += ' ' + aut.state_name(s);
    out += "  (rank " + std::to_string(rank(t)) + ")\n";
  }
  return out;
}

std::string quasi_ideal_text(const Automaton& aut,
                             const QuasiIdealReport& report) {
  std::string out;
  out +=
      "strongly connected:       " + yes_no(report.strongly_connected) + '\n';
  out += "transition semigroup:     " + elements(report.semigroup_size) + '\n';
  out += "minimal ideal:            " + elements(report.ideal_size) +
         " of rank " + std::to_string(report.min_rank) + '\n';
  out += "idempotents:             ";
  for (const Word& w : report.idempotents) out += ' ' + render_word(aut, w);
  out += '\n';
  out += "ideal is a right group:   " + yes_no(report.ideal_right_group) + '\n';
  out += "idempotent images:        ";
  if (report.images_partition) {
    out += "partition " + blocks_text(aut, report.blocks) + '\n';
  } else {
    out += "no partition\n";
    for (const ImageViolation& v : report.violations) {
      out += "  - " + violation_text(aut, v) + '\n';
    }
  }
  out += std::string("verdict:                  ") +
         (report.verdict ? "quasi-ideal" : "not quasi-ideal") + '\n';
  return out;
}

std::string state_map_text(const StateMap& map) {
  std::size_t width = 0;
  for (const std::string& s : map.domain->states()) {
    width = std::max(width, display_width(s));
  }
  std::string out;
  for (StateIndex s = 0; s < map.mapping.size(); ++s) {
    out += pad_right(map.domain->state_name(s), width) + " -> " +
           map.codomain->state_name(map.mapping[s]) + '\n';
  }
  return out;
}

std::string decomposition_text(const Automaton& aut,
                               const DecompositionReport& report) {
  std::string out = "== quasi-ideal check ==\n";
  out += quasi_ideal_text(aut, report.quasi_ideal);
  if (!report.succeeded()) {
    out +=
        "failed at: " + std::string(failure_stage_name(report.failure_stage)) +
        '\n';
    return out;
  }
  out += "\n== congruences ==\n";
  out += "pi:  " + partition_text(aut, *report.pi) + '\n';
  out += "rho: " + partition_text(aut, *report.rho) + '\n';
  out += "\n== permutation quotient A/pi ==\n";
  out += "permutation: " + yes_no(report.quotient_pi_class.permutation) +
         ", strongly connected: " +
         yes_no(report.quotient_pi_class.strongly_connected) + '\n';
  out += transition_table_text(*report.quotient_pi);
  out += "\n== synchronizing quotient A/rho ==\n";
  out += "synchronizing: " + yes_no(report.quotient_rho_class.synchronizing) +
         ", strongly connected: " +
         yes_no(report.quotient_rho_class.strongly_connected) + '\n';
  out += transition_table_text(*report.quotient_rho);
  out += "\n== isomorphism A -> A/pi x A/rho ==\n";
  out += state_map_text(*report.iso);
  return out;
}

}  // namespace autalg

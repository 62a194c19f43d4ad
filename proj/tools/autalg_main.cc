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

// autalg: command-line front end.
//
// Exit codes: 0 when the queried property holds (or the command succeeded),
// 1 when it does not, 2 on usage or input errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "autalg/automaton.h"
#include "autalg/decompose.h"
#include "autalg/errors.h"
#include "autalg/io.h"
#include "autalg/product.h"
#include "autalg/report.h"
#include "autalg/semigroup.h"
#include "autalg/structure.h"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

constexpr const char* kFooter =
    "Exit status: 0 property holds, 1 property fails, 2 usage or input "
    "error.\n"
    "Environment: AUTALG_MAX_ELEMENTS overrides the transition semigroup "
    "size cap (default 1000000).";

autalg::Automaton load(const std::string& path) {
  return autalg::parse_automaton(autalg::read_file(path));
}

void apply_env_cap() {
  const char* raw = std::getenv("AUTALG_MAX_ELEMENTS");
  if (raw == nullptr || *raw == '\0') return;
  std::size_t used = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || cap == 0) {
    throw autalg::InvalidArgument(
        "AUTALG_MAX_ELEMENTS must be a positive integer");
  }
  autalg::set_default_max_elements(static_cast<std::size_t>(cap));
}

void print_json(const autalg::Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_info(const std::string& file) {
  using namespace autalg;
  const Automaton aut = load(file);
  const TransitionSemigroup sg = semigroup(aut);
  const MinimalIdeal ideal = minimal_ideal(sg);
  const SyncResult sync = is_synchronizing(aut, sg);
  auto join = [](auto names) {
    std::string out;
    for (const std::string& n : names) out += (out.empty() ? "" : " ") + n;
    return out;
  };
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "states:              " << aut.state_count() << " ("
            << join(aut.states()) << ")\n"
            << "letters:             " << aut.letter_count() << " ("
            << join(aut.alphabet()) << ")\n"
            << "strongly connected:  " << yes_no(is_strongly_connected(aut))
            << '\n'
            << "permutation:         " << yes_no(is_permutation(aut)) << '\n'
            << "synchronizing:       " << yes_no(sync.synchronizing);
  if (sync.synchronizing) {
    std::cout << " (reset word " << render_word(aut, *sync.reset_word) << ")";
  }
  std::cout << '\n'
            << "|S(A)|:              " << sg.size() << '\n'
            << "|I(A)|:              " << ideal.members.size() << '\n'
            << "minimum rank:        " << ideal.min_rank << '\n';
  return kHolds;
}

int cmd_semigroup(const std::string& file, bool cayley, bool monoid, bool csv,
                  bool json) {
  using namespace autalg;
  const Automaton aut = load(file);
  const TransitionSemigroup sg = semigroup(aut);
  if (json) {
    print_json(semigroup_json(aut, sg, cayley));
    return kHolds;
  }
  std::cout << semigroup_text(aut, sg);
  if (cayley) {
    const LabeledTable table = labeled_cayley(
        aut, sg, monoid ? CayleyView::kMonoid : CayleyView::kSemigroup);
    std::cout << '\n' << (csv ? cayley_csv(table) : cayley_text(table));
  }
  return kHolds;
}

int cmd_check(const std::string& file, bool json) {
  using namespace autalg;
  const Automaton aut = load(file);
  const QuasiIdealReport report = quasi_ideal_report(aut);
  if (json) {
    print_json(quasi_ideal_json(aut, report));
  } else {
    std::cout << quasi_ideal_text(aut, report);
  }
  return report.verdict ? kHolds : kFails;
}

int cmd_decompose(const std::string& file, const std::string& out_pi,
                  const std::string& out_rho, bool json) {
  using namespace autalg;
  const Automaton aut = load(file);
  const DecompositionReport report = decompose(aut);
  if (report.succeeded()) {
    if (!out_pi.empty()) {
      write_file(out_pi, serialize_automaton(*report.quotient_pi));
    }
    if (!out_rho.empty()) {
      write_file(out_rho, serialize_automaton(*report.quotient_rho));
    }
  }
  if (json) {
    print_json(decomposition_json(aut, report));
  } else {
    std::cout << decomposition_text(aut, report);
  }
  return report.succeeded() ? kHolds : kFails;
}

int cmd_product(const std::string& file1, const std::string& file2,
                const std::string& out) {
  using namespace autalg;
  const std::string text =
      serialize_automaton(direct_product(load(file1), load(file2)));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kHolds;
}

int cmd_iso(const std::string& file1, const std::string& file2, bool json) {
  using namespace autalg;
  const Automaton a = load(file1);
  const Automaton b = load(file2);
  const std::optional<StateMap> iso = find_isomorphism(a, b);
  if (json) {
    Json j;
    j["isomorphic"] = iso.has_value();
    j["mapping"] = iso ? state_map_json(*iso) : Json(nullptr);
    print_json(j);
  } else if (iso) {
    std::cout << state_map_text(*iso);
  } else {
    std::cout << "none\n";
  }
  return iso ? kHolds : kFails;
}

int cmd_dot(const std::string& file) {
  std::cout << autalg::to_dot(load(file));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic analysis and decomposition of finite semiautomata",
               "autalg"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string file, file2, out, out_pi, out_rho;
  bool json = false, cayley = false, monoid = false, csv = false;

  auto* info = app.add_subcommand("info", "classification summary");
  info->add_option("FILE", file, "automaton file")->required();

  auto* sg = app.add_subcommand("semigroup",
                                "transition semigroup elements with witnesses");
  sg->add_option("FILE", file, "automaton file")->required();
  sg->add_flag("--cayley", cayley, "print the Cayley table");
  sg->add_flag("--monoid", monoid,
               "Cayley table of the monoid (identity first, labelled ε)");
  sg->add_flag("--csv", csv, "Cayley table as CSV");
  sg->add_flag("--json", json, "JSON output");

  auto* check = app.add_subcommand("check", "quasi-ideal report");
  check->add_option("FILE", file, "automaton file")->required();
  check->add_flag("--json", json, "JSON output");

  auto* dec = app.add_subcommand(
      "decompose", "split into a permutation and a synchronizing quotient");
  dec->add_option("FILE", file, "automaton file")->required();
  dec->add_option("--out-pi", out_pi, "write the permutation quotient here");
  dec->add_option("--out-rho", out_rho,
                  "write the synchronizing quotient here");
  dec->add_flag("--json", json, "JSON output");

  auto* prod = app.add_subcommand("product", "direct product of two automata");
  prod->add_option("FILE1", file, "first factor")->required();
  prod->add_option("FILE2", file2, "second factor")->required();
  prod->add_option("--out", out, "write the product here instead of stdout");

  auto* iso = app.add_subcommand("iso", "find an isomorphism");
  iso->add_option("FILE1", file, "domain automaton")->required();
  iso->add_option("FILE2", file2, "codomain automaton")->required();
  iso->add_flag("--json", json, "JSON output");

  auto* dot = app.add_subcommand("dot", "Graphviz DOT export");
  dot->add_option("FILE", file, "automaton file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    apply_env_cap();
    if (*info) return cmd_info(file);
    if (*sg) return cmd_semigroup(file, cayley, monoid, csv, json);
    if (*check) return cmd_check(file, json);
    if (*dec) return cmd_decompose(file, out_pi, out_rho, json);
    if (*prod) return cmd_product(file, file2, out);
    if (*iso) return cmd_iso(file, file2, json);
    if (*dot) return cmd_dot(file);
  } catch (const autalg::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

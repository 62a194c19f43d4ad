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

#include "autalg/semigroup.h"

#include <algorithm>
#include <atomic>
#include <utility>

#include "autalg/errors.h"

namespace autalg {
namespace {

// Code points, not bytes, so that "ε" occupies one column.
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

bool is_identity(std::span<const StateIndex> mapping) {
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] != i) return false;
  }
  return true;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::atomic<std::size_t> g_default_max_elements{kDefaultMaxElements};

}  // namespace

std::size_t default_max_elements() { return g_default_max_elements.load(); }

void set_default_max_elements(std::size_t cap) {
  g_default_max_elements.store(cap == 0 ? kDefaultMaxElements : cap);
}

TransitionSemigroup semigroup(const Automaton& aut, std::size_t max_elements) {
  if (max_elements == 0) max_elements = default_max_elements();
  TransitionSemigroup sg;
  const std::size_t n = aut.state_count();
  const std::size_t k = aut.letter_count();
  sg.state_count_ = n;
  sg.letter_count_ = k;

  auto intern = [&](std::vector<StateIndex> mapping, Word witness) {
    auto [it, inserted] = sg.index_.try_emplace(mapping, sg.elements_.size());
    if (inserted) {
      if (sg.elements_.size() >= max_elements) {
        throw CapExceeded("transition semigroup exceeds the cap of " +
                          std::to_string(max_elements) + " elements (found " +
                          std::to_string(sg.elements_.size()) + " so far)");
      }
      if (!sg.identity_element_ && is_identity(mapping)) {
        sg.identity_element_ = sg.elements_.size();
      }
      sg.elements_.emplace_back(std::move(mapping), std::move(witness));
    }
    return it->second;
  };

  for (LetterIndex a = 0; a < k; ++a) {
    std::vector<StateIndex> mapping(n);
    for (StateIndex s = 0; s < n; ++s) mapping[s] = aut.next(s, a);
    sg.letter_elements_.push_back(intern(std::move(mapping), Word{{a}}));
  }
  // Elements are appended while we walk, so index-based iteration is needed.
  for (std::size_t i = 0; i < sg.elements_.size(); ++i) {
    for (LetterIndex a = 0; a < k; ++a) {
      std::vector<StateIndex> mapping(n);
      const Transformation& current = sg.elements_[i];
      for (StateIndex s = 0; s < n; ++s) mapping[s] = aut.next(current[s], a);
      Word witness = current.witness();
      witness.letters.push_back(a);
      std::size_t target = intern(std::move(mapping), std::move(witness));
      sg.generator_map_.push_back(target);
    }
  }
  return sg;
}

std::size_t TransitionSemigroup::multiply(std::size_t i, std::size_t j) const {
  std::size_t current = i;
  for (LetterIndex a : elements_.at(j).witness().letters) {
    current = right_multiply(current, a);
  }
  return current;
}

std::optional<std::size_t> TransitionSemigroup::find(
    std::span<const StateIndex> mapping) const {
  auto it =
      index_.find(std::vector<StateIndex>(mapping.begin(), mapping.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t class_of(const TransitionSemigroup& sg, const Word& word) {
  if (word.empty()) {
    throw InvalidArgument(
        "the empty word has no class in the transition semigroup; use the "
        "monoid identity instead");
  }
  for (LetterIndex a : word.letters) {
    if (a >= sg.letter_count()) {
      throw InvalidArgument("letter index " + std::to_string(a) +
                            " out of range");
    }
  }
  std::size_t current = sg.letter_element(word.letters.front());
  for (std::size_t i = 1; i < word.size(); ++i) {
    current = sg.right_multiply(current, word.letters[i]);
  }
  return current;
}

std::vector<std::vector<std::size_t>> cayley_table(
    const TransitionSemigroup& sg) {
  std::vector<std::vector<std::size_t>> table(
      sg.size(), std::vector<std::size_t>(sg.size()));
  for (std::size_t i = 0; i < sg.size(); ++i) {
    for (std::size_t j = 0; j < sg.size(); ++j) {
      table[i][j] = sg.multiply(i, j);
    }
  }
  return table;
}

LabeledTable labeled_cayley(const Automaton& aut, const TransitionSemigroup& sg,
                            CayleyView view) {
  LabeledTable out;
  const auto products = cayley_table(sg);
  if (view == CayleyView::kSemigroup) {
    for (const Transformation& t : sg.elements()) {
      out.labels.push_back(render_word(aut, t.witness()));
    }
    out.cells = products;
    return out;
  }

  // Monoid view: slot 0 is the identity, then the non-identity elements in
  // discovery order. slot_of maps element indices to slots.
  const std::optional<std::size_t> id = sg.identity_element();
  std::vector<std::size_t> slot_of(sg.size());
  std::vector<std::size_t> element_of_slot;
  out.labels.push_back("ε");
  element_of_slot.push_back(id.value_or(sg.size()));
  for (std::size_t i = 0; i < sg.size(); ++i) {
    if (id && *id == i) {
      slot_of[i] = 0;
      continue;
    }
    slot_of[i] = out.labels.size();
    out.labels.push_back(render_word(aut, sg.element(i).witness()));
    element_of_slot.push_back(i);
  }
  const std::size_t m = out.labels.size();
  out.cells.assign(m, std::vector<std::size_t>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r == 0) {
        out.cells[r][c] = c;
      } else if (c == 0) {
        out.cells[r][c] = r;
      } else {
        out.cells[r][c] =
            slot_of[products[element_of_slot[r]][element_of_slot[c]]];
      }
    }
  }
  return out;
}

std::string cayley_text(const LabeledTable& table) {
  std::size_t width = 0;
  for (const std::string& l : table.labels) {
    width = std::max(width, display_width(l));
  }
  auto pad = [&](const std::string& s) {
    return std::string(width - display_width(s), ' ') + s;
  };
  std::string out = std::string(width, ' ');
  for (const std::string& l : table.labels) out += ' ' + pad(l);
  out += '\n';
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    out += pad(table.labels[r]);
    for (std::size_t cell : table.cells[r]) {
      out += ' ' + pad(table.labels[cell]);
    }
    out += '\n';
  }
  return out;
}

std::string cayley_csv(const LabeledTable& table) {
  std::string out;
  for (const std::string& l : table.labels) out += ',' + csv_field(l);
  out += '\n';
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    out += csv_field(table.labels[r]);
    for (std::size_t cell : table.cells[r]) {
      out += ',' + csv_field(table.labels[cell]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace autalg

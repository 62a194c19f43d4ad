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

#include "autalg/automaton.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "autalg/errors.h"

namespace autalg {
namespace {

void check_identifier(const std::string& id, const char* what) {
  if (id.empty()) {
    throw InvalidArgument(std::string("empty ") + what + " identifier");
  }
  for (unsigned char c : id) {
    if (std::isspace(c) || std::iscntrl(c)) {
      throw InvalidArgument(std::string(what) + " identifier '" + id +
                            "' contains whitespace or control characters");
    }
  }
}

template <typename Index>
std::unordered_map<std::string, Index> build_lookup(
    const std::vector<std::string>& ids, const char* what) {
  if (ids.empty()) {
    throw InvalidArgument(std::string("empty ") + what + " set");
  }
  std::unordered_map<std::string, Index> lookup;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check_identifier(ids[i], what);
    if (!lookup.emplace(ids[i], static_cast<Index>(i)).second) {
      throw InvalidArgument(std::string("duplicate ") + what + " identifier '" +
                            ids[i] + "'");
    }
  }
  return lookup;
}

bool single_char_letters(const Automaton& aut) {
  return std::all_of(aut.alphabet().begin(), aut.alphabet().end(),
                     [](const std::string& l) { return l.size() == 1; });
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Automaton::Automaton(std::vector<std::string> states,
                     std::vector<std::string> alphabet,
                     std::vector<StateIndex> table)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      table_(std::move(table)) {
  state_lookup_ = build_lookup<StateIndex>(states_, "state");
  letter_lookup_ = build_lookup<LetterIndex>(alphabet_, "letter");
  if (table_.size() != states_.size() * alphabet_.size()) {
    throw InvalidArgument("transition table has " +
                          std::to_string(table_.size()) +
                          " entries, expected " +
                          std::to_string(states_.size() * alphabet_.size()));
  }
  for (StateIndex t : table_) {
    if (t >= states_.size()) {
      throw InvalidArgument("transition target index " + std::to_string(t) +
                            " out of range");
    }
  }
}

std::optional<StateIndex> Automaton::find_state(std::string_view name) const {
  auto it = state_lookup_.find(std::string(name));
  if (it == state_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<LetterIndex> Automaton::find_letter(std::string_view name) const {
  auto it = letter_lookup_.find(std::string(name));
  if (it == letter_lookup_.end()) return std::nullopt;
  return it->second;
}

StateIndex Automaton::state_index(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw InvalidArgument("unknown state '" + std::string(name) + "'");
}

LetterIndex Automaton::letter_index(std::string_view name) const {
  if (auto a = find_letter(name)) return *a;
  throw InvalidArgument("unknown letter '" + std::string(name) + "'");
}

Automaton make_automaton(std::vector<std::string> states,
                         std::vector<std::string> alphabet,
                         std::span<const TransitionEntry> entries) {
  auto state_lookup = build_lookup<StateIndex>(states, "state");
  auto letter_lookup = build_lookup<LetterIndex>(alphabet, "letter");
  const std::size_t k = alphabet.size();
  constexpr StateIndex kUnset = static_cast<StateIndex>(-1);
  std::vector<StateIndex> table(states.size() * k, kUnset);

  auto lookup = [](const auto& map, const std::string& id, const char* what) {
    auto it = map.find(id);
    if (it == map.end()) {
      throw InvalidArgument(std::string("unknown ") + what + " '" + id +
                            "' in transition entry");
    }
    return it->second;
  };
  for (const TransitionEntry& e : entries) {
    StateIndex from = lookup(state_lookup, e.from, "state");
    LetterIndex letter = lookup(letter_lookup, e.letter, "letter");
    StateIndex to = lookup(state_lookup, e.to, "state");
    StateIndex& slot = table[from * k + letter];
    if (slot != kUnset) {
      throw InvalidArgument(
          std::string(slot == to ? "duplicate" : "conflicting") +
          " transition entry for (" + e.from + ", " + e.letter + ")");
    }
    slot = to;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == kUnset) {
      throw InvalidArgument("missing transition entry for (" + states[i / k] +
                            ", " + alphabet[i % k] + ")");
    }
  }
  return Automaton(std::move(states), std::move(alphabet), std::move(table));
}

std::string render_word(const Automaton& aut, const Word& word) {
  if (word.empty()) return "ε";
  const bool compact = single_char_letters(aut);
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += aut.letter_name(word.letters[i]);
  }
  return out;
}

Word parse_word(const Automaton& aut, std::string_view text) {
  Word word;
  if (text == "ε") return word;
  if (single_char_letters(aut)) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      word.letters.push_back(aut.letter_index(std::string_view(&c, 1)));
    }
    return word;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    if (end > pos) {
      word.letters.push_back(aut.letter_index(text.substr(pos, end - pos)));
    }
    pos = end;
  }
  return word;
}

StateIndex apply(const Automaton& aut, StateIndex state, const Word& word) {
  if (state >= aut.state_count()) {
    throw InvalidArgument("state index " + std::to_string(state) +
                          " out of range");
  }
  for (LetterIndex a : word.letters) {
    if (a >= aut.letter_count()) {
      throw InvalidArgument("letter index " + std::to_string(a) +
                            " out of range");
    }
    state = aut.next(state, a);
  }
  return state;
}

Transformation::Transformation(std::vector<StateIndex> mapping, Word witness)
    : mapping_(std::move(mapping)), witness_(std::move(witness)) {
  for (StateIndex t : mapping_) {
    if (t >= mapping_.size()) {
      throw InvalidArgument("transformation entry " + std::to_string(t) +
                            " out of range");
    }
  }
}

Transformation Transformation::identity(std::size_t state_count) {
  std::vector<StateIndex> mapping(state_count);
  for (std::size_t i = 0; i < state_count; ++i) {
    mapping[i] = static_cast<StateIndex>(i);
  }
  return Transformation(std::move(mapping), Word{});
}

Transformation transformation_of_word(const Automaton& aut, const Word& word) {
  std::vector<StateIndex> mapping(aut.state_count());
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    mapping[s] = apply(aut, s, word);
  }
  return Transformation(std::move(mapping), word);
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.size() != g.size()) {
    throw InvalidArgument("cannot compose transformations on " +
                          std::to_string(f.size()) + " and " +
                          std::to_string(g.size()) + " states");
  }
  std::vector<StateIndex> mapping(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mapping[i] = g[f[i]];
  return Transformation(std::move(mapping), f.witness() + g.witness());
}

std::vector<StateIndex> image(const Transformation& f) {
  std::vector<StateIndex> out(f.mapping().begin(), f.mapping().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t rank(const Transformation& f) {
  std::vector<bool> seen(f.size(), false);
  std::size_t count = 0;
  for (StateIndex t : f.mapping()) {
    if (!seen[t]) {
      seen[t] = true;
      ++count;
    }
  }
  return count;
}

bool is_bijection(std::span<const StateIndex> mapping) {
  std::vector<bool> seen(mapping.size(), false);
  for (StateIndex t : mapping) {
    if (t >= mapping.size() || seen[t]) return false;
    seen[t] = true;
  }
  return true;
}

bool witness_reproduces(const Automaton& aut, const Transformation& f) {
  if (f.size() != aut.state_count()) return false;
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    if (apply(aut, s, f.witness()) != f[s]) return false;
  }
  return true;
}

std::size_t MappingHash::operator()(std::span<const StateIndex> mapping) const {
  // FNV-1a over the entries.
  std::uint64_t h = 1469598103934665603ull;
  for (StateIndex t : mapping) {
    h ^= t;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace autalg

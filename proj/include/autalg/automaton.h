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

// Finite deterministic semiautomata, input words and the transformations
// that words induce on the state set.
//
// States and letters are addressed by dense indices. The declaration order
// of both is fixed at construction and defines the canonical indices as well
// as the shortlex order on words.

#ifndef AUTALG_AUTOMATON_H_
#define AUTALG_AUTOMATON_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace autalg {

using StateIndex = std::uint32_t;
using LetterIndex = std::uint32_t;

// Largest state count accepted by the exhaustive tools (enumerators, brute
// force oracles). Library operations themselves are unbounded.
inline constexpr std::size_t kMaxExhaustiveStates = 12;

// A finite sequence of letter indices; the empty word is valid.
struct Word {
  std::vector<LetterIndex> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.letters.insert(lhs.letters.end(), rhs.letters.begin(),
                       rhs.letters.end());
    return lhs;
  }
};

// Shorter words first; equal lengths compare by letter index.
bool shortlex_less(const Word& a, const Word& b);

// One `from --letter--> to` entry of a transition table, by identifier.
struct TransitionEntry {
  std::string from;
  std::string letter;
  std::string to;
};

class Automaton {
 public:
  // `table` is state-major: table[s * alphabet.size() + a] is s·a.
  // Throws InvalidArgument on empty or duplicate identifiers, identifiers
  // containing whitespace, a table of the wrong size or out-of-range targets.
  Automaton(std::vector<std::string> states, std::vector<std::string> alphabet,
            std::vector<StateIndex> table);

  std::size_t state_count() const { return states_.size(); }
  std::size_t letter_count() const { return alphabet_.size(); }

  StateIndex next(StateIndex state, LetterIndex letter) const {
    return table_[state * alphabet_.size() + letter];
  }

  std::span<const std::string> states() const { return states_; }
  std::span<const std::string> alphabet() const { return alphabet_; }
  std::span<const StateIndex> table() const { return table_; }

  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  const std::string& letter_name(LetterIndex a) const {
    return alphabet_.at(a);
  }

  std::optional<StateIndex> find_state(std::string_view name) const;
  std::optional<LetterIndex> find_letter(std::string_view name) const;
  // Throwing lookups.
  StateIndex state_index(std::string_view name) const;
  LetterIndex letter_index(std::string_view name) const;

  // Same letters in the same order.
  bool same_alphabet(const Automaton& other) const {
    return alphabet_ == other.alphabet_;
  }

  friend bool operator==(const Automaton& a, const Automaton& b) {
    return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ &&
           a.table_ == b.table_;
  }

 private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<StateIndex> table_;
  std::unordered_map<std::string, StateIndex> state_lookup_;
  std::unordered_map<std::string, LetterIndex> letter_lookup_;
};

// Builds an automaton from identifier-level entries. Every (state, letter)
// pair must appear exactly once; missing, duplicate and conflicting entries,
// unknown identifiers and empty state sets or alphabets are rejected with
// InvalidArgument.
Automaton make_automaton(std::vector<std::string> states,
                         std::vector<std::string> alphabet,
                         std::span<const TransitionEntry> entries);

// Words are written letter by letter when every letter of the alphabet is a
// single character ("010"), and space separated otherwise ("ab ba"). The
// empty word is written "ε".
std::string render_word(const Automaton& aut, const Word& word);
Word parse_word(const Automaton& aut, std::string_view text);

// δ(state, word): the left-to-right fold of the transition table.
StateIndex apply(const Automaton& aut, StateIndex state, const Word& word);

// A total self-map of the state set together with a word inducing it.
// Equality and hashing look at the mapping only.
class Transformation {
 public:
  Transformation(std::vector<StateIndex> mapping, Word witness);

  static Transformation identity(std::size_t state_count);

  std::size_t size() const { return mapping_.size(); }
  StateIndex operator[](StateIndex s) const { return mapping_[s]; }
  std::span<const StateIndex> mapping() const { return mapping_; }
  const Word& witness() const { return witness_; }

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.mapping_ == b.mapping_;
  }

 private:
  std::vector<StateIndex> mapping_;
  Word witness_;
};

Transformation transformation_of_word(const Automaton& aut, const Word& word);

// "f then g": result[s] = g[f[s]], witness f.witness ++ g.witness.
Transformation compose(const Transformation& f, const Transformation& g);

// Sorted distinct targets.
std::vector<StateIndex> image(const Transformation& f);
std::size_t rank(const Transformation& f);
bool is_bijection(std::span<const StateIndex> mapping);

// True when re-evaluating the stored witness reproduces the mapping.
bool witness_reproduces(const Automaton& aut, const Transformation& f);

struct MappingHash {
  std::size_t operator()(std::span<const StateIndex> mapping) const;
  std::size_t operator()(const std::vector<StateIndex>& mapping) const {
    return (*this)(std::span<const StateIndex>(mapping));
  }
};

}  // namespace autalg

template <>
struct std::hash<autalg::Transformation> {
  std::size_t operator()(const autalg::Transformation& t) const {
    return autalg::MappingHash{}(t.mapping());
  }
};

#endif  // AUTALG_AUTOMATON_H_

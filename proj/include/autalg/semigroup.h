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

#ifndef AUTALG_SEMIGROUP_H_
#define AUTALG_SEMIGROUP_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "autalg/automaton.h"

namespace autalg {

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

// Process-wide element limit used when semigroup() gets no explicit cap.
// Starts at kDefaultMaxElements; the CLI sets it from AUTALG_MAX_ELEMENTS.
std::size_t default_max_elements();
void set_default_max_elements(std::size_t cap);

class TransitionSemigroup;

// Breadth-first closure seeded with the letters in alphabet order. Throws
// CapExceeded once more than `max_elements` distinct elements are found;
// 0 selects default_max_elements().
TransitionSemigroup semigroup(const Automaton& aut,
                              std::size_t max_elements = 0);

// The transition semigroup S(A): every distinct transformation induced by a
// nonempty word, numbered in shortlex breadth-first discovery order. Each
// element's witness is the shortlex-least nonempty word inducing it.
//
// The transition monoid is this structure plus an identity handle: when a
// nonempty word already induces the identity (e.g. "00" on a group), the
// handle aliases that element; otherwise the identity is the empty word and
// lies outside the element list.
class TransitionSemigroup {
 public:
  std::size_t size() const { return elements_.size(); }
  std::size_t state_count() const { return state_count_; }
  std::size_t letter_count() const { return letter_count_; }

  std::span<const Transformation> elements() const { return elements_; }
  const Transformation& element(std::size_t i) const { return elements_.at(i); }

  // Index of element · letter.
  std::size_t right_multiply(std::size_t element, LetterIndex letter) const {
    return generator_map_[element * letter_count_ + letter];
  }
  std::size_t letter_element(LetterIndex letter) const {
    return letter_elements_.at(letter);
  }

  // Index of elements[i] · elements[j] ("i then j").
  std::size_t multiply(std::size_t i, std::size_t j) const;

  // Index of the element with this mapping, if any.
  std::optional<std::size_t> find(std::span<const StateIndex> mapping) const;

  bool contains_identity_as_nonempty_word() const {
    return identity_element_.has_value();
  }
  std::optional<std::size_t> identity_element() const {
    return identity_element_;
  }

 private:
  friend TransitionSemigroup semigroup(const Automaton&, std::size_t);

  std::size_t state_count_ = 0;
  std::size_t letter_count_ = 0;
  std::vector<Transformation> elements_;
  std::vector<std::size_t> generator_map_;
  std::vector<std::size_t> letter_elements_;
  std::optional<std::size_t> identity_element_;
  std::unordered_map<std::vector<StateIndex>, std::size_t, MappingHash> index_;
};

// Element induced by a nonempty word. The empty word has no class in S(A);
// it throws InvalidArgument.
std::size_t class_of(const TransitionSemigroup& sg, const Word& word);

// table[i][j] = index of elements[i] · elements[j].
std::vector<std::vector<std::size_t>> cayley_table(
    const TransitionSemigroup& sg);

enum class CayleyView {
  kSemigroup,  // rows and columns are the elements of S(A)
  kMonoid,     // identity first, labelled "ε", then the remaining elements
};

// A rendered Cayley table: cells index into labels.
struct LabeledTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> cells;
};

LabeledTable labeled_cayley(const Automaton& aut, const TransitionSemigroup& sg,
                            CayleyView view);

// Right-aligned columns separated by one space, header row first.
std::string cayley_text(const LabeledTable& table);
std::string cayley_csv(const LabeledTable& table);

}  // namespace autalg

#endif  // AUTALG_SEMIGROUP_H_

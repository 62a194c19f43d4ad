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

// Classification of automata and the minimal-ideal analysis behind the
// quasi-ideal test.
//
// An automaton is quasi-ideal when
//   (1) it is strongly connected,
//   (2) the minimal ideal I(A) of its transition semigroup is a right group,
//   (3) the images of the idempotents of I(A) partition the state set.
// These are exactly the automata isomorphic to a direct product of a
// strongly connected permutation automaton and a strongly connected
// synchronizing automaton.

#ifndef AUTALG_STRUCTURE_H_
#define AUTALG_STRUCTURE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "autalg/automaton.h"
#include "autalg/semigroup.h"

namespace autalg {

// Every state reaches every state (letter-level reachability, forwards from
// state 0 and backwards to it).
bool is_strongly_connected(const Automaton& aut);

// Every letter acts bijectively.
bool is_permutation(const Automaton& aut);

struct SyncResult {
  bool synchronizing = false;
  // Witness of the first rank-1 element in discovery order.
  std::optional<Word> reset_word;
};

SyncResult is_synchronizing(const Automaton& aut,
                            const TransitionSemigroup& sg);

// A word sending every state to `target`: a rank-1 witness followed by a
// shortest path from its sink to `target`. Throws PreconditionError when
// `aut` is not synchronizing or not strongly connected.
Word reset_word_to(const Automaton& aut, const TransitionSemigroup& sg,
                   StateIndex target);

struct MinimalIdeal {
  std::vector<std::size_t> members;  // element indices, ascending
  std::size_t min_rank = 0;
  std::vector<std::size_t> idempotents;  // subset of members, ascending
  bool right_simple = false;
  bool right_group = false;  // right_simple && !idempotents.empty()

  bool contains(std::size_t element) const;
};

// The elements of minimal rank. The two-sided ideal property is verified
// and a violation throws InternalInconsistency.
MinimalIdeal minimal_ideal(const TransitionSemigroup& sg);

// a·I = I for every member a.
bool is_right_simple(const MinimalIdeal& ideal, const TransitionSemigroup& sg);

struct ImageViolation {
  enum class Kind {
    kOverlap,    // two idempotent images intersect without being equal
    kUncovered,  // a state lies in no idempotent image
  };
  Kind kind = Kind::kOverlap;
  // Witnesses of the two idempotents (overlap only).
  std::optional<Word> first;
  std::optional<Word> second;
  // For overlaps, a state in the symmetric difference of the two images.
  StateIndex state = 0;
};

struct ImagePartition {
  bool is_partition = false;
  // Distinct idempotent images in first-seen order; filled on success.
  std::vector<std::vector<StateIndex>> blocks;
  std::vector<ImageViolation> violations;
};

ImagePartition idempotent_image_partition(const Automaton& aut,
                                          const TransitionSemigroup& sg,
                                          const MinimalIdeal& ideal);

struct QuasiIdealReport {
  bool strongly_connected = false;
  bool ideal_right_group = false;
  bool images_partition = false;
  bool verdict = false;  // conjunction of the three flags

  std::size_t semigroup_size = 0;
  std::size_t ideal_size = 0;
  std::size_t min_rank = 0;
  std::vector<Word> idempotents;
  std::vector<std::vector<StateIndex>> blocks;
  std::vector<ImageViolation> violations;
};

// Evaluates all three conditions; nothing is short-circuited.
QuasiIdealReport quasi_ideal_report(const Automaton& aut);
QuasiIdealReport quasi_ideal_report(const Automaton& aut,
                                    const TransitionSemigroup& sg);

}  // namespace autalg

#endif  // AUTALG_STRUCTURE_H_

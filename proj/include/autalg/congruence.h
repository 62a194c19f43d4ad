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

// State partitions, the two canonical congruences of an automaton whose
// minimal ideal is a right group, and quotient automata.

#ifndef AUTALG_CONGRUENCE_H_
#define AUTALG_CONGRUENCE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "autalg/automaton.h"
#include "autalg/semigroup.h"
#include "autalg/structure.h"

namespace autalg {

// An equivalence relation on states. Blocks are kept in canonical form:
// each block sorted ascending, blocks ordered by their smallest member.
class Partition {
 public:
  // Throws InvalidArgument unless the blocks are nonempty, disjoint and
  // cover 0..state_count-1.
  static Partition from_blocks(std::size_t state_count,
                               std::vector<std::vector<StateIndex>> blocks);
  // States with equal labels share a block.
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition discrete(std::size_t state_count);
  static Partition full(std::size_t state_count);

  std::size_t state_count() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<StateIndex>>& blocks() const { return blocks_; }
  std::size_t block_of(StateIndex s) const { return block_of_.at(s); }
  bool related(StateIndex s, StateIndex t) const {
    return block_of_.at(s) == block_of_.at(t);
  }
  bool is_discrete() const { return blocks_.size() == block_of_.size(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  Partition() = default;

  std::vector<std::vector<StateIndex>> blocks_;
  std::vector<std::size_t> block_of_;
};

// Blockwise intersection.
Partition meet(const Partition& a, const Partition& b);

// "{q1,q2} {q3,q4} {q5,q6}"
std::string partition_text(const Automaton& aut, const Partition& p);

// s ~ t iff every minimal-ideal element maps s and t to the same state.
// Requires a strongly connected automaton whose minimal ideal is a right
// group (PreconditionError otherwise).
Partition pi_congruence(const Automaton& aut, const TransitionSemigroup& sg,
                        const MinimalIdeal& ideal);

// The blocks are the distinct idempotent images. Requires those images to
// partition the states (PreconditionError otherwise).
Partition rho_congruence(const Automaton& aut, const TransitionSemigroup& sg,
                         const MinimalIdeal& ideal);

// Every letter maps every block into a single block. Checking letters is
// enough: if each letter preserves the relation, induction on word length
// extends that to every word.
bool is_congruence(const Automaton& aut, const Partition& p);

// Quotient automaton. Block states are named "[m]" after the shortlex-least
// member identifier and keep the partition's block order. Throws
// PreconditionError when `p` is not a congruence.
Automaton quotient(const Automaton& aut, const Partition& p);

}  // namespace autalg

#endif  // AUTALG_CONGRUENCE_H_

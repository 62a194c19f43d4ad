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

#ifndef AUTALG_PRODUCT_H_
#define AUTALG_PRODUCT_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "autalg/automaton.h"
#include "autalg/congruence.h"

namespace autalg {

// Largest state count for the backtracking isomorphism search used when the
// domain is not strongly connected.
inline constexpr std::size_t kMaxBacktrackStates = 10;

// A state mapping between two automata.
struct StateMap {
  std::shared_ptr<const Automaton> domain;
  std::shared_ptr<const Automaton> codomain;
  std::vector<StateIndex> mapping;
};

// States are the pairs (a, b) in row-major order (first factor major), named
// "(a,b)". Throws InvalidArgument unless both alphabets are identical.
Automaton direct_product(const Automaton& a, const Automaton& b);

// Index of the pair (s, t) in direct_product(a, b).
inline StateIndex product_state(const Automaton& b, StateIndex s,
                                StateIndex t) {
  return static_cast<StateIndex>(s * b.state_count() + t);
}

// map(s·x) = map(s)·x for every state s and letter x.
bool is_homomorphism(const Automaton& from, const Automaton& to,
                     std::span<const StateIndex> mapping);

// An isomorphism from `a` onto `b`, or nullopt. When `a` is strongly
// connected, each codomain state is tried in order as the image of state 0
// and the map is propagated along a spanning traversal; the first anchor
// that yields a verified isomorphism wins. Otherwise a pruned backtracking
// search runs, capped at kMaxBacktrackStates (CapExceeded above it).
std::optional<StateMap> find_isomorphism(const Automaton& a,
                                         const Automaton& b);

// Evidence that two congruences split the automaton into a direct product:
// their meet is the identity relation and their relational composition is
// the full relation.
struct PairEvidence {
  bool meet_is_identity = false;
  bool composition_is_full = false;
  // Two distinct related states (meet failure).
  std::optional<std::pair<StateIndex, StateIndex>> meet_counterexample;
  // A pair (s, t) with no u such that s pi u and u rho t.
  std::optional<std::pair<StateIndex, StateIndex>> composition_counterexample;

  bool ok() const { return meet_is_identity && composition_is_full; }
};

PairEvidence check_congruence_pair(const Automaton& aut, const Partition& pi,
                                   const Partition& rho);

// The map s -> ([s]pi, [s]rho) into quotient(aut, pi) x quotient(aut, rho),
// verified to be a bijective homomorphism. Throws PreconditionError naming
// the failed half when check_congruence_pair does not pass.
StateMap congruence_pair_iso(const Automaton& aut, const Partition& pi,
                             const Partition& rho);

}  // namespace autalg

#endif  // AUTALG_PRODUCT_H_

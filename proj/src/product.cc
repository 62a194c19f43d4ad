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

#include "autalg/product.h"

#include <algorithm>
#include <deque>
#include <string>

#include "autalg/errors.h"
#include "autalg/structure.h"

namespace autalg {
namespace {

constexpr StateIndex kUnassigned = static_cast<StateIndex>(-1);

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (!a.same_alphabet(b)) {
    throw InvalidArgument("automata have different alphabets");
  }
}

// Anchored propagation; only valid when `a` is strongly connected.
std::optional<std::vector<StateIndex>> propagate(const Automaton& a,
                                                 const Automaton& b,
                                                 StateIndex anchor) {
  std::vector<StateIndex> alpha(a.state_count(), kUnassigned);
  alpha[0] = anchor;
  std::deque<StateIndex> queue{0};
  while (!queue.empty()) {
    StateIndex s = queue.front();
    queue.pop_front();
    for (LetterIndex x = 0; x < a.letter_count(); ++x) {
      StateIndex next = a.next(s, x);
      StateIndex expected = b.next(alpha[s], x);
      if (alpha[next] == kUnassigned) {
        alpha[next] = expected;
        queue.push_back(next);
      } else if (alpha[next] != expected) {
        return std::nullopt;
      }
    }
  }
  return alpha;
}

// Per-letter (fixed point, in-degree) profile; isomorphisms preserve it.
std::vector<std::vector<std::size_t>> state_profiles(const Automaton& aut) {
  const std::size_t k = aut.letter_count();
  std::vector<std::vector<std::size_t>> profile(
      aut.state_count(), std::vector<std::size_t>(2 * k, 0));
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    for (LetterIndex x = 0; x < k; ++x) {
      StateIndex t = aut.next(s, x);
      if (t == s) profile[s][2 * x] = 1;
      ++profile[t][2 * x + 1];
    }
  }
  return profile;
}

class Backtracker {
 public:
  Backtracker(const Automaton& a, const Automaton& b)
      : a_(a),
        b_(b),
        profile_a_(state_profiles(a)),
        profile_b_(state_profiles(b)),
        alpha_(a.state_count(), kUnassigned),
        used_(b.state_count(), false) {}

  std::optional<std::vector<StateIndex>> run() {
    if (search(0)) return alpha_;
    return std::nullopt;
  }

 private:
  bool consistent(StateIndex s) const {
    for (LetterIndex x = 0; x < a_.letter_count(); ++x) {
      StateIndex next = a_.next(s, x);
      if (alpha_[next] != kUnassigned &&
          b_.next(alpha_[s], x) != alpha_[next]) {
        return false;
      }
    }
    for (StateIndex u = 0; u < a_.state_count(); ++u) {
      if (alpha_[u] == kUnassigned) continue;
      for (LetterIndex x = 0; x < a_.letter_count(); ++x) {
        if (a_.next(u, x) == s && b_.next(alpha_[u], x) != alpha_[s]) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(StateIndex s) {
    if (s == a_.state_count()) return true;
    for (StateIndex t = 0; t < b_.state_count(); ++t) {
      if (used_[t] || profile_a_[s] != profile_b_[t]) continue;
      alpha_[s] = t;
      used_[t] = true;
      if (consistent(s) && search(s + 1)) return true;
      used_[t] = false;
      alpha_[s] = kUnassigned;
    }
    return false;
  }

  const Automaton& a_;
  const Automaton& b_;
  std::vector<std::vector<std::size_t>> profile_a_;
  std::vector<std::vector<std::size_t>> profile_b_;
  std::vector<StateIndex> alpha_;
  std::vector<bool> used_;
};

}  // namespace

Automaton direct_product(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.letter_count();
  std::vector<std::string> names;
  std::vector<StateIndex> table;
  names.reserve(a.state_count() * b.state_count());
  table.reserve(a.state_count() * b.state_count() * k);
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    for (StateIndex t = 0; t < b.state_count(); ++t) {
      names.push_back("(" + a.state_name(s) + "," + b.state_name(t) + ")");
      for (LetterIndex x = 0; x < k; ++x) {
        table.push_back(product_state(b, a.next(s, x), b.next(t, x)));
      }
    }
  }
  std::vector<std::string> alphabet(a.alphabet().begin(), a.alphabet().end());
  return Automaton(std::move(names), std::move(alphabet), std::move(table));
}

bool is_homomorphism(const Automaton& from, const Automaton& to,
                     std::span<const StateIndex> mapping) {
  require_same_alphabet(from, to);
  if (mapping.size() != from.state_count()) {
    throw InvalidArgument("state map is not total on the domain");
  }
  for (StateIndex t : mapping) {
    if (t >= to.state_count()) {
      throw InvalidArgument("state map target out of range");
    }
  }
  for (StateIndex s = 0; s < from.state_count(); ++s) {
    for (LetterIndex x = 0; x < from.letter_count(); ++x) {
      if (mapping[from.next(s, x)] != to.next(mapping[s], x)) return false;
    }
  }
  return true;
}

std::optional<StateMap> find_isomorphism(const Automaton& a,
                                         const Automaton& b) {
  require_same_alphabet(a, b);
  if (a.state_count() != b.state_count()) return std::nullopt;

  std::optional<std::vector<StateIndex>> found;
  if (is_strongly_connected(a)) {
    for (StateIndex anchor = 0; anchor < b.state_count() && !found; ++anchor) {
      auto alpha = propagate(a, b, anchor);
      if (alpha && is_bijection(*alpha) && is_homomorphism(a, b, *alpha)) {
        found = std::move(alpha);
      }
    }
  } else {
    if (a.state_count() > kMaxBacktrackStates) {
      throw CapExceeded(
          "isomorphism search on a non-strongly-connected "
          "automaton is limited to " +
          std::to_string(kMaxBacktrackStates) + " states");
    }
    found = Backtracker(a, b).run();
    if (found && !(is_bijection(*found) && is_homomorphism(a, b, *found))) {
      throw InternalInconsistency("backtracking produced a non-isomorphism");
    }
  }
  if (!found) return std::nullopt;
  return StateMap{std::make_shared<const Automaton>(a),
                  std::make_shared<const Automaton>(b), std::move(*found)};
}

PairEvidence check_congruence_pair(const Automaton& aut, const Partition& pi,
                                   const Partition& rho) {
  if (pi.state_count() != aut.state_count() ||
      rho.state_count() != aut.state_count()) {
    throw InvalidArgument("partition does not match the automaton");
  }
  PairEvidence evidence;
  const std::size_t n = aut.state_count();

  evidence.meet_is_identity = true;
  for (StateIndex s = 0; s < n && evidence.meet_is_identity; ++s) {
    for (StateIndex t = s + 1; t < n; ++t) {
      if (pi.related(s, t) && rho.related(s, t)) {
        evidence.meet_is_identity = false;
        evidence.meet_counterexample.emplace(s, t);
        break;
      }
    }
  }

  // (s, t) is in the composition iff the pi-block of s meets the rho-block
  // of t.
  std::vector<bool> meets(pi.block_count() * rho.block_count(), false);
  for (StateIndex u = 0; u < n; ++u) {
    meets[pi.block_of(u) * rho.block_count() + rho.block_of(u)] = true;
  }
  evidence.composition_is_full = true;
  for (StateIndex s = 0; s < n && evidence.composition_is_full; ++s) {
    for (StateIndex t = 0; t < n; ++t) {
      if (!meets[pi.block_of(s) * rho.block_count() + rho.block_of(t)]) {
        evidence.composition_is_full = false;
        evidence.composition_counterexample.emplace(s, t);
        break;
      }
    }
  }
  return evidence;
}

StateMap congruence_pair_iso(const Automaton& aut, const Partition& pi,
                             const Partition& rho) {
  PairEvidence evidence = check_congruence_pair(aut, pi, rho);
  if (!evidence.meet_is_identity) {
    throw PreconditionError("the congruences intersect beyond the identity");
  }
  if (!evidence.composition_is_full) {
    throw PreconditionError(
        "the composition of the congruences is not the full relation");
  }
  auto by_pi = std::make_shared<const Automaton>(quotient(aut, pi));
  auto by_rho = std::make_shared<const Automaton>(quotient(aut, rho));
  auto product =
      std::make_shared<const Automaton>(direct_product(*by_pi, *by_rho));

  std::vector<StateIndex> mapping(aut.state_count());
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    mapping[s] = product_state(*by_rho, static_cast<StateIndex>(pi.block_of(s)),
                               static_cast<StateIndex>(rho.block_of(s)));
  }
  if (mapping.size() != product->state_count() || !is_bijection(mapping) ||
      !is_homomorphism(aut, *product, mapping)) {
    throw InternalInconsistency(
        "canonical map onto the quotient product is not an isomorphism");
  }
  return StateMap{std::make_shared<const Automaton>(aut), std::move(product),
                  std::move(mapping)};
}

}  // namespace autalg

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

// Generators and brute-force oracles for testing.
//
// Nothing here calls into the analysis code it is meant to check: the
// predicates, the semigroup enumeration, the isomorphism test and the
// factorization search are all written from the definitions, as directly as
// the problem sizes allow.
//
// Random generation contract (stable across runs and platforms):
//   * the engine is std::mt19937_64 seeded with GeneratorConfig::seed;
//   * uniform_below(b) draws 64-bit words and rejects those below
//     (2^64 mod b), returning the accepted word mod b;
//   * one attempt fills the table state-major, letter-minor, one draw per
//     entry; with the permutation filter each letter instead gets a
//     Fisher-Yates shuffle (i = n-1 down to 1, j = uniform_below(i + 1));
//   * attempts repeat on the same engine until every filter passes.
// Generated automata have states q0..q{n-1} and letters 0..k-1.

#ifndef AUTALG_TESTKIT_H_
#define AUTALG_TESTKIT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "autalg/automaton.h"

namespace autalg::testkit {

enum Filter : unsigned {
  kNoFilter = 0,
  kStronglyConnected = 1u << 0,
  kPermutation = 1u << 1,
  kSynchronizing = 1u << 2,
};

struct GeneratorConfig {
  std::size_t states = 1;
  std::size_t letters = 1;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  unsigned filters = kNoFilter;
  std::size_t max_attempts = 200'000;
};

inline constexpr std::uint64_t kDefaultExhaustiveCap = 10'000'000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t uniform_below(std::uint64_t bound);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> default_state_names(std::size_t n);
std::vector<std::string> default_alphabet(std::size_t k);

// Draws from `rng` until the filters pass; throws CapExceeded after
// cfg.max_attempts attempts.
Automaton gen_random(const GeneratorConfig& cfg, Rng& rng);
Automaton gen_random(const GeneratorConfig& cfg);

// All n^(n·k) automata on n states and k letters in lexicographic table
// order (index 0 is the all-q0 table; the last table entry varies fastest).
// Throws CapExceeded when the count exceeds `cap`. Index ranges may be
// enumerated independently.
class ExhaustiveAutomata {
 public:
  ExhaustiveAutomata(std::size_t n, std::size_t k,
                     std::uint64_t cap = kDefaultExhaustiveCap);
  ExhaustiveAutomata(std::size_t n, std::vector<std::string> alphabet,
                     std::uint64_t cap = kDefaultExhaustiveCap);

  std::uint64_t count() const { return count_; }
  Automaton at(std::uint64_t index) const;
  void for_each(const std::function<void(const Automaton&)>& fn) const;

 private:
  std::size_t n_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::uint64_t count_;
};

// Applies cfg.filters to the exhaustive stream for cfg.states/cfg.letters.
std::vector<Automaton> gen_exhaustive(const GeneratorConfig& cfg);

// ---- brute-force predicates ------------------------------------------------

// Transitive closure of the one-step relation (Warshall).
bool oracle_strongly_connected(const Automaton& aut);
// Every letter column is injective.
bool oracle_permutation(const Automaton& aut);
// Some word maps the whole state set to one state: search over the subsets
// S·w reachable from S.
bool oracle_synchronizing(const Automaton& aut);

// Distinct mappings of all nonempty words of length <= max_len. Words are
// evaluated length by length: the mappings of the words of length L+1 are
// those of length L followed by one letter. There is no early exit, so the
// result covers exactly the words up to max_len. Limited to 8 states.
std::set<std::vector<StateIndex>> oracle_semigroup(const Automaton& aut,
                                                   std::size_t max_len);
// The same set by literally enumerating every word; exponential in max_len.
std::set<std::vector<StateIndex>> oracle_semigroup_by_words(
    const Automaton& aut, std::size_t max_len);

// Every map S -> T that commutes with all letters (|T|^|S| candidates).
std::vector<std::vector<StateIndex>> oracle_homomorphisms(const Automaton& from,
                                                          const Automaton& to);
// Every bijection S -> T that commutes with all letters (|S|! candidates).
std::vector<std::vector<StateIndex>> oracle_isomorphisms(const Automaton& a,
                                                         const Automaton& b);

// Lexicographically least relabelled table over all n! state relabellings;
// two automata on one alphabet are isomorphic iff these agree.
std::vector<StateIndex> oracle_canonical_table(const Automaton& aut);

// Whether `aut` is isomorphic to P x R for some strongly connected
// permutation automaton P and strongly connected synchronizing automaton R
// on aut's alphabet with |P|·|R| = |S|. Proper factor sizes are enumerated
// exhaustively; the splits n = n·1 and n = 1·n reduce to classifying `aut`
// itself, since X x 1 ≅ X and the properties are isomorphism invariant.
// Limited to 8 states.
bool oracle_factorization(const Automaton& aut);

// ---- construction helpers --------------------------------------------------

// Reorders states: state s of `aut` becomes state perm[s] of the result,
// keeping its name.
Automaton relabel(const Automaton& aut, std::span<const StateIndex> perm);
Automaton one_state(std::span<const std::string> alphabet);
std::vector<StateIndex> random_permutation(std::size_t n, Rng& rng);

}  // namespace autalg::testkit

#endif  // AUTALG_TESTKIT_H_

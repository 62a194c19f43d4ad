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

#include "autalg/testkit.h"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>

#include "autalg/errors.h"

namespace autalg::testkit {
namespace {

constexpr std::size_t kMaxOracleStates = 8;

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > cap / base) {
      throw CapExceeded("exhaustive enumeration exceeds the cap of " +
                        std::to_string(cap) + " automata");
    }
    result *= base;
  }
  return result;
}

bool passes(const Automaton& aut, unsigned filters) {
  if ((filters & kPermutation) && !oracle_permutation(aut)) return false;
  if ((filters & kStronglyConnected) && !oracle_strongly_connected(aut)) {
    return false;
  }
  if ((filters & kSynchronizing) && !oracle_synchronizing(aut)) return false;
  return true;
}

std::vector<StateIndex> product_table(const Automaton& p, const Automaton& r) {
  const std::size_t k = p.letter_count();
  const std::size_t m = r.state_count();
  std::vector<StateIndex> table;
  table.reserve(p.state_count() * m * k);
  for (StateIndex s = 0; s < p.state_count(); ++s) {
    for (StateIndex t = 0; t < m; ++t) {
      for (LetterIndex a = 0; a < k; ++a) {
        table.push_back(
            static_cast<StateIndex>(p.next(s, a) * m + r.next(t, a)));
      }
    }
  }
  return table;
}

std::vector<StateIndex> canonical_of_table(std::size_t n, std::size_t k,
                                           std::span<const StateIndex> table) {
  std::vector<StateIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<StateIndex> best;
  std::vector<StateIndex> candidate(table.size());
  do {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t a = 0; a < k; ++a) {
        candidate[perm[s] * k + a] = perm[table[s * k + a]];
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Canonical tables of every P x R with |P| = p, |R| = r on `alphabet`.
const std::set<std::vector<StateIndex>>& product_canon(
    std::size_t p, std::size_t r, const std::vector<std::string>& alphabet) {
  static std::mutex mu;
  static std::map<
      std::tuple<std::size_t, std::size_t, std::vector<std::string>>,
      std::set<std::vector<StateIndex>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, r, alphabet);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Automaton> perms;
  ExhaustiveAutomata(p, alphabet).for_each([&](const Automaton& a) {
    if (oracle_permutation(a) && oracle_strongly_connected(a))
      perms.push_back(a);
  });
  std::vector<Automaton> syncs;
  ExhaustiveAutomata(r, alphabet).for_each([&](const Automaton& a) {
    if (oracle_synchronizing(a) && oracle_strongly_connected(a)) {
      syncs.push_back(a);
    }
  });
  std::set<std::vector<StateIndex>> forms;
  for (const Automaton& pa : perms) {
    for (const Automaton& ra : syncs) {
      forms.insert(
          canonical_of_table(p * r, alphabet.size(), product_table(pa, ra)));
    }
  }
  return cache.emplace(std::move(key), std::move(forms)).first->second;
}

std::uint64_t encode(std::span<const StateIndex> mapping) {
  std::uint64_t code = 0;
  for (StateIndex t : mapping) code = code * mapping.size() + t;
  return code;
}

void decode(std::uint64_t code, std::vector<StateIndex>& mapping) {
  const std::size_t n = mapping.size();
  for (std::size_t i = n; i-- > 0;) {
    mapping[i] = static_cast<StateIndex>(code % n);
    code /= n;
  }
}

}  // namespace

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::string> default_state_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

std::vector<std::string> default_alphabet(std::size_t k) {
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < k; ++i) letters.push_back(std::to_string(i));
  return letters;
}

std::vector<StateIndex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<StateIndex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i-- > 1;) {
    std::swap(perm[i], perm[rng.uniform_below(i + 1)]);
  }
  return perm;
}

Automaton gen_random(const GeneratorConfig& cfg, Rng& rng) {
  if (cfg.states == 0 || cfg.letters == 0) {
    throw InvalidArgument("generator needs at least one state and one letter");
  }
  const std::size_t n = cfg.states;
  const std::size_t k = cfg.letters;
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    std::vector<StateIndex> table(n * k);
    if (cfg.filters & kPermutation) {
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<StateIndex> perm = random_permutation(n, rng);
        for (std::size_t s = 0; s < n; ++s) table[s * k + a] = perm[s];
      }
    } else {
      for (StateIndex& t : table) {
        t = static_cast<StateIndex>(rng.uniform_below(n));
      }
    }
    Automaton aut(default_state_names(n), default_alphabet(k),
                  std::move(table));
    if (passes(aut, cfg.filters)) return aut;
  }
  throw CapExceeded("no automaton satisfying the filters after " +
                    std::to_string(cfg.max_attempts) + " attempts");
}

Automaton gen_random(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_random(cfg, rng);
}

ExhaustiveAutomata::ExhaustiveAutomata(std::size_t n, std::size_t k,
                                       std::uint64_t cap)
    : ExhaustiveAutomata(n, default_alphabet(k), cap) {}

ExhaustiveAutomata::ExhaustiveAutomata(std::size_t n,
                                       std::vector<std::string> alphabet,
                                       std::uint64_t cap)
    : n_(n),
      states_(default_state_names(n)),
      alphabet_(std::move(alphabet)),
      count_(0) {
  if (n == 0 || alphabet_.empty()) {
    throw InvalidArgument(
        "enumeration needs at least one state and one letter");
  }
  count_ = checked_power(n, n * alphabet_.size(), cap);
}

Automaton ExhaustiveAutomata::at(std::uint64_t index) const {
  if (index >= count_) throw InvalidArgument("enumeration index out of range");
  std::vector<StateIndex> table(n_ * alphabet_.size());
  for (std::size_t i = table.size(); i-- > 0;) {
    table[i] = static_cast<StateIndex>(index % n_);
    index /= n_;
  }
  return Automaton(states_, alphabet_, std::move(table));
}

void ExhaustiveAutomata::for_each(
    const std::function<void(const Automaton&)>& fn) const {
  std::vector<StateIndex> table(n_ * alphabet_.size(), 0);
  for (std::uint64_t index = 0; index < count_; ++index) {
    fn(Automaton(states_, alphabet_, table));
    // Odometer increment, last entry fastest.
    for (std::size_t i = table.size(); i-- > 0;) {
      if (++table[i] < n_) break;
      table[i] = 0;
    }
  }
}

std::vector<Automaton> gen_exhaustive(const GeneratorConfig& cfg) {
  std::vector<Automaton> out;
  ExhaustiveAutomata(cfg.states, cfg.letters).for_each([&](const Automaton& a) {
    if (passes(a, cfg.filters)) out.push_back(a);
  });
  return out;
}

bool oracle_strongly_connected(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (StateIndex s = 0; s < n; ++s) {
    reach[s][s] = true;
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      reach[s][aut.next(s, a)] = true;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][m]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[m][j]) reach[i][j] = true;
      }
    }
  }
  for (const auto& row : reach) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

bool oracle_permutation(const Automaton& aut) {
  for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
    for (StateIndex s = 0; s < aut.state_count(); ++s) {
      for (StateIndex t = s + 1; t < aut.state_count(); ++t) {
        if (aut.next(s, a) == aut.next(t, a)) return false;
      }
    }
  }
  return true;
}

bool oracle_synchronizing(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  if (n > 24) throw CapExceeded("subset search limited to 24 states");
  const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::deque<std::uint32_t> queue{full};
  seen[full] = true;
  while (!queue.empty()) {
    std::uint32_t set = queue.front();
    queue.pop_front();
    if ((set & (set - 1)) == 0) return true;  // a single state
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      std::uint32_t image = 0;
      for (StateIndex s = 0; s < n; ++s) {
        if (set & (1u << s)) image |= 1u << aut.next(s, a);
      }
      if (!seen[image]) {
        seen[image] = true;
        queue.push_back(image);
      }
    }
  }
  return false;
}

std::set<std::vector<StateIndex>> oracle_semigroup(const Automaton& aut,
                                                   std::size_t max_len) {
  const std::size_t n = aut.state_count();
  if (n > kMaxOracleStates) {
    throw CapExceeded("semigroup oracle limited to 8 states");
  }
  std::uint64_t codes = 1;
  for (std::size_t i = 0; i < n; ++i) codes *= n;
  std::vector<bool> seen(codes, false);

  std::vector<StateIndex> mapping(n);
  std::vector<std::uint64_t> level;
  for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
    for (StateIndex s = 0; s < n; ++s) mapping[s] = aut.next(s, a);
    level.push_back(encode(mapping));
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (std::uint64_t c : level) seen[c] = true;
    if (len == max_len) break;
    std::vector<std::uint64_t> next;
    next.reserve(level.size() * aut.letter_count());
    for (std::uint64_t c : level) {
      decode(c, mapping);
      std::vector<StateIndex> extended(n);
      for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
        for (StateIndex s = 0; s < n; ++s)
          extended[s] = aut.next(mapping[s], a);
        next.push_back(encode(extended));
      }
    }
    level = std::move(next);
  }

  std::set<std::vector<StateIndex>> out;
  for (std::uint64_t c = 0; c < codes; ++c) {
    if (seen[c]) {
      decode(c, mapping);
      out.insert(mapping);
    }
  }
  return out;
}

std::set<std::vector<StateIndex>> oracle_semigroup_by_words(
    const Automaton& aut, std::size_t max_len) {
  const std::size_t n = aut.state_count();
  const std::size_t k = aut.letter_count();
  std::set<std::vector<StateIndex>> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<LetterIndex> word(len, 0);
    for (;;) {
      std::vector<StateIndex> mapping(n);
      for (StateIndex s = 0; s < n; ++s) {
        StateIndex t = s;
        for (LetterIndex a : word) t = aut.next(t, a);
        mapping[s] = t;
      }
      out.insert(std::move(mapping));
      std::size_t i = len;
      while (i > 0 && ++word[i - 1] == k) word[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<std::vector<StateIndex>> oracle_homomorphisms(const Automaton& from,
                                                          const Automaton& to) {
  std::vector<std::vector<StateIndex>> out;
  if (from.alphabet().size() != to.alphabet().size() ||
      !from.same_alphabet(to)) {
    return out;
  }
  const std::size_t n = from.state_count();
  const std::size_t m = to.state_count();
  std::vector<StateIndex> map(n, 0);
  for (;;) {
    bool ok = true;
    for (StateIndex s = 0; s < n && ok; ++s) {
      for (LetterIndex a = 0; a < from.letter_count(); ++a) {
        if (map[from.next(s, a)] != to.next(map[s], a)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(map);
    std::size_t i = n;
    while (i > 0 && ++map[i - 1] == m) map[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<std::vector<StateIndex>> oracle_isomorphisms(const Automaton& a,
                                                         const Automaton& b) {
  std::vector<std::vector<StateIndex>> out;
  if (a.state_count() != b.state_count() || !a.same_alphabet(b)) return out;
  std::vector<StateIndex> perm(a.state_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (StateIndex s = 0; s < a.state_count() && ok; ++s) {
      for (LetterIndex x = 0; x < a.letter_count(); ++x) {
        if (perm[a.next(s, x)] != b.next(perm[s], x)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<StateIndex> oracle_canonical_table(const Automaton& aut) {
  if (aut.state_count() > kMaxOracleStates) {
    throw CapExceeded("canonical form limited to 8 states");
  }
  return canonical_of_table(aut.state_count(), aut.letter_count(), aut.table());
}

bool oracle_factorization(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  if (n > kMaxOracleStates) {
    throw CapExceeded("factorization oracle limited to 8 states");
  }
  if (oracle_strongly_connected(aut) &&
      (oracle_permutation(aut) || oracle_synchronizing(aut))) {
    return true;
  }
  const std::vector<std::string> alphabet(aut.alphabet().begin(),
                                          aut.alphabet().end());
  std::vector<StateIndex> canon;
  for (std::size_t p = 2; p < n; ++p) {
    if (n % p != 0) continue;
    if (canon.empty()) canon = oracle_canonical_table(aut);
    if (product_canon(p, n / p, alphabet).count(canon)) return true;
  }
  return false;
}

Automaton relabel(const Automaton& aut, std::span<const StateIndex> perm) {
  const std::size_t n = aut.state_count();
  const std::size_t k = aut.letter_count();
  if (perm.size() != n || !is_bijection(perm)) {
    throw InvalidArgument("relabel needs a permutation of the states");
  }
  std::vector<std::string> names(n);
  std::vector<StateIndex> table(n * k);
  for (StateIndex s = 0; s < n; ++s) {
    names[perm[s]] = aut.state_name(s);
    for (LetterIndex a = 0; a < k; ++a) {
      table[perm[s] * k + a] = perm[aut.next(s, a)];
    }
  }
  return Automaton(
      std::move(names),
      std::vector<std::string>(aut.alphabet().begin(), aut.alphabet().end()),
      std::move(table));
}

Automaton one_state(std::span<const std::string> alphabet) {
  return Automaton({"u"},
                   std::vector<std::string>(alphabet.begin(), alphabet.end()),
                   std::vector<StateIndex>(alphabet.size(), 0));
}

}  // namespace autalg::testkit

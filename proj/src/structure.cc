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

#include "autalg/structure.h"

#include <algorithm>
#include <deque>
#include <iterator>

#include "autalg/errors.h"

namespace autalg {
namespace {

std::vector<bool> reachable(const std::vector<std::vector<StateIndex>>& graph,
                            StateIndex from) {
  std::vector<bool> seen(graph.size(), false);
  std::vector<StateIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    StateIndex s = stack.back();
    stack.pop_back();
    for (StateIndex t : graph[s]) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

// Shortest word leading from `from` to `to`, letters tried in alphabet order.
std::optional<Word> path_word(const Automaton& aut, StateIndex from,
                              StateIndex to) {
  const std::size_t n = aut.state_count();
  constexpr StateIndex kNone = static_cast<StateIndex>(-1);
  std::vector<StateIndex> parent(n, kNone);
  std::vector<LetterIndex> via(n, 0);
  std::deque<StateIndex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    StateIndex s = queue.front();
    queue.pop_front();
    if (s == to) break;
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      StateIndex t = aut.next(s, a);
      if (parent[t] == kNone) {
        parent[t] = s;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  if (parent[to] == kNone) return std::nullopt;
  Word word;
  for (StateIndex s = to; s != from; s = parent[s]) {
    word.letters.push_back(via[s]);
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

}  // namespace

bool is_strongly_connected(const Automaton& aut) {
  const std::size_t n = aut.state_count();
  std::vector<std::vector<StateIndex>> forward(n), backward(n);
  for (StateIndex s = 0; s < n; ++s) {
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      forward[s].push_back(aut.next(s, a));
      backward[aut.next(s, a)].push_back(s);
    }
  }
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(reachable(forward, 0)) && all(reachable(backward, 0));
}

bool is_permutation(const Automaton& aut) {
  std::vector<StateIndex> column(aut.state_count());
  for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
    for (StateIndex s = 0; s < aut.state_count(); ++s) {
      column[s] = aut.next(s, a);
    }
    if (!is_bijection(column)) return false;
  }
  return true;
}

SyncResult is_synchronizing(const Automaton& aut,
                            const TransitionSemigroup& sg) {
  (void)aut;
  for (const Transformation& t : sg.elements()) {
    if (rank(t) == 1) return {true, t.witness()};
  }
  return {};
}

Word reset_word_to(const Automaton& aut, const TransitionSemigroup& sg,
                   StateIndex target) {
  if (target >= aut.state_count()) {
    throw InvalidArgument("unknown target state index " +
                          std::to_string(target));
  }
  SyncResult sync = is_synchronizing(aut, sg);
  if (!sync.synchronizing) {
    throw PreconditionError("automaton is not synchronizing");
  }
  if (!is_strongly_connected(aut)) {
    throw PreconditionError("automaton is not strongly connected");
  }
  const StateIndex sink = apply(aut, 0, *sync.reset_word);
  std::optional<Word> tail = path_word(aut, sink, target);
  if (!tail) {
    throw InternalInconsistency("no path in a strongly connected automaton");
  }
  return *sync.reset_word + *tail;
}

bool MinimalIdeal::contains(std::size_t element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

bool is_right_simple(const MinimalIdeal& ideal, const TransitionSemigroup& sg) {
  std::vector<bool> hit(sg.size(), false);
  for (std::size_t a : ideal.members) {
    std::fill(hit.begin(), hit.end(), false);
    std::size_t distinct = 0;
    for (std::size_t x : ideal.members) {
      std::size_t p = sg.multiply(a, x);
      if (!ideal.contains(p)) return false;
      if (!hit[p]) {
        hit[p] = true;
        ++distinct;
      }
    }
    if (distinct != ideal.members.size()) return false;
  }
  return true;
}

MinimalIdeal minimal_ideal(const TransitionSemigroup& sg) {
  MinimalIdeal ideal;
  if (sg.size() == 0) return ideal;
  std::vector<std::size_t> ranks(sg.size());
  ideal.min_rank = sg.state_count();
  for (std::size_t i = 0; i < sg.size(); ++i) {
    ranks[i] = rank(sg.element(i));
    ideal.min_rank = std::min(ideal.min_rank, ranks[i]);
  }
  for (std::size_t i = 0; i < sg.size(); ++i) {
    if (ranks[i] == ideal.min_rank) ideal.members.push_back(i);
  }
  for (std::size_t a : ideal.members) {
    if (sg.multiply(a, a) == a) ideal.idempotents.push_back(a);
    for (std::size_t x = 0; x < sg.size(); ++x) {
      if (ranks[sg.multiply(a, x)] != ideal.min_rank ||
          ranks[sg.multiply(x, a)] != ideal.min_rank) {
        throw InternalInconsistency(
            "minimal-rank elements do not form a two-sided ideal");
      }
    }
  }
  ideal.right_simple = is_right_simple(ideal, sg);
  ideal.right_group = ideal.right_simple && !ideal.idempotents.empty();
  return ideal;
}

ImagePartition idempotent_image_partition(const Automaton& aut,
                                          const TransitionSemigroup& sg,
                                          const MinimalIdeal& ideal) {
  ImagePartition result;
  std::vector<std::vector<StateIndex>> images;
  std::vector<Word> witnesses;
  for (std::size_t e : ideal.idempotents) {
    std::vector<StateIndex> im = image(sg.element(e));
    if (std::find(images.begin(), images.end(), im) == images.end()) {
      images.push_back(std::move(im));
      witnesses.push_back(sg.element(e).witness());
    }
  }

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      std::vector<StateIndex> common;
      std::set_intersection(images[i].begin(), images[i].end(),
                            images[j].begin(), images[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      std::vector<StateIndex> diff;
      std::set_symmetric_difference(images[i].begin(), images[i].end(),
                                    images[j].begin(), images[j].end(),
                                    std::back_inserter(diff));
      ImageViolation v;
      v.kind = ImageViolation::Kind::kOverlap;
      v.first = witnesses[i];
      v.second = witnesses[j];
      v.state = diff.front();  // distinct sorted images: diff is nonempty
      result.violations.push_back(std::move(v));
    }
  }
  std::vector<bool> covered(aut.state_count(), false);
  for (const auto& im : images) {
    for (StateIndex s : im) covered[s] = true;
  }
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    if (!covered[s]) {
      ImageViolation v;
      v.kind = ImageViolation::Kind::kUncovered;
      v.state = s;
      result.violations.push_back(std::move(v));
    }
  }
  result.is_partition = result.violations.empty() && !images.empty();
  if (result.is_partition) result.blocks = std::move(images);
  return result;
}

QuasiIdealReport quasi_ideal_report(const Automaton& aut) {
  return quasi_ideal_report(aut, semigroup(aut));
}

QuasiIdealReport quasi_ideal_report(const Automaton& aut,
                                    const TransitionSemigroup& sg) {
  QuasiIdealReport report;
  report.strongly_connected = is_strongly_connected(aut);
  const MinimalIdeal ideal = minimal_ideal(sg);
  report.ideal_right_group = ideal.right_group;
  ImagePartition partition = idempotent_image_partition(aut, sg, ideal);
  report.images_partition = partition.is_partition;
  report.verdict = report.strongly_connected && report.ideal_right_group &&
                   report.images_partition;

  report.semigroup_size = sg.size();
  report.ideal_size = ideal.members.size();
  report.min_rank = ideal.min_rank;
  for (std::size_t e : ideal.idempotents) {
    report.idempotents.push_back(sg.element(e).witness());
  }
  report.blocks = std::move(partition.blocks);
  report.violations = std::move(partition.violations);
  return report;
}

}  // namespace autalg

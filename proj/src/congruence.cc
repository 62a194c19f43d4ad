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

#include "autalg/congruence.h"

#include <algorithm>
#include <map>
#include <utility>

#include "autalg/errors.h"

namespace autalg {
namespace {

bool shortlex_name_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Partition Partition::from_blocks(std::size_t state_count,
                                 std::vector<std::vector<StateIndex>> blocks) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(state_count, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("empty partition block");
    for (StateIndex s : blocks[b]) {
      if (s >= state_count) {
        throw InvalidArgument("partition block names state index " +
                              std::to_string(s) + " out of range");
      }
      if (labels[s] != kUnset) {
        throw InvalidArgument("state index " + std::to_string(s) +
                              " appears in more than one block");
      }
      labels[s] = b;
    }
  }
  for (std::size_t s = 0; s < state_count; ++s) {
    if (labels[s] == kUnset) {
      throw InvalidArgument("state index " + std::to_string(s) +
                            " is not covered by the partition");
    }
  }
  return from_labels(labels);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.block_of_.resize(labels.size());
  std::map<std::size_t, std::size_t> block_for_label;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    auto [it, inserted] =
        block_for_label.try_emplace(labels[s], p.blocks_.size());
    if (inserted) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(static_cast<StateIndex>(s));
    p.block_of_[s] = it->second;
  }
  return p;
}

Partition Partition::discrete(std::size_t state_count) {
  std::vector<std::size_t> labels(state_count);
  for (std::size_t s = 0; s < state_count; ++s) labels[s] = s;
  return from_labels(labels);
}

Partition Partition::full(std::size_t state_count) {
  return from_labels(std::vector<std::size_t>(state_count, 0));
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.state_count() != b.state_count()) {
    throw InvalidArgument("partitions over different state counts");
  }
  std::vector<std::size_t> labels(a.state_count());
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    labels[s] = a.block_of(s) * b.block_count() + b.block_of(s);
  }
  return Partition::from_labels(labels);
}

std::string partition_text(const Automaton& aut, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += aut.state_name(block[i]);
    }
    out += '}';
  }
  return out;
}

Partition pi_congruence(const Automaton& aut, const TransitionSemigroup& sg,
                        const MinimalIdeal& ideal) {
  if (!is_strongly_connected(aut)) {
    throw PreconditionError("automaton is not strongly connected");
  }
  if (!ideal.right_group) {
    throw PreconditionError("minimal ideal is not a right group");
  }
  // Two states are related iff their columns of images under the ideal
  // elements coincide: the intersection of the kernels.
  std::map<std::vector<StateIndex>, std::size_t> label_of_column;
  std::vector<std::size_t> labels(aut.state_count());
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    std::vector<StateIndex> column;
    column.reserve(ideal.members.size());
    for (std::size_t x : ideal.members) column.push_back(sg.element(x)[s]);
    labels[s] =
        label_of_column.try_emplace(std::move(column), label_of_column.size())
            .first->second;
  }
  Partition pi = Partition::from_labels(labels);
  if (!is_congruence(aut, pi)) {
    throw InternalInconsistency(
        "kernel relation of the minimal ideal is not a congruence");
  }
  return pi;
}

Partition rho_congruence(const Automaton& aut, const TransitionSemigroup& sg,
                         const MinimalIdeal& ideal) {
  ImagePartition images = idempotent_image_partition(aut, sg, ideal);
  if (!images.is_partition) {
    throw PreconditionError(
        "idempotent images of the minimal ideal do not partition the states");
  }
  Partition rho = Partition::from_blocks(aut.state_count(), images.blocks);
  if (ideal.right_group && !is_congruence(aut, rho)) {
    throw InternalInconsistency(
        "idempotent image partition is not a congruence");
  }
  return rho;
}

bool is_congruence(const Automaton& aut, const Partition& p) {
  if (p.state_count() != aut.state_count()) return false;
  for (const auto& block : p.blocks()) {
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      const std::size_t target = p.block_of(aut.next(block.front(), a));
      for (StateIndex s : block) {
        if (p.block_of(aut.next(s, a)) != target) return false;
      }
    }
  }
  return true;
}

Automaton quotient(const Automaton& aut, const Partition& p) {
  if (!is_congruence(aut, p)) {
    throw PreconditionError("partition is not a congruence");
  }
  std::vector<std::string> names;
  for (const auto& block : p.blocks()) {
    const std::string* best = &aut.state_name(block.front());
    for (StateIndex s : block) {
      if (shortlex_name_less(aut.state_name(s), *best)) {
        best = &aut.state_name(s);
      }
    }
    names.push_back("[" + *best + "]");
  }
  const std::size_t k = aut.letter_count();
  std::vector<StateIndex> table(p.block_count() * k);
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    for (LetterIndex a = 0; a < k; ++a) {
      table[b * k + a] = static_cast<StateIndex>(
          p.block_of(aut.next(p.blocks()[b].front(), a)));
    }
  }
  std::vector<std::string> alphabet(aut.alphabet().begin(),
                                    aut.alphabet().end());
  return Automaton(std::move(names), std::move(alphabet), std::move(table));
}

}  // namespace autalg

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

// Splitting a quasi-ideal automaton into a permutation factor and a
// synchronizing factor, and the converse check on products.
//
// decompose() turns every intermediate claim of the construction into a
// runtime check: the kernel quotient must be a strongly connected
// permutation automaton, the image quotient a strongly connected
// synchronizing automaton reset by every idempotent, and the canonical map
// onto their product a bijective homomorphism. A failed check throws
// InternalInconsistency; a negative verdict is reported, not thrown.

#ifndef AUTALG_DECOMPOSE_H_
#define AUTALG_DECOMPOSE_H_

#include <optional>
#include <string_view>

#include "autalg/automaton.h"
#include "autalg/congruence.h"
#include "autalg/errors.h"
#include "autalg/product.h"
#include "autalg/structure.h"

namespace autalg {

enum class FailureStage {
  kNone,
  kStrongConnectivity,
  kIdealRightGroup,
  kImagesPartition,
};

std::string_view failure_stage_name(FailureStage stage);

struct PermutationClass {
  bool permutation = false;
  bool strongly_connected = false;
};

struct SynchronizingClass {
  bool synchronizing = false;
  bool strongly_connected = false;
};

struct DecompositionReport {
  QuasiIdealReport quasi_ideal;
  FailureStage failure_stage = FailureStage::kNone;

  // Present iff quasi_ideal.verdict.
  std::optional<Partition> pi;
  std::optional<Partition> rho;
  std::optional<Automaton> quotient_pi;
  std::optional<Automaton> quotient_rho;
  PermutationClass quotient_pi_class;
  SynchronizingClass quotient_rho_class;
  // Onto quotient_pi x quotient_rho.
  std::optional<StateMap> iso;

  bool succeeded() const { return iso.has_value(); }
};

DecompositionReport decompose(const Automaton& aut);

// Quasi-ideal report of a x b. Throws PreconditionError naming the failed
// hypothesis unless `a` is a strongly connected permutation automaton, `b`
// a strongly connected synchronizing automaton, and both share an alphabet.
QuasiIdealReport verify_product(const Automaton& a, const Automaton& b);

// Raised by roundtrip() when the input is not quasi-ideal.
class DecompositionFailed : public Error {
 public:
  explicit DecompositionFailed(FailureStage stage);
  FailureStage stage() const { return stage_; }

 private:
  FailureStage stage_;
};

// decompose, rebuild the product of the two quotients via verify_product,
// and look for an isomorphism between `aut` and the rebuilt product.
bool roundtrip(const Automaton& aut);

}  // namespace autalg

#endif  // AUTALG_DECOMPOSE_H_

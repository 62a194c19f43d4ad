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

#include "autalg/decompose.h"

#include <string>

namespace autalg {
namespace {

void require(bool condition, const char* claim) {
  if (!condition) throw InternalInconsistency(claim);
}

}  // namespace

std::string_view failure_stage_name(FailureStage stage) {
  switch (stage) {
    case FailureStage::kNone:
      return "none";
    case FailureStage::kStrongConnectivity:
      return "strong_connectivity";
    case FailureStage::kIdealRightGroup:
      return "ideal_right_group";
    case FailureStage::kImagesPartition:
      return "images_partition";
  }
  return "unknown";
}

DecompositionReport decompose(const Automaton& aut) {
  DecompositionReport report;
  const TransitionSemigroup sg = semigroup(aut);
  report.quasi_ideal = quasi_ideal_report(aut, sg);
  const QuasiIdealReport& q = report.quasi_ideal;
  if (!q.strongly_connected) {
    report.failure_stage = FailureStage::kStrongConnectivity;
  } else if (!q.ideal_right_group) {
    report.failure_stage = FailureStage::kIdealRightGroup;
  } else if (!q.images_partition) {
    report.failure_stage = FailureStage::kImagesPartition;
  }
  if (report.failure_stage != FailureStage::kNone) return report;

  const MinimalIdeal ideal = minimal_ideal(sg);
  report.pi = pi_congruence(aut, sg, ideal);
  report.rho = rho_congruence(aut, sg, ideal);
  report.quotient_pi = quotient(aut, *report.pi);
  report.quotient_rho = quotient(aut, *report.rho);

  const Automaton& by_pi = *report.quotient_pi;
  const Automaton& by_rho = *report.quotient_rho;
  report.quotient_pi_class = {is_permutation(by_pi),
                              is_strongly_connected(by_pi)};
  const TransitionSemigroup rho_sg = semigroup(by_rho);
  report.quotient_rho_class = {is_synchronizing(by_rho, rho_sg).synchronizing,
                               is_strongly_connected(by_rho)};
  require(report.quotient_pi_class.permutation,
          "kernel quotient is not a permutation automaton");
  require(report.quotient_pi_class.strongly_connected,
          "kernel quotient is not strongly connected");
  require(report.quotient_rho_class.synchronizing,
          "image quotient is not synchronizing");
  require(report.quotient_rho_class.strongly_connected,
          "image quotient is not strongly connected");
  for (std::size_t e : ideal.idempotents) {
    require(rank(transformation_of_word(by_rho, sg.element(e).witness())) == 1,
            "an idempotent does not reset the image quotient");
  }

  PairEvidence evidence = check_congruence_pair(aut, *report.pi, *report.rho);
  require(evidence.meet_is_identity,
          "the two congruences intersect beyond the identity");
  require(evidence.composition_is_full,
          "the composition of the two congruences is not full");
  report.iso = congruence_pair_iso(aut, *report.pi, *report.rho);
  require(
      report.quotient_pi->state_count() * report.quotient_rho->state_count() ==
          aut.state_count(),
      "factor sizes do not multiply to the state count");
  return report;
}

QuasiIdealReport verify_product(const Automaton& a, const Automaton& b) {
  if (!a.same_alphabet(b)) {
    throw PreconditionError("factors do not share an alphabet");
  }
  if (!is_permutation(a)) {
    throw PreconditionError("first factor is not a permutation automaton");
  }
  if (!is_strongly_connected(a)) {
    throw PreconditionError("first factor is not strongly connected");
  }
  if (!is_synchronizing(b, semigroup(b)).synchronizing) {
    throw PreconditionError("second factor is not synchronizing");
  }
  if (!is_strongly_connected(b)) {
    throw PreconditionError("second factor is not strongly connected");
  }
  QuasiIdealReport report = quasi_ideal_report(direct_product(a, b));
  require(report.verdict,
          "product of a permutation and a synchronizing factor is not "
          "quasi-ideal");
  return report;
}

DecompositionFailed::DecompositionFailed(FailureStage stage)
    : Error("automaton is not quasi-ideal (failed: " +
            std::string(failure_stage_name(stage)) + ")"),
      stage_(stage) {}

bool roundtrip(const Automaton& aut) {
  DecompositionReport report = decompose(aut);
  if (!report.succeeded()) throw DecompositionFailed(report.failure_stage);
  QuasiIdealReport rebuilt =
      verify_product(*report.quotient_pi, *report.quotient_rho);
  if (!rebuilt.verdict) return false;
  const Automaton product =
      direct_product(*report.quotient_pi, *report.quotient_rho);
  return find_isomorphism(aut, product).has_value();
}

}  // namespace autalg

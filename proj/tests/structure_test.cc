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

#include <gtest/gtest.h>

#include "autalg/errors.h"
#include "autalg/testkit.h"
#include "test_support.h"

namespace autalg {
namespace {

using test::corpus;

std::vector<std::string> witnesses(const Automaton& aut,
                                   const TransitionSemigroup& sg,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx)
    out.push_back(render_word(aut, sg.element(i).witness()));
  return out;
}

std::vector<std::vector<std::string>> named_blocks(
    const Automaton& aut, const std::vector<std::vector<StateIndex>>& blocks) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : blocks) {
    out.emplace_back();
    for (StateIndex s : b) out.back().push_back(aut.state_name(s));
  }
  return out;
}

Automaton one_letter(const std::vector<StateIndex>& targets) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    names.push_back("p" + std::to_string(i));
  }
  return Automaton(names, {"a"}, targets);
}

TEST(StronglyConnected, Examples) {
  EXPECT_TRUE(is_strongly_connected(corpus("a")));
  EXPECT_TRUE(is_strongly_connected(corpus("axb")));
  EXPECT_FALSE(is_strongly_connected(one_letter({0, 0})));
  EXPECT_FALSE(is_strongly_connected(corpus("twocomponent")));
  EXPECT_TRUE(is_strongly_connected(one_letter({0})));
}

TEST(Permutation, Examples) {
  EXPECT_TRUE(is_permutation(corpus("a")));
  EXPECT_FALSE(is_permutation(corpus("b")));
  EXPECT_TRUE(is_permutation(one_letter({0})));
}

TEST(Synchronizing, Examples) {
  Automaton b = corpus("b");
  SyncResult rb = is_synchronizing(b, semigroup(b));
  EXPECT_TRUE(rb.synchronizing);
  EXPECT_EQ(render_word(b, *rb.reset_word), "0");

  Automaton a = corpus("a");
  SyncResult ra = is_synchronizing(a, semigroup(a));
  EXPECT_FALSE(ra.synchronizing);
  EXPECT_FALSE(ra.reset_word.has_value());

  Automaton u = one_letter({0});
  SyncResult ru = is_synchronizing(u, semigroup(u));
  EXPECT_TRUE(ru.synchronizing);
  EXPECT_EQ(*ru.reset_word, (Word{{0}}));
}

TEST(ResetWordTo, TargetsOfB) {
  Automaton b = corpus("b");
  TransitionSemigroup sg = semigroup(b);
  for (const char* target : {"t1", "t2"}) {
    const StateIndex t = b.state_index(target);
    Word w = reset_word_to(b, sg, t);
    const Transformation f = transformation_of_word(b, w);
    EXPECT_EQ(f, transformation_of_word(b, parse_word(b, t == 0 ? "0" : "1")));
  }
}

TEST(ResetWordTo, ProductTargetRequiresSynchronizing) {
  Automaton p = corpus("axb");
  TransitionSemigroup sg = semigroup(p);
  EXPECT_THROW(reset_word_to(p, sg, 0), PreconditionError);
}

TEST(ResetWordTo, EveryTargetOnRandomSynchronizing) {
  testkit::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(6);
    cfg.letters = 2;
    cfg.filters = testkit::kStronglyConnected | testkit::kSynchronizing;
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    for (StateIndex target = 0; target < aut.state_count(); ++target) {
      Word w = reset_word_to(aut, sg, target);
      for (StateIndex s = 0; s < aut.state_count(); ++s) {
        ASSERT_EQ(apply(aut, s, w), target);
      }
    }
  }
}

TEST(ResetWordTo, Errors) {
  Automaton b = corpus("b");
  EXPECT_THROW(reset_word_to(b, semigroup(b), 5), InvalidArgument);
  Automaton a = corpus("a");
  EXPECT_THROW(reset_word_to(a, semigroup(a), 0), PreconditionError);
  Automaton split = one_letter({0, 0});
  EXPECT_THROW(reset_word_to(split, semigroup(split), 1), PreconditionError);
}

TEST(MinimalIdeal, GroupCase) {
  Automaton a = corpus("a");
  TransitionSemigroup sg = semigroup(a);
  MinimalIdeal ideal = minimal_ideal(sg);
  EXPECT_EQ(ideal.members.size(), 6u);
  EXPECT_EQ(ideal.min_rank, 3u);
  EXPECT_EQ(witnesses(a, sg, ideal.idempotents),
            std::vector<std::string>{"00"});
  EXPECT_TRUE(ideal.right_simple);
  EXPECT_TRUE(ideal.right_group);
}

TEST(MinimalIdeal, RightZeroCase) {
  Automaton b = corpus("b");
  TransitionSemigroup sg = semigroup(b);
  MinimalIdeal ideal = minimal_ideal(sg);
  EXPECT_EQ(witnesses(b, sg, ideal.members),
            (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(ideal.min_rank, 1u);
  EXPECT_EQ(ideal.idempotents, ideal.members);
  EXPECT_TRUE(is_right_simple(ideal, sg));
}

TEST(MinimalIdeal, ProductCase) {
  Automaton p = corpus("axb");
  TransitionSemigroup sg = semigroup(p);
  MinimalIdeal ideal = minimal_ideal(sg);
  EXPECT_EQ(ideal.members.size(), 12u);
  EXPECT_EQ(ideal.min_rank, 3u);
  EXPECT_EQ(witnesses(p, sg, ideal.idempotents),
            (std::vector<std::string>{"00", "11"}));
  EXPECT_TRUE(is_right_simple(ideal, sg));
}

TEST(MinimalIdeal, TwoConstantsAreRightZero) {
  Automaton z({"p", "q"}, {"a", "b"}, {0, 1, 0, 1});
  TransitionSemigroup sg = semigroup(z);
  MinimalIdeal ideal = minimal_ideal(sg);
  EXPECT_TRUE(is_right_simple(ideal, sg));
  EXPECT_TRUE(ideal.right_group);
}

TEST(MinimalIdeal, NotRightSimple) {
  // c and d share the image {p0,p2} but have different kernels, so they
  // form a left-zero band: c·x = c for every x.
  Automaton x({"p0", "p1", "p2"}, {"c", "d"}, {0, 0, 0, 2, 2, 2});
  TransitionSemigroup sg = semigroup(x);
  MinimalIdeal ideal = minimal_ideal(sg);
  EXPECT_EQ(ideal.min_rank, 2u);
  EXPECT_EQ(ideal.members.size(), 2u);
  EXPECT_FALSE(ideal.right_simple);
  EXPECT_FALSE(ideal.right_group);
  EXPECT_EQ(ideal.idempotents.size(), 2u);
}

TEST(ImagePartition, ProductAndC) {
  Automaton p = corpus("axb");
  TransitionSemigroup sp = semigroup(p);
  ImagePartition ip = idempotent_image_partition(p, sp, minimal_ideal(sp));
  ASSERT_TRUE(ip.is_partition);
  EXPECT_EQ(named_blocks(p, ip.blocks),
            (std::vector<std::vector<std::string>>{
                {"(s1,t1)", "(s2,t1)", "(s3,t1)"},
                {"(s1,t2)", "(s2,t2)", "(s3,t2)"}}));

  Automaton c = corpus("c");
  TransitionSemigroup sc = semigroup(c);
  ImagePartition ic = idempotent_image_partition(c, sc, minimal_ideal(sc));
  ASSERT_TRUE(ic.is_partition);
  EXPECT_EQ(named_blocks(c, ic.blocks),
            (std::vector<std::vector<std::string>>{{"q1", "q3", "q5"},
                                                   {"q2", "q4", "q6"}}));

  Automaton a = corpus("a");
  TransitionSemigroup sa = semigroup(a);
  ImagePartition ia = idempotent_image_partition(a, sa, minimal_ideal(sa));
  ASSERT_TRUE(ia.is_partition);
  EXPECT_EQ(ia.blocks.size(), 1u);
  EXPECT_EQ(ia.blocks[0].size(), 3u);
}

TEST(ImagePartition, Overlap) {
  // c has image {p0,p1} and d has image {p1,p2}; both are idempotent.
  Automaton x({"p0", "p1", "p2", "p3"}, {"c", "d"}, {0, 2, 1, 1, 0, 2, 1, 1});
  TransitionSemigroup sg = semigroup(x);
  MinimalIdeal ideal = minimal_ideal(sg);
  ImagePartition ip = idempotent_image_partition(x, sg, ideal);
  EXPECT_EQ(ideal.min_rank, 2u);
  ASSERT_FALSE(ip.is_partition);
  ASSERT_FALSE(ip.violations.empty());
  const ImageViolation& v = ip.violations.front();
  EXPECT_EQ(v.kind, ImageViolation::Kind::kOverlap);
  ASSERT_TRUE(v.first && v.second);
  const auto i1 = image(transformation_of_word(x, *v.first));
  const auto i2 = image(transformation_of_word(x, *v.second));
  EXPECT_NE(i1, i2);
  const bool in1 = std::count(i1.begin(), i1.end(), v.state) > 0;
  const bool in2 = std::count(i2.begin(), i2.end(), v.state) > 0;
  EXPECT_NE(in1, in2);
}

TEST(ImagePartition, Uncovered) {
  // Every letter avoids p2, so p2 is in no image.
  Automaton x({"p0", "p1", "p2"}, {"a"}, {1, 0, 0});
  TransitionSemigroup sg = semigroup(x);
  ImagePartition ip = idempotent_image_partition(x, sg, minimal_ideal(sg));
  ASSERT_FALSE(ip.is_partition);
  bool uncovered = false;
  for (const ImageViolation& v : ip.violations) {
    if (v.kind == ImageViolation::Kind::kUncovered) {
      uncovered = true;
      EXPECT_EQ(v.state, 2u);
    }
  }
  EXPECT_TRUE(uncovered);
}

TEST(QuasiIdealReport, Corpus) {
  for (const char* stem : {"axb", "c", "a"}) {
    SCOPED_TRACE(stem);
    QuasiIdealReport r = quasi_ideal_report(corpus(stem));
    EXPECT_TRUE(r.strongly_connected);
    EXPECT_TRUE(r.ideal_right_group);
    EXPECT_TRUE(r.images_partition);
    EXPECT_TRUE(r.verdict);
  }
}

// B turns out to be quasi-ideal: the two idempotent images {t1}, {t2}
// partition the states and the right-zero ideal is right simple.
TEST(QuasiIdealReport, ResetPairIsQuasiIdeal) {
  Automaton b = corpus("b");
  QuasiIdealReport r = quasi_ideal_report(b);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.blocks.size(), 2u);
  EXPECT_EQ(r.idempotents.size(), 2u);
}

TEST(QuasiIdealReport, AllFlagsFilledOnFailure) {
  QuasiIdealReport r = quasi_ideal_report(corpus("twocomponent"));
  EXPECT_FALSE(r.strongly_connected);
  EXPECT_TRUE(r.ideal_right_group);
  EXPECT_TRUE(r.images_partition);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.semigroup_size, 1u);
  EXPECT_EQ(r.min_rank, 2u);
}

TEST(StructureProperties, IdealAndRankLaws) {
  testkit::Rng rng(404);
  for (int round = 0; round < 300; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(5);
    cfg.letters = 1 + rng.uniform_below(3);
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    MinimalIdeal ideal = minimal_ideal(sg);
    std::size_t min_rank = aut.state_count();
    for (const Transformation& t : sg.elements()) {
      min_rank = std::min(min_rank, rank(t));
    }
    ASSERT_EQ(ideal.min_rank, min_rank);
    for (std::size_t m : ideal.members) {
      ASSERT_EQ(rank(sg.element(m)), min_rank);
      for (std::size_t x = 0; x < sg.size(); ++x) {
        ASSERT_TRUE(ideal.contains(sg.multiply(m, x)));
        ASSERT_TRUE(ideal.contains(sg.multiply(x, m)));
        ASSERT_LE(rank(sg.element(sg.multiply(m, x))),
                  std::min(rank(sg.element(m)), rank(sg.element(x))));
      }
    }
    for (std::size_t e : ideal.idempotents) {
      ASSERT_EQ(sg.multiply(e, e), e);
    }
    ASSERT_EQ(ideal.right_group,
              ideal.right_simple && !ideal.idempotents.empty());

    QuasiIdealReport r = quasi_ideal_report(aut, sg);
    ASSERT_EQ(r.verdict, r.strongly_connected && r.ideal_right_group &&
                             r.images_partition);
    if (r.images_partition) {
      std::vector<int> cover(aut.state_count(), 0);
      for (const auto& block : r.blocks) {
        ASSERT_FALSE(block.empty());
        for (StateIndex s : block) ++cover[s];
      }
      for (int c : cover) ASSERT_EQ(c, 1);
    }
  }
}

TEST(StructureProperties, SynchronizingStronglyConnectedIdeal) {
  testkit::Rng rng(17);
  for (int round = 0; round < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(6);
    cfg.letters = 2;
    cfg.filters = testkit::kStronglyConnected | testkit::kSynchronizing;
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    MinimalIdeal ideal = minimal_ideal(sg);
    ASSERT_EQ(ideal.min_rank, 1u);
    ASSERT_EQ(ideal.members.size(), aut.state_count());
    std::vector<int> constants_to(aut.state_count(), 0);
    for (std::size_t m : ideal.members) ++constants_to[sg.element(m)[0]];
    for (int c : constants_to) ASSERT_EQ(c, 1);
    for (std::size_t x : ideal.members) {
      for (std::size_t y : ideal.members) {
        ASSERT_EQ(sg.multiply(x, y), y);
      }
    }
  }
}

TEST(StructureProperties, GroupSemigroupImpliesPermutation) {
  testkit::Rng rng(23);
  int groups = 0;
  for (int round = 0; round < 2000 && groups < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(4);
    cfg.letters = 1 + rng.uniform_below(2);
    cfg.filters = testkit::kStronglyConnected;
    if (round % 2 == 0) cfg.filters |= testkit::kPermutation;
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    bool all_bijective = true;
    for (const Transformation& t : sg.elements()) {
      all_bijective = all_bijective && is_bijection(t.mapping());
    }
    if (sg.contains_identity_as_nonempty_word() && all_bijective) {
      ++groups;
      ASSERT_TRUE(is_permutation(aut));
    }
  }
  EXPECT_GE(groups, 200);
}

TEST(StructureProperties, IdempotentImagesCoverUnderHypotheses) {
  testkit::Rng rng(29);
  int hits = 0;
  for (int round = 0; round < 4000 && hits < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(6);
    cfg.letters = 2;
    cfg.filters = testkit::kStronglyConnected;
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    MinimalIdeal ideal = minimal_ideal(sg);
    if (!ideal.right_group) continue;
    ++hits;
    std::vector<bool> covered(aut.state_count(), false);
    for (std::size_t e : ideal.idempotents) {
      for (StateIndex s : image(sg.element(e))) covered[s] = true;
    }
    for (bool c : covered) ASSERT_TRUE(c);
  }
  EXPECT_GE(hits, 200);
}

}  // namespace
}  // namespace autalg

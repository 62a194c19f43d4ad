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

#include "autalg/semigroup.h"

#include <gtest/gtest.h>

#include <cmath>

#include "autalg/errors.h"
#include "autalg/structure.h"
#include "autalg/testkit.h"
#include "test_support.h"

namespace autalg {
namespace {

using test::corpus;
using test::witness_set;

std::string label_of(const Automaton& aut, const TransitionSemigroup& sg,
                     std::size_t i) {
  return render_word(aut, sg.element(i).witness());
}

std::size_t by_label(const Automaton& aut, const TransitionSemigroup& sg,
                     const std::string& w) {
  return class_of(sg, parse_word(aut, w));
}

TEST(Semigroup, PermutationGroupOnThreeStates) {
  Automaton a = corpus("a");
  TransitionSemigroup sg = semigroup(a);
  ASSERT_EQ(sg.size(), 6u);
  EXPECT_EQ(witness_set(a, sg),
            (std::set<std::string>{"0", "1", "00", "01", "10", "010"}));
  ASSERT_TRUE(sg.contains_identity_as_nonempty_word());
  EXPECT_EQ(label_of(a, sg, *sg.identity_element()), "00");
}

TEST(Semigroup, ResetPair) {
  Automaton b = corpus("b");
  TransitionSemigroup sg = semigroup(b);
  ASSERT_EQ(sg.size(), 2u);
  EXPECT_EQ(witness_set(b, sg), (std::set<std::string>{"0", "1"}));
  for (const Transformation& t : sg.elements()) EXPECT_EQ(rank(t), 1u);
  EXPECT_FALSE(sg.contains_identity_as_nonempty_word());
}

TEST(Semigroup, ProductHasTwelveElements) {
  TransitionSemigroup sg = semigroup(corpus("axb"));
  EXPECT_EQ(sg.size(), 12u);
}

TEST(Semigroup, DiscoveryOrderIsShortlex) {
  Automaton c = corpus("c");
  TransitionSemigroup sg = semigroup(c);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sg.size(); ++i)
    labels.push_back(label_of(c, sg, i));
  EXPECT_EQ(labels,
            (std::vector<std::string>{"0", "1", "00", "01", "10", "11", "010",
                                      "011", "100", "101", "0100", "0101"}));
  for (std::size_t i = 1; i < sg.size(); ++i) {
    EXPECT_TRUE(
        shortlex_less(sg.element(i - 1).witness(), sg.element(i).witness()));
  }
}

TEST(Semigroup, CapExceeded) {
  try {
    semigroup(corpus("axb"), 5);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos);
  }
  EXPECT_EQ(semigroup(corpus("axb"), 12).size(), 12u);
}

TEST(Semigroup, DefaultCapIsConfigurable) {
  EXPECT_EQ(default_max_elements(), kDefaultMaxElements);
  set_default_max_elements(3);
  EXPECT_THROW(semigroup(corpus("a")), CapExceeded);
  set_default_max_elements(0);
  EXPECT_EQ(default_max_elements(), kDefaultMaxElements);
  EXPECT_EQ(semigroup(corpus("a")).size(), 6u);
}

TEST(ClassOf, KnownClasses) {
  Automaton a = corpus("a");
  TransitionSemigroup sg = semigroup(a);
  EXPECT_EQ(label_of(a, sg, by_label(a, sg, "011")), "0");
  EXPECT_EQ(by_label(a, sg, "11"), *sg.identity_element());
  EXPECT_EQ(label_of(a, sg, by_label(a, sg, "11")), "00");

  Automaton b = corpus("b");
  TransitionSemigroup sb = semigroup(b);
  // 110 sends t1 -> t2 -> t2 -> t1 and t2 -> t2 -> t2 -> t1.
  const std::size_t cls = by_label(b, sb, "110");
  EXPECT_EQ(label_of(b, sb, cls), "0");
  EXPECT_EQ(sb.element(cls)[0], b.state_index("t1"));
  EXPECT_EQ(sb.element(cls)[1], b.state_index("t1"));
}

TEST(ClassOf, RejectsEmptyWord) {
  Automaton a = corpus("a");
  TransitionSemigroup sg = semigroup(a);
  EXPECT_THROW(class_of(sg, Word{}), InvalidArgument);
  EXPECT_THROW(class_of(sg, Word{{2}}), InvalidArgument);
}

TEST(Cayley, SpotEntries) {
  Automaton a = corpus("a");
  TransitionSemigroup sa = semigroup(a);
  auto ta = cayley_table(sa);
  EXPECT_EQ(label_of(a, sa, ta[by_label(a, sa, "0")][by_label(a, sa, "1")]),
            "01");

  Automaton b = corpus("b");
  TransitionSemigroup sb = semigroup(b);
  auto tb = cayley_table(sb);
  EXPECT_EQ(label_of(b, sb, tb[by_label(b, sb, "1")][by_label(b, sb, "0")]),
            "0");

  Automaton p = corpus("axb");
  TransitionSemigroup sp = semigroup(p);
  auto tp = cayley_table(sp);
  EXPECT_EQ(label_of(p, sp, tp[by_label(p, sp, "0")][by_label(p, sp, "0")]),
            "00");
}

TEST(Cayley, GoldenText) {
  struct Case {
    const char* stem;
    CayleyView view;
  };
  for (const Case& c :
       {Case{"a", CayleyView::kMonoid}, Case{"b", CayleyView::kSemigroup},
        Case{"axb", CayleyView::kSemigroup},
        Case{"c", CayleyView::kSemigroup}}) {
    SCOPED_TRACE(c.stem);
    Automaton aut = corpus(c.stem);
    TransitionSemigroup sg = semigroup(aut);
    EXPECT_EQ(cayley_text(labeled_cayley(aut, sg, c.view)),
              read_file(test::corpus_path(std::string("golden/") + c.stem +
                                          ".cayley.txt")));
  }
}

TEST(Cayley, MonoidViewWithoutIdentityElement) {
  Automaton b = corpus("b");
  TransitionSemigroup sg = semigroup(b);
  LabeledTable t = labeled_cayley(b, sg, CayleyView::kMonoid);
  EXPECT_EQ(t.labels, (std::vector<std::string>{"ε", "0", "1"}));
  EXPECT_EQ(t.cells[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(t.cells[2], (std::vector<std::size_t>{2, 1, 2}));
}

TEST(Cayley, Csv) {
  Automaton b = corpus("b");
  TransitionSemigroup sg = semigroup(b);
  EXPECT_EQ(cayley_csv(labeled_cayley(b, sg, CayleyView::kSemigroup)),
            ",0,1\n0,0,1\n1,0,1\n");
}

// Entry (i,j) against direct composition, and associativity.
TEST(SemigroupProperties, CayleyAgreesWithComposition) {
  testkit::Rng rng(77);
  int checked = 0;
  while (checked < 200) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(5);
    cfg.letters = 1 + rng.uniform_below(2);
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    if (sg.size() > 40) continue;
    ++checked;
    auto table = cayley_table(sg);
    for (std::size_t i = 0; i < sg.size(); ++i) {
      ASSERT_TRUE(witness_reproduces(aut, sg.element(i)));
      for (std::size_t j = 0; j < sg.size(); ++j) {
        ASSERT_EQ(sg.element(table[i][j]),
                  compose(sg.element(i), sg.element(j)));
      }
    }
    if (sg.size() <= 12) {
      for (std::size_t i = 0; i < sg.size(); ++i)
        for (std::size_t j = 0; j < sg.size(); ++j)
          for (std::size_t k = 0; k < sg.size(); ++k)
            ASSERT_EQ(table[table[i][j]][k], table[i][table[j][k]]);
    }
  }
}

TEST(SemigroupProperties, SizeBoundAndBijections) {
  testkit::Rng rng(91);
  for (int round = 0; round < 300; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(5);
    cfg.letters = 1 + rng.uniform_below(3);
    if (round % 2 == 0) cfg.filters = testkit::kPermutation;
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    ASSERT_LE(sg.size(), std::pow(cfg.states, cfg.states));
    if (is_permutation(aut)) {
      for (const Transformation& t : sg.elements()) {
        ASSERT_TRUE(is_bijection(t.mapping()));
      }
    }
  }
}

// Witnesses are shortlex-least: no shorter or shortlex-smaller word
// induces the same mapping.
TEST(SemigroupProperties, WitnessesAreShortlexLeast) {
  testkit::Rng rng(5);
  for (int round = 0; round < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(4);
    cfg.letters = 1 + rng.uniform_below(2);
    Automaton aut = testkit::gen_random(cfg, rng);
    TransitionSemigroup sg = semigroup(aut);
    std::size_t max_len = 0;
    for (const Transformation& t : sg.elements()) {
      max_len = std::max(max_len, t.witness().size());
    }
    // Walk all words in shortlex order up to max_len; the first word seen
    // for each mapping must be that element's witness.
    std::set<std::vector<StateIndex>> seen;
    std::vector<Word> level{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (const Word& w : level) {
        for (LetterIndex a = 0; a < cfg.letters; ++a) {
          Word x = w;
          x.letters.push_back(a);
          Transformation t = transformation_of_word(aut, x);
          std::vector<StateIndex> m(t.mapping().begin(), t.mapping().end());
          if (seen.insert(m).second) {
            ASSERT_EQ(sg.element(*sg.find(m)).witness(), x);
          }
          next.push_back(std::move(x));
        }
      }
      level = std::move(next);
    }
    ASSERT_EQ(seen.size(), sg.size());
  }
}

}  // namespace
}  // namespace autalg

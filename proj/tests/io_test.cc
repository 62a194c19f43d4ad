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

#include "autalg/io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "autalg/decompose.h"
#include "autalg/errors.h"
#include "autalg/report.h"
#include "autalg/testkit.h"
#include "test_support.h"

namespace autalg {
namespace {

using test::corpus;

constexpr const char* kPermutationText = R"(# comment line
states s1 s2 s3
alphabet 0 1

delta s1 0 s1   # trailing comment
delta s1 1 s2
delta s2 0 s3
delta s2 1 s1
delta s3 1 s3
delta s3 0 s2
)";

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                    std::sregex_iterator()));
}

TEST(Parse, PermutationExample) {
  Automaton a = parse_automaton(kPermutationText);
  EXPECT_EQ(a, corpus("a"));
  EXPECT_EQ(a.state_name(a.next(1, 0)), "s3");
}

TEST(Parse, SixStateExample) {
  Automaton c = corpus("c");
  EXPECT_EQ(c.state_count(), 6u);
  EXPECT_EQ(c.state_name(c.next(c.state_index("q3"), 1)), "q2");
}

TEST(Parse, ConflictingEntry) {
  std::string text = kPermutationText;
  text += "delta s1 0 s2\n";
  try {
    parse_automaton(text);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("conflicting"), std::string::npos)
        << e.what();
  }
}

TEST(Parse, SyntaxErrorsCarryLineNumbers) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  for (const Case& c :
       {Case{"states a\nalphabet x\nfoo a x a\n", 3}, Case{"alphabet x\n", 1},
        Case{"states a\nalphabet x\ndelta a x\n", 3},
        Case{"states a\nstates b\n", 2}, Case{"states \"a\n", 1},
        Case{"states a\n", 1}, Case{"states a\nalphabet \"x\\q\"\n", 2}}) {
    SCOPED_TRACE(c.text);
    try {
      parse_automaton(c.text);
      FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << e.what();
    }
  }
}

TEST(Parse, MissingEntryIsSemantic) {
  EXPECT_THROW(parse_automaton("states a b\nalphabet x\ndelta a x b\n"),
               InvalidArgument);
}

TEST(Serialize, CanonicalAndQuoted) {
  EXPECT_EQ(serialize_automaton(corpus("axb")),
            read_file(test::corpus_path("axb.aut")));
  Automaton odd({"(p,q)", "we\"ird", "#x"}, {"a"}, {1, 2, 0});
  const std::string text = serialize_automaton(odd);
  EXPECT_NE(text.find("\"(p,q)\""), std::string::npos);
  EXPECT_NE(text.find("\"we\\\"ird\""), std::string::npos);
  EXPECT_EQ(parse_automaton(text), odd);
}

TEST(Serialize, CorpusRoundTrip) {
  for (const char* stem : {"a", "b", "axb", "c", "twocomponent"}) {
    SCOPED_TRACE(stem);
    Automaton aut = corpus(stem);
    const std::string text = serialize_automaton(aut);
    EXPECT_EQ(parse_automaton(text), aut);
    EXPECT_EQ(serialize_automaton(parse_automaton(text)), text);
  }
}

TEST(Serialize, RandomRoundTrip) {
  testkit::Rng rng(64);
  for (int round = 0; round < 200; ++round) {
    testkit::GeneratorConfig cfg;
    cfg.states = 1 + rng.uniform_below(8);
    cfg.letters = 1 + rng.uniform_below(3);
    Automaton aut = testkit::gen_random(cfg, rng);
    ASSERT_EQ(parse_automaton(serialize_automaton(aut)), aut);
  }
}

TEST(Dot, PermutationDiagram) {
  const std::string dot = to_dot(corpus("a"));
  EXPECT_EQ(count(dot, std::regex(R"(^  "s\d";$)", std::regex::multiline)), 3u);
  EXPECT_NE(dot.find("\"s1\" -> \"s2\" [label=\"1\"];"), std::string::npos);
  EXPECT_NE(dot.find("\"s1\" -> \"s1\" [label=\"0\"];"), std::string::npos);
}

TEST(Dot, OneStateSelfLoop) {
  Automaton u({"u"}, {"a"}, {0});
  EXPECT_EQ(to_dot(u),
            "digraph \"A\" {\n  rankdir=LR;\n  \"u\";\n"
            "  \"u\" -> \"u\" [label=\"a\"];\n}\n");
}

TEST(Dot, SixStateDiagramAndMerging) {
  const std::string dot = to_dot(corpus("c"), "C");
  EXPECT_EQ(count(dot, std::regex(" -> ")), 12u);
  EXPECT_EQ(dot.rfind("digraph \"C\" {", 0), 0u);
  const std::string merged = to_dot(corpus("twocomponent"));
  EXPECT_EQ(count(merged, std::regex(" -> ")), 2u);
  EXPECT_NE(merged.find("[label=\"0,1\"]"), std::string::npos);
}

TEST(Files, ReadWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "autalg_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.aut").string();
  write_file(path, serialize_automaton(corpus("b")));
  EXPECT_EQ(parse_automaton(read_file(path)), corpus("b"));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_file(path), Error);
}

TEST(Reports, JsonGoldens) {
  for (const char* stem : {"a", "b", "axb", "c", "twocomponent"}) {
    SCOPED_TRACE(stem);
    Automaton aut = corpus(stem);
    EXPECT_EQ(quasi_ideal_json(aut, quasi_ideal_report(aut)).dump(2) + "\n",
              read_file(test::corpus_path(std::string("golden/") + stem +
                                          ".check.json")));
  }
  for (const char* stem : {"a", "b", "axb", "c"}) {
    SCOPED_TRACE(stem);
    Automaton aut = corpus(stem);
    EXPECT_EQ(decomposition_json(aut, decompose(aut)).dump(2) + "\n",
              read_file(test::corpus_path(std::string("golden/") + stem +
                                          ".decompose.json")));
  }
}

TEST(Reports, DecompositionJsonFields) {
  Automaton c = corpus("c");
  Json j = decomposition_json(c, decompose(c));
  EXPECT_EQ(j["pi"], Json::parse(R"([["q1","q2"],["q3","q4"],["q5","q6"]])"));
  EXPECT_EQ(j["rho"], Json::parse(R"([["q1","q3","q5"],["q2","q4","q6"]])"));
  EXPECT_EQ(j["iso"][0], Json::parse(R"j(["q1","([q1],[q1])"])j"));
  EXPECT_EQ(j["failure_stage"], "none");

  Json bad = decomposition_json(corpus("twocomponent"),
                                decompose(corpus("twocomponent")));
  EXPECT_EQ(bad["failure_stage"], "strong_connectivity");
  EXPECT_FALSE(bad.contains("pi"));
}

}  // namespace
}  // namespace autalg

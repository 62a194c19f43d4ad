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

// The automaton text format:
//
//   # comment
//   states s1 s2 s3
//   alphabet 0 1
//   delta s1 0 s1
//   delta s1 1 s2
//   ...
//
// `#` starts a comment outside quotes and blank lines are ignored. The
// `states` and `alphabet` lines come first (in that order, once each); delta
// lines may appear in any order. Tokens are separated by whitespace and may
// be double-quoted; inside quotes `\"` and `\\` are escapes. The serializer
// quotes identifiers containing parentheses, quotes, backslashes or `#`.

#ifndef AUTALG_IO_H_
#define AUTALG_IO_H_

#include <string>
#include <string_view>

#include "autalg/automaton.h"

namespace autalg {

// Throws ParseError (with a line number) on syntax errors and
// InvalidArgument on semantic errors such as missing transitions.
Automaton parse_automaton(std::string_view text);

// Canonical form: states, alphabet, then delta lines state-major and
// letter-minor, each line ending in '\n'.
std::string serialize_automaton(const Automaton& aut);

// One node per state, one edge per (state, letter); edges sharing both
// endpoints are merged with comma-joined labels. Output order follows state
// and letter order.
std::string to_dot(const Automaton& aut, std::string_view graph_name = "A");

// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace autalg

#endif  // AUTALG_IO_H_

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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "autalg/errors.h"

namespace autalg {
namespace {

std::vector<std::string> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::string token;
    if (c == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d == '\\') {
          if (i == line.size()) break;
          d = line[i++];
          if (d != '"' && d != '\\') {
            throw ParseError(line_no, std::string("unknown escape '\\") + d +
                                          "' in quoted token");
          }
        }
        token += d;
      }
      if (!closed) throw ParseError(line_no, "unterminated quoted token");
      if (i < line.size() &&
          !std::isspace(static_cast<unsigned char>(line[i])) &&
          line[i] != '#') {
        throw ParseError(line_no,
                         "quoted token must be followed by whitespace");
      }
    } else {
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i]))) {
        if (line[i] == '"') {
          throw ParseError(line_no, "stray quote inside token");
        }
        token += line[i++];
      }
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

bool needs_quotes(const std::string& id) {
  if (id.empty()) return true;
  for (char c : id) {
    if (c == '(' || c == ')' || c == '"' || c == '\\' || c == '#' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return false;
}

std::string quote(const std::string& id) {
  if (!needs_quotes(id)) return id;
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::optional<std::vector<std::string>> states;
  std::optional<std::vector<std::string>> alphabet;
  std::vector<TransitionEntry> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    std::vector<std::string> tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens.front();
    if (keyword == "states") {
      if (states) throw ParseError(line_no, "duplicate 'states' line");
      if (tokens.size() < 2)
        throw ParseError(line_no, "'states' needs at least one state");
      states.emplace(tokens.begin() + 1, tokens.end());
    } else if (keyword == "alphabet") {
      if (!states) throw ParseError(line_no, "'alphabet' before 'states'");
      if (alphabet) throw ParseError(line_no, "duplicate 'alphabet' line");
      if (tokens.size() < 2)
        throw ParseError(line_no, "'alphabet' needs at least one letter");
      alphabet.emplace(tokens.begin() + 1, tokens.end());
    } else if (keyword == "delta") {
      if (!states || !alphabet) {
        throw ParseError(line_no, "'delta' before 'states' and 'alphabet'");
      }
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'delta <state> <letter> <state>'");
      }
      entries.push_back({tokens[1], tokens[2], tokens[3]});
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  line_no = std::max<std::size_t>(line_no, 1);
  if (!states) throw ParseError(line_no, "missing 'states' line");
  if (!alphabet) throw ParseError(line_no, "missing 'alphabet' line");
  return make_automaton(std::move(*states), std::move(*alphabet), entries);
}

std::string serialize_automaton(const Automaton& aut) {
  std::string out = "states";
  for (const std::string& s : aut.states()) out += ' ' + quote(s);
  out += "\nalphabet";
  for (const std::string& a : aut.alphabet()) out += ' ' + quote(a);
  out += '\n';
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      out += "delta " + quote(aut.state_name(s)) + ' ' +
             quote(aut.letter_name(a)) + ' ' +
             quote(aut.state_name(aut.next(s, a))) + '\n';
    }
  }
  return out;
}

std::string to_dot(const Automaton& aut, std::string_view graph_name) {
  std::string out = "digraph " + dot_escape(graph_name) + " {\n";
  out += "  rankdir=LR;\n";
  for (const std::string& s : aut.states()) {
    out += "  " + dot_escape(s) + ";\n";
  }
  for (StateIndex s = 0; s < aut.state_count(); ++s) {
    // Targets in order of their first letter.
    std::vector<StateIndex> targets;
    std::vector<std::string> labels;
    for (LetterIndex a = 0; a < aut.letter_count(); ++a) {
      StateIndex t = aut.next(s, a);
      std::size_t i = 0;
      while (i < targets.size() && targets[i] != t) ++i;
      if (i == targets.size()) {
        targets.push_back(t);
        labels.push_back(aut.letter_name(a));
      } else {
        labels[i] += "," + aut.letter_name(a);
      }
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      out += "  " + dot_escape(aut.state_name(s)) + " -> " +
             dot_escape(aut.state_name(targets[i])) +
             " [label=" + dot_escape(labels[i]) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("error writing '" + path + "'");
}

}  // namespace autalg

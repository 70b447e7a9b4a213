/* Copyright 2026 The PECR Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pecr/text.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pecr/signature.h"

namespace pecr {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '[' || c == ']') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_comment(std::string_view s) {
  auto h = s.find('#');
  return trim(h == std::string_view::npos ? s : s.substr(0, h));
}

namespace {

std::vector<Label> parse_label_list(const std::vector<std::string>& t,
                                    std::size_t& pos, const AppSignature& sig,
                                    std::size_t line) {
  if (pos >= t.size() || t[pos] != "[") throw ParseError(line, "expected '['");
  ++pos;
  std::vector<Label> r;
  while (pos < t.size() && t[pos] != "]") {
    if (t[pos] == "[") throw ParseError(line, "nested list in statement");
    if (t[pos].size() > sig.mach.mstr)
      throw ParseError(line, "label longer than mstr: " + t[pos]);
    auto l = sig.parse_label(t[pos]);
    if (!l) throw ParseError(line, "bad label '" + t[pos] + "'");
    r.push_back(*l);
    ++pos;
  }
  if (pos >= t.size()) throw ParseError(line, "unclosed '['");
  ++pos;
  return r;
}

}  // namespace

AtomicProgram parse_statement_tokens(const std::vector<std::string>& t,
                                     std::size_t& pos, const AppSignature& sig,
                                     std::size_t line) {
  if (pos >= t.size()) throw ParseError(line, "expected statement");
  auto pn = sig.find_program(t[pos]);
  if (!pn) throw ParseError(line, "unknown program '" + t[pos] + "'");
  ++pos;
  AtomicProgram ap;
  ap.pn = *pn;
  ap.x = parse_label_list(t, pos, sig, line);
  ap.y = parse_label_list(t, pos, sig, line);
  return ap;
}

AtomicProgram parse_statement(std::string_view text, const AppSignature& sig,
                              std::size_t line) {
  auto t = tokenize(text);
  std::size_t pos = 0;
  auto ap = parse_statement_tokens(t, pos, sig, line);
  if (pos != t.size())
    throw ParseError(line, "trailing tokens after statement");
  return ap;
}

ProgramList parse_program_list(std::string_view text, const AppSignature& sig) {
  ProgramList p;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string s = strip_comment(raw);
    if (s.empty() || s.find_first_not_of('-') == std::string::npos) continue;
    p.push_back(parse_statement(s, sig, line));
  }
  return p;
}

std::vector<std::size_t> parse_index_list(const std::vector<std::string>& t,
                                          std::size_t& pos, std::size_t line) {
  if (pos >= t.size() || t[pos] != "[")
    throw ParseError(line, "expected '[' before connection list");
  ++pos;
  std::vector<std::size_t> r;
  while (pos < t.size() && t[pos] != "]") {
    const auto& s = t[pos];
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw ParseError(line, "bad index '" + s + "'");
    r.push_back(std::stoul(s));
    ++pos;
  }
  if (pos >= t.size()) throw ParseError(line, "unclosed '['");
  ++pos;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pecr

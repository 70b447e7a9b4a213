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

// Shared lexical helpers for the text formats.

#ifndef PECR_TEXT_H_
#define PECR_TEXT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pecr/program.h"

namespace pecr {

class AppSignature;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Whitespace separated; '[' and ']' are always tokens of their own.
std::vector<std::string> tokenize(std::string_view text);

std::string trim(std::string_view s);

// Drops a '#' comment and surrounding blanks.
std::string strip_comment(std::string_view s);

// Reads `name [x...] [y...]` starting at tokens[pos]; advances pos.
AtomicProgram parse_statement_tokens(const std::vector<std::string>& tokens,
                                     std::size_t& pos, const AppSignature& sig,
                                     std::size_t line = 0);
AtomicProgram parse_statement(std::string_view text, const AppSignature& sig,
                              std::size_t line = 0);

// One statement per line. Blank lines, comments and "-----" separators are
// skipped, so an IEP listing reads as premise followed by conclusion.
ProgramList parse_program_list(std::string_view text, const AppSignature& sig);

// Reads `[n n ...]` of unsigned integers.
std::vector<std::size_t> parse_index_list(
    const std::vector<std::string>& tokens, std::size_t& pos,
    std::size_t line = 0);

std::string read_file(const std::string& path);

}  // namespace pecr

#endif  // PECR_TEXT_H_

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

#include "pecr/lists.h"

#include <cctype>

namespace pecr {
namespace {

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Term parse_term(std::string_view s, std::size_t& i) {
  skip_space(s, i);
  if (i >= s.size()) throw std::invalid_argument("unexpected end of term");
  if (s[i] == '[') {
    ++i;
    std::vector<Term> items;
    for (;;) {
      skip_space(s, i);
      if (i >= s.size()) throw std::invalid_argument("unclosed '['");
      if (s[i] == ']') {
        ++i;
        return Term(std::move(items));
      }
      items.push_back(parse_term(s, i));
    }
  }
  if (s[i] == ']') throw std::invalid_argument("unbalanced ']'");
  std::size_t j = i;
  while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
         s[j] != '[' && s[j] != ']')
    ++j;
  Term t(std::string(s.substr(i, j - i)));
  i = j;
  return t;
}

}  // namespace

std::string Term::str() const {
  if (is_atom()) return atom();
  std::string r = "[";
  for (std::size_t i = 0; i < items().size(); ++i) {
    if (i) r += ' ';
    r += items()[i].str();
  }
  return r + "]";
}

Term Term::parse(std::string_view text) {
  std::size_t i = 0;
  Term t = parse_term(text, i);
  skip_space(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing text in term");
  return t;
}

Term concat_terms(const Term& u, const Term& v, std::size_t limit) {
  return Term(concat_lists(u.as_list(), v.as_list(), limit));
}

Term chain_terms(const std::vector<Term>& args, std::size_t limit) {
  Term r{std::vector<Term>{}};
  for (const auto& a : args) r = concat_terms(r, a, limit);
  return r;
}

}  // namespace pecr

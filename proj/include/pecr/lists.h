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

// List algebra: concatenation, intersection, difference, dedup and the
// sublist relations. All results keep the order of the first argument.

#ifndef PECR_LISTS_H_
#define PECR_LISTS_H_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pecr {

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

template <class T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

template <class T>
std::vector<T> concat_lists(const std::vector<T>& u, const std::vector<T>& v,
                            std::size_t limit = kNoLimit) {
  if (u.size() + v.size() > limit)
    throw CapacityError("list length " + std::to_string(u.size() + v.size()) +
                        " exceeds " + std::to_string(limit));
  std::vector<T> r;
  r.reserve(u.size() + v.size());
  r.insert(r.end(), u.begin(), u.end());
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

// Scalars act as one-element lists.
template <class T>
std::vector<T> concat_lists(const T& u, const std::vector<T>& v,
                            std::size_t limit = kNoLimit) {
  return concat_lists(std::vector<T>{u}, v, limit);
}

template <class T>
std::vector<T> concat_lists(const std::vector<T>& u, const T& v,
                            std::size_t limit = kNoLimit) {
  return concat_lists(u, std::vector<T>{v}, limit);
}

template <class T>
std::vector<T> chain(const std::vector<std::vector<T>>& parts,
                     std::size_t limit = kNoLimit) {
  std::vector<T> r;
  for (const auto& p : parts) r = concat_lists(r, p, limit);
  return r;
}

template <class T>
std::vector<T> cap_lists(const std::vector<T>& u, const std::vector<T>& v) {
  std::vector<T> r;
  for (const auto& x : u)
    if (contains(v, x) && !contains(r, x)) r.push_back(x);
  return r;
}

template <class T>
std::vector<T> minus_lists(const std::vector<T>& u, const std::vector<T>& v) {
  std::vector<T> r;
  for (const auto& x : u)
    if (!contains(v, x)) r.push_back(x);
  return r;
}

template <class T>
std::vector<T> unique_list(const std::vector<T>& u) {
  std::vector<T> r;
  for (const auto& x : u)
    if (!contains(r, x)) r.push_back(x);
  return r;
}

struct SublistFlags {
  bool sublst = false;
  bool equivlst = false;
  bool eqlst = false;
};

template <class T>
SublistFlags sublist_check(const std::vector<T>& u, const std::vector<T>& v) {
  auto inside = [](const std::vector<T>& a, const std::vector<T>& b) {
    return std::all_of(a.begin(), a.end(),
                       [&](const T& x) { return contains(b, x); });
  };
  SublistFlags f;
  f.sublst = inside(u, v);
  f.equivlst = f.sublst && inside(v, u);
  f.eqlst = u == v;
  return f;
}

// A nested list of atoms, as written in bracket notation: [a [b c] d].
class Term {
 public:
  Term() : v_(std::vector<Term>{}) {}
  Term(std::string atom) : v_(std::move(atom)) {}          // NOLINT
  Term(const char* atom) : v_(std::string(atom)) {}        // NOLINT
  Term(std::vector<Term> items) : v_(std::move(items)) {}  // NOLINT

  bool is_atom() const { return std::holds_alternative<std::string>(v_); }
  const std::string& atom() const { return std::get<std::string>(v_); }
  const std::vector<Term>& items() const {
    return std::get<std::vector<Term>>(v_);
  }

  // A scalar becomes a one-element list; a list is returned as is.
  std::vector<Term> as_list() const {
    if (is_atom()) return {*this};
    return items();
  }

  std::string str() const;
  static Term parse(std::string_view text);

  friend bool operator==(const Term& a, const Term& b) { return a.v_ == b.v_; }

 private:
  std::variant<std::string, std::vector<Term>> v_;
};

// Removes one bracket level from each argument and joins them.
Term concat_terms(const Term& u, const Term& v, std::size_t limit = kNoLimit);
Term chain_terms(const std::vector<Term>& args, std::size_t limit = kNoLimit);

}  // namespace pecr

#endif  // PECR_LISTS_H_

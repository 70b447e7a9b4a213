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

#include "pecr/signature.h"

#include <algorithm>
#include <stdexcept>

namespace pecr {
namespace {

template <class Vec>
std::optional<std::uint32_t> find_named(const Vec& v, std::string_view n) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].name == n) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

}  // namespace

const char* to_string(ProgramKind k) {
  switch (k) {
    case ProgramKind::kDsj:
      return "dsj";
    case ProgramKind::kCnj:
      return "cnj";
    default:
      return "fatm";
  }
}

const char* to_string(EqualityKind k) {
  return k == EqualityKind::kEquality ? "equality" : "equivalence";
}

bool substitution_forbidden(std::string_view n) {
  return n == "ext" || n == "aext" || n == "flse" || n == "aflse" ||
         n == "ioeq";
}

std::optional<std::uint32_t> AppSignature::find_type(std::string_view n) const {
  return find_named(types, n);
}

std::optional<std::uint32_t> AppSignature::find_program(
    std::string_view n) const {
  auto i = find_named(programs, n);
  if (!i) return std::nullopt;
  return *i + 1;
}

std::optional<std::uint32_t> AppSignature::find_constant(
    std::string_view n) const {
  auto i = find_named(constants, n);
  if (!i) return std::nullopt;
  return *i + 1;
}

const ProgramDecl& AppSignature::program(std::uint32_t pn) const {
  if (pn == 0 || pn > programs.size())
    throw std::out_of_range("unknown program id " + std::to_string(pn));
  return programs[pn - 1];
}

const ConstantDecl& AppSignature::constant(std::uint32_t m) const {
  if (m == 0 || m > constants.size())
    throw std::out_of_range("unknown constant id " + std::to_string(m));
  return constants[m - 1];
}

std::uint32_t AppSignature::add_type(std::string n) {
  if (find_type(n)) throw std::invalid_argument("duplicate type " + n);
  types.push_back(TypeDecl{std::move(n)});
  return static_cast<std::uint32_t>(types.size() - 1);
}

std::uint32_t AppSignature::add_program(ProgramDecl d) {
  if (find_program(d.name) || find_constant(d.name))
    throw std::invalid_argument("duplicate name " + d.name);
  if (d.subst && substitution_forbidden(d.name))
    throw std::invalid_argument("program " + d.name +
                                " cannot be substitution-eligible");
  for (auto t : d.in_types)
    if (t >= types.size()) throw std::invalid_argument("unknown slot type");
  for (auto t : d.out_types)
    if (t >= types.size()) throw std::invalid_argument("unknown slot type");
  programs.push_back(std::move(d));
  return static_cast<std::uint32_t>(programs.size());
}

std::uint32_t AppSignature::add_constant(ConstantDecl c) {
  if (find_constant(c.name) || find_program(c.name))
    throw std::invalid_argument("duplicate name " + c.name);
  if (c.type >= types.size()) throw std::invalid_argument("unknown type");
  constants.push_back(std::move(c));
  return static_cast<std::uint32_t>(constants.size());
}

std::optional<std::uint32_t> AppSignature::input_type(const AtomicProgram& ap,
                                                      std::size_t i) const {
  if (ap.pn == 0 || ap.pn > programs.size()) return std::nullopt;
  const auto& d = programs[ap.pn - 1];
  if (i >= d.in_types.size()) return std::nullopt;
  return d.in_types[i];
}

std::optional<std::uint32_t> AppSignature::output_type(const AtomicProgram& ap,
                                                       std::size_t j) const {
  if (ap.pn == 0 || ap.pn > programs.size()) return std::nullopt;
  const auto& d = programs[ap.pn - 1];
  if (j >= d.out_types.size()) return std::nullopt;
  return d.out_types[j];
}

std::optional<Label> AppSignature::parse_label(std::string_view text) const {
  if (auto m = find_constant(text)) return Label::constant(*m);
  if (auto v = variable_id(text)) return Label::variable(*v);
  return std::nullopt;
}

std::string AppSignature::label_text(Label l) const {
  switch (l.kind()) {
    case LabelKind::kVariable:
      return variable_name(l.index());
    case LabelKind::kConstant:
      if (l.index() >= 1 && l.index() <= constants.size())
        return constants[l.index() - 1].name;
      return std::to_string(l.index()) + "*";
    default:
      return "0";
  }
}

std::string AppSignature::render(const AtomicProgram& ap) const {
  std::string s = (ap.pn >= 1 && ap.pn <= programs.size())
                      ? programs[ap.pn - 1].name
                      : "#" + std::to_string(ap.pn);
  auto list = [&](const std::vector<Label>& v) {
    std::string r = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) r += ' ';
      r += label_text(v[i]);
    }
    return r + "]";
  };
  return s + " " + list(ap.x) + " " + list(ap.y);
}

std::string AppSignature::render(const ProgramList& p,
                                 std::string_view sep) const {
  std::string r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) r += sep;
    r += render(p[i]);
  }
  return r;
}

}  // namespace pecr

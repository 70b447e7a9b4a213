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

// Labels are small tagged integers. Names are produced only when printing:
// variables render a..z, a1..z1, a2..z2 and so on in id order; constants
// render through the signature's constant table.

#ifndef PECR_LABEL_H_
#define PECR_LABEL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace pecr {

enum class LabelKind : std::uint8_t { kNull = 0, kVariable = 1, kConstant = 2 };

class Label {
 public:
  constexpr Label() = default;

  static constexpr Label variable(std::uint32_t id) {
    return Label(LabelKind::kVariable, id);
  }
  // m is 1-based: the first declared constant is constant(1).
  static constexpr Label constant(std::uint32_t m) {
    return Label(LabelKind::kConstant, m);
  }

  constexpr LabelKind kind() const { return kind_; }
  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_null() const { return kind_ == LabelKind::kNull; }
  constexpr bool is_variable() const { return kind_ == LabelKind::kVariable; }
  constexpr bool is_constant() const { return kind_ == LabelKind::kConstant; }

  // Integer code used by the matrix encoding.
  constexpr std::uint64_t code(std::uint32_t nvar) const {
    switch (kind_) {
      case LabelKind::kVariable:
        return index_;
      case LabelKind::kConstant:
        return std::uint64_t{nvar} + index_;
      default:
        return 0;
    }
  }

  constexpr auto operator<=>(const Label&) const = default;

 private:
  constexpr Label(LabelKind k, std::uint32_t i) : kind_(k), index_(i) {}

  LabelKind kind_ = LabelKind::kNull;
  std::uint32_t index_ = 0;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const {
    return std::hash<std::uint64_t>()(
        (std::uint64_t{static_cast<std::uint8_t>(l.kind())} << 32) | l.index());
  }
};

// a=1 .. z=26, a1=27 .. z1=52, ...
std::string variable_name(std::uint32_t id);
std::optional<std::uint32_t> variable_id(std::string_view name);

}  // namespace pecr

#endif  // PECR_LABEL_H_

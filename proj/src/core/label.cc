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

#include "pecr/label.h"

#include <charconv>

namespace pecr {

std::string variable_name(std::uint32_t id) {
  if (id == 0) return "0?";
  std::uint32_t letter = (id - 1) % 26;
  std::uint32_t round = (id - 1) / 26;
  std::string s(1, static_cast<char>('a' + letter));
  if (round) s += std::to_string(round);
  return s;
}

std::optional<std::uint32_t> variable_id(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return std::nullopt;
  std::uint32_t round = 0;
  if (name.size() > 1) {
    auto digits = name.substr(1);
    if (digits[0] == '0') return std::nullopt;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), round);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      return std::nullopt;
    if (round > 100000000u) return std::nullopt;
  }
  return static_cast<std::uint32_t>(name[0] - 'a' + 1) + 26 * round;
}

}  // namespace pecr

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

#include "pecr/machine.h"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace pecr {
namespace {

std::vector<std::uint64_t> split_numbers(const std::string& text) {
  std::vector<std::uint64_t> r;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      r.push_back(std::stoull(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad number '" + part + "' in '" + text +
                                  "'");
    }
  }
  return r;
}

}  // namespace

void MachineParams::validate() const {
  if (!msym || !mstr || !mnat || !mlst.nprem || !mlst.npmax || !mlst.nx ||
      !mlst.ny)
    throw std::invalid_argument("machine parameters must be positive");
  if (mlst.nprem > mlst.npmax)
    throw std::invalid_argument("nprem exceeds npmax");
}

MachineParams parse_mach(const std::string& text, MachineParams base) {
  auto v = split_numbers(text);
  if (v.size() != 3)
    throw std::invalid_argument("expected msym,mstr,mnat: '" + text + "'");
  base.msym = v[0];
  base.mstr = v[1];
  base.mnat = v[2];
  return base;
}

ListLimits parse_mlst(const std::string& text) {
  auto v = split_numbers(text);
  if (v.size() != 4)
    throw std::invalid_argument("expected nprem,npmax,nx,ny: '" + text + "'");
  return ListLimits{v[0], v[1], v[2], v[3]};
}

}  // namespace pecr

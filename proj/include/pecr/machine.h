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

#ifndef PECR_MACHINE_H_
#define PECR_MACHINE_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace pecr {

struct ListLimits {
  std::size_t nprem = 9;
  std::size_t npmax = 64;
  std::size_t nx = 3;
  std::size_t ny = 1;
  bool operator==(const ListLimits&) const = default;
};

struct MachineParams {
  std::uint64_t msym = 128;
  std::uint64_t mstr = 4096;
  std::uint64_t mnat = 2147483647;
  ListLimits mlst;

  // Throws std::invalid_argument on a zero field or nprem > npmax.
  void validate() const;
  bool operator==(const MachineParams&) const = default;
};

// "a,b,c" and "a,b,c,d" forms used by the command line and the MACH section.
MachineParams parse_mach(const std::string& text, MachineParams base);
ListLimits parse_mlst(const std::string& text);

}  // namespace pecr

#endif  // PECR_MACHINE_H_

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

#ifndef PECR_PROGRAM_H_
#define PECR_PROGRAM_H_

#include <cstdint>
#include <vector>

#include "pecr/label.h"

namespace pecr {

// [pn x y]. pn is the 1-based position of the program in its signature.
struct AtomicProgram {
  std::uint32_t pn = 0;
  std::vector<Label> x;
  std::vector<Label> y;

  bool operator==(const AtomicProgram&) const = default;
};

using ProgramList = std::vector<AtomicProgram>;

// x followed by y.
std::vector<Label> io_labels(const AtomicProgram& ap);

// Same pn and inputs; outputs ignored.
bool same_up_to_outputs(const AtomicProgram& a, const AtomicProgram& b);

}  // namespace pecr

#endif  // PECR_PROGRAM_H_

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

// Structural checks on atomic programs and program lists.

#ifndef PECR_VALIDATE_H_
#define PECR_VALIDATE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "pecr/program.h"
#include "pecr/signature.h"

namespace pecr {

struct Violation {
  std::size_t item = 0;   // 1-based; 0 for the list as a whole
  std::string condition;  // short stable tag, e.g. "cap[x y] nonempty"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& condition) const;
  void add(std::size_t item, std::string condition, std::string message);
  void merge(const ValidationReport& other, std::size_t item_offset = 0);
  std::string str() const;
};

ValidationReport validate_atomic(const AtomicProgram& ap,
                                 const AppSignature& sig);

ValidationReport validate_program_list(const ProgramList& p,
                                       const AppSignature& sig);

}  // namespace pecr

#endif  // PECR_VALIDATE_H_

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

#ifndef PECR_SIGNATURE_H_
#define PECR_SIGNATURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pecr/label.h"
#include "pecr/machine.h"
#include "pecr/program.h"

namespace pecr {

enum class ProgramKind { kFatm, kDsj, kCnj };
enum class EqualityKind { kEquality, kEquivalence };

const char* to_string(ProgramKind k);
const char* to_string(EqualityKind k);

struct ProgramDecl {
  std::string name;
  std::vector<std::uint32_t> in_types;  // indices into AppSignature::types
  std::vector<std::uint32_t> out_types;
  ProgramKind kind = ProgramKind::kFatm;
  bool subst = false;
  // dsj: head over formal labels plus the two operand lists.
  // cnj: head plus a single two-item operand.
  std::optional<AtomicProgram> head;
  std::vector<ProgramList> operands;
};

struct TypeDecl {
  std::string name;
  std::uint32_t checker = 0;  // pn of typeX, 0 if none
  std::uint32_t eq = 0;       // pn of eqX, 0 if none
  EqualityKind eq_kind = EqualityKind::kEquality;
};

struct ConstantDecl {
  std::string name;
  std::string value;  // raw text, interpreted by the runtime
  std::uint32_t type = 0;
};

// Names that never admit substitution.
bool substitution_forbidden(std::string_view program_name);

class AppSignature {
 public:
  std::string name;
  MachineParams mach;
  std::vector<TypeDecl> types;
  std::vector<ProgramDecl> programs;    // pn = position + 1
  std::vector<ConstantDecl> constants;  // constant m = position + 1

  std::optional<std::uint32_t> find_type(std::string_view n) const;
  std::optional<std::uint32_t> find_program(std::string_view n) const;
  std::optional<std::uint32_t> find_constant(std::string_view n) const;

  // Throws std::out_of_range.
  const ProgramDecl& program(std::uint32_t pn) const;
  const ConstantDecl& constant(std::uint32_t m) const;

  // Throws std::invalid_argument on duplicates or unknown names.
  std::uint32_t add_type(std::string n);
  std::uint32_t add_program(ProgramDecl d);
  std::uint32_t add_constant(ConstantDecl c);

  // Declared type of input slot i / output slot j.
  std::optional<std::uint32_t> input_type(const AtomicProgram& ap,
                                          std::size_t i) const;
  std::optional<std::uint32_t> output_type(const AtomicProgram& ap,
                                           std::size_t j) const;

  // Constant names take precedence over variable names.
  std::optional<Label> parse_label(std::string_view text) const;
  std::string label_text(Label l) const;

  std::string render(const AtomicProgram& ap) const;
  std::string render(const ProgramList& p, std::string_view sep = "\n") const;
};

}  // namespace pecr

#endif  // PECR_SIGNATURE_H_

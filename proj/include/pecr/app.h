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

// Application files: signature, definitions and axioms.

#ifndef PECR_APP_H_
#define PECR_APP_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pecr/kernel.h"
#include "pecr/signature.h"

namespace pecr {

// A program with no computable assignment of its primary inputs.
struct FalseProgram {
  std::string label;
  ProgramList program;
};

struct Application {
  AppSignature sig;
  IepStore axioms;
  std::vector<FalseProgram> false_programs;
  // AXIOM and FALSE labels in file order.
  std::vector<std::string> rule_order;
};

// Throws ParseError. `mach` replaces the MACH/MLST sections when given.
Application parse_application(std::string_view text,
                              const std::optional<MachineParams>& mach = {});
Application load_application(const std::string& path,
                             const std::optional<MachineParams>& mach = {});

std::string print_application(const Application& app);

// Rule ids for matrix export: "label id" per line.
std::map<std::string, std::int64_t> parse_rule_ids(std::string_view text);

// Axioms in file order get 1, 2, ...; then iot, sr1, sr2.
std::map<std::string, std::int64_t> default_rule_ids(const Application& app);

}  // namespace pecr

#endif  // PECR_APP_H_

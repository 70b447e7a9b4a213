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

// Concrete evaluator for zero-order program lists, the built-in
// application packs and randomized soundness probes.

#ifndef PECR_RUNTIME_H_
#define PECR_RUNTIME_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pecr/app.h"
#include "pecr/dynsys.h"
#include "pecr/kernel.h"

namespace pecr {

// nat scalar | array | box | program (pecr values).
using Value = std::variant<std::int64_t, NatArray, Box, ProgramList>;
using ValueAssignment = std::map<Label, Value>;

// Value text in bracket notation; `type` is a type name of `sig` and picks
// the reading of ambiguous brackets. Program values are written as
// "[stmt stmt ...]" over `object_sig`. Throws std::invalid_argument.
Value parse_value(const std::string& text, const std::string& type,
                  const AppSignature* object_sig = nullptr);
std::string format_value(const Value& v,
                         const AppSignature* object_sig = nullptr);

// The registered value of constant m.
Value constant_value(const AppSignature& sig, std::uint32_t m,
                     const AppSignature* object_sig = nullptr);

// Built-in packs "nat" and "pecr".
const std::map<std::string, Application>& builtin_apps();
std::string builtin_app_text(const std::string& name);

enum class ExecStatus { kComputable, kExecutionError, kBudgetExhausted };
const char* to_string(ExecStatus s);

struct ExecutionOutcome {
  ExecStatus status = ExecStatus::kComputable;
  ValueAssignment outputs;       // restricted to pol(p)
  std::size_t failing_item = 0;  // 1-based
  std::string cause;
  std::size_t steps = 0;

  bool computable() const { return status == ExecStatus::kComputable; }
};

struct RuntimeConfig {
  std::size_t budget = 1000000;  // AP executions per run
  MapSpec map = make_map("tent", 8);
  // Signature that program values are written in (pecr pack).
  const AppSignature* object_sig = nullptr;
};

// Throws std::invalid_argument when `va` does not bind free(p) exactly or a
// statement has no decision procedure.
ExecutionOutcome execute_program(const ProgramList& p,
                                 const ValueAssignment& va,
                                 const AppSignature& sig,
                                 const RuntimeConfig& cfg = {});

// Empty when every statement of p can be executed, else the first offender.
std::string non_executable(const ProgramList& p, const AppSignature& sig);

// "label = value" lines; types are read off the slots of p.
ValueAssignment parse_va(const std::string& text, const ProgramList& p,
                         const AppSignature& sig,
                         const AppSignature* object_sig = nullptr);

struct ProbeOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Exhaustive pass over nat-only free variables with values 0..max_nat.
  std::optional<std::int64_t> exhaustive_max_nat;
  std::int64_t nat_range = 6;   // random nat values in [0, nat_range]
  std::int64_t cell_range = 4;  // random array cells in [0, cell_range]
};

struct ProbeStats {
  std::size_t trials = 0;
  std::size_t premise_ok = 0;
  std::size_t both_ok = 0;
  std::size_t violations = 0;
  std::vector<ValueAssignment> counterexamples;  // first few

  std::string str() const;
};

// Whenever the premise is computable on a VA, premise + conclusion must be
// too. Throws std::invalid_argument on a non-executable statement.
ProbeStats soundness_probe(const Iep& theorem, const AppSignature& sig,
                           const RuntimeConfig& cfg, const ProbeOptions& opts);

}  // namespace pecr

#endif  // PECR_RUNTIME_H_

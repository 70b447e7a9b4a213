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

// Bounded forward-chaining prover. This is a plain breadth-first search by
// generations; it makes no attempt at goal direction.

#ifndef PECR_PROVER_H_
#define PECR_PROVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "pecr/kernel.h"
#include "pecr/proof.h"
#include "pecr/signature.h"

namespace pecr {

struct ProverConfig {
  std::size_t max_depth = 12;     // generations of derived statements
  std::size_t max_facts = 20000;  // statements held at once
  double time_budget = 60.0;      // seconds
  std::uint64_t seed = 0;         // 0 keeps store order for rule trials
};

enum class ProveStatus { kProved, kExhausted, kFailed };

struct ProveResult {
  ProveStatus status = ProveStatus::kExhausted;
  std::optional<ProofDocument> proof;
  std::size_t facts = 0;
  std::size_t generations = 0;
  std::string reason;  // why the search stopped without a proof
};

// Statements are deduplicated on (program name, inputs), i.e. up to the
// naming of outputs. The emitted proof keeps only the ancestors of the
// conclusion, renames derived outputs to the smallest unused labels and is
// checked with check_proof before it is returned.
ProveResult prove(const TheoremStatement& target, const IepStore& store,
                  const AppSignature& sig, const ProverConfig& cfg = {});

}  // namespace pecr

#endif  // PECR_PROVER_H_

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

// Proof documents: parsing, printing, checking, connection list reduction
// and integer export.

#ifndef PECR_PROOF_H_
#define PECR_PROOF_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pecr/codec.h"
#include "pecr/kernel.h"
#include "pecr/signature.h"

namespace pecr {

struct Justification {
  std::string rule;
  std::vector<std::size_t> clist;
  bool operator==(const Justification&) const = default;
};

struct ProofLine {
  AtomicProgram stmt;
  std::optional<Justification> just;
  bool operator==(const ProofLine&) const = default;
};

struct TheoremStatement {
  std::string label;
  ProgramList premise;
  AtomicProgram conclusion;
  bool operator==(const TheoremStatement&) const = default;
};

struct ProofDocument {
  std::string label;
  std::optional<TheoremStatement> statement;
  std::size_t m = 0;  // premise lines
  std::vector<ProofLine> lines;

  ProgramList statements() const;
  bool operator==(const ProofDocument&) const = default;
};

// `.thm` text: optional "theorem <label>", premise lines, "-----",
// conclusion. Throws ParseError.
TheoremStatement parse_theorem(std::string_view text, const AppSignature& sig);
std::string print_theorem(const TheoremStatement& t, const AppSignature& sig);

// `.proof` text: an optional theorem block, then "proof [label]" (optional
// when there is no theorem block) and numbered lines
// `i name [x] [y] [rule [clist]]`. Throws ParseError.
ProofDocument parse_proof(std::string_view text, const AppSignature& sig);
std::string print_proof(const ProofDocument& doc, const AppSignature& sig);

struct CheckOptions {
  std::size_t irreducibility_bound = 6;
};

struct CheckResult {
  bool accepted = false;
  std::size_t failing_line = 0;  // 0 when not tied to a line
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  std::optional<Iep> theorem;  // set on acceptance

  std::string str() const;
};

CheckResult check_proof(const ProofDocument& doc, const IepStore& store,
                        const AppSignature& sig, const CheckOptions& opts = {});

struct DocumentReport {
  std::string source;
  ProofDocument doc;
  CheckResult result;
};

// Checks documents in dependency order: a document is checked once every
// rule it cites is an axiom or the label of an accepted document. Accepted
// theorems are added to `store`. Documents stuck on a missing citation are
// reported as rejected. Reports follow the order of checking.
std::vector<DocumentReport> check_documents(
    std::vector<std::pair<std::string, ProofDocument>> docs, IepStore& store,
    const AppSignature& sig, const CheckOptions& opts = {});

struct ReductionTrace {
  std::vector<std::vector<std::size_t>> steps;
  std::vector<std::size_t> final_list;
  std::vector<std::size_t> redundant_derived;
  std::vector<std::size_t> redundant_premise;

  bool redundant() const {
    return !redundant_derived.empty() || !redundant_premise.empty();
  }
};

ReductionTrace reduce_connection_lists(const ProofDocument& doc);

struct ExportShape {
  std::uint32_t nvar = 26;
  std::size_t nx = 3;
  std::size_t ny = 1;
  std::size_t clist_width = 9;
};

// Row i = [i, pn, x, y, rule id (0 on premise rows), clist]. Throws
// std::invalid_argument on a missing rule id and CapacityError on overflow.
IntMatrix export_proof_matrix(const ProofDocument& doc,
                              const std::map<std::string, std::int64_t>& ids,
                              const ExportShape& shape);

}  // namespace pecr

#endif  // PECR_PROOF_H_

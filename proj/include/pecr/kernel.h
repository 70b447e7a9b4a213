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

// The inference core: stored rules, premise matching, rule application and
// the iot / sr1 / sr2 schemas.

#ifndef PECR_KERNEL_H_
#define PECR_KERNEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pecr/label.h"
#include "pecr/lists.h"
#include "pecr/program.h"
#include "pecr/signature.h"
#include "pecr/validate.h"

namespace pecr {

enum class Provenance { kAxiom, kTheorem, kSchema };

struct Iep {
  std::string label;
  ProgramList premise;
  AtomicProgram conclusion;
  Provenance provenance = Provenance::kAxiom;
};

inline bool is_schema_label(std::string_view s) {
  return s == "iot" || s == "sr1" || s == "sr2";
}

// Append-only; lookup by label.
class IepStore {
 public:
  // Throws std::invalid_argument on a duplicate or reserved label.
  void add(Iep iep);
  const Iep* find(std::string_view label) const;
  const std::vector<Iep>& all() const { return ieps_; }
  std::size_t size() const { return ieps_.size(); }

 private:
  std::vector<Iep> ieps_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Substitution {
  std::map<Label, Label> map;
  // Constants and unmapped labels are returned unchanged.
  Label apply(Label l) const;
};

struct MatchResult {
  std::vector<std::size_t> clist;  // 1-based proof line numbers
  Substitution subst;
};

class FreshLabelAllocator {
 public:
  FreshLabelAllocator() = default;
  explicit FreshLabelAllocator(const ProgramList& proof) { reserve(proof); }

  void reserve(Label l);
  void reserve(const AtomicProgram& ap);
  void reserve(const ProgramList& p);
  bool used(Label l) const;
  // Smallest variable id not yet used.
  Label next();

 private:
  std::set<std::uint32_t> used_;
  std::uint32_t floor_ = 1;  // every id below floor_ is used
};

// The extended list is valid and the conclusion reads only premise labels
// and constants.
ValidationReport check_extension_structure(const ProgramList& p,
                                           const AtomicProgram& c,
                                           const AppSignature& sig);

// Structure plus premise length.
ValidationReport check_iep(const Iep& iep, const AppSignature& sig);

struct MatchOptions {
  std::size_t limit = kNoLimit;
  // When nonzero, some clist entry must be >= this line number.
  std::size_t min_new_line = 0;
};

// All clists whose extraction is ioeq to iep.premise, lexicographic order.
std::vector<MatchResult> match_premise(const ProgramList& proof, const Iep& iep,
                                       const AppSignature& sig,
                                       const MatchOptions& opts = {});

// The extracted sublist for a clist. Throws std::out_of_range.
ProgramList extract(const ProgramList& proof,
                    const std::vector<std::size_t>& clist);

// Throws CapacityError when the proof is already npmax long.
AtomicProgram apply_iep(const ProgramList& proof, const Iep& iep,
                        const MatchResult& m, FreshLabelAllocator& alloc,
                        const AppSignature& sig);

// Instantiated conclusion with the given outputs instead of fresh ones.
AtomicProgram instantiate_conclusion(const Iep& iep, const Substitution& s,
                                     std::vector<Label> outputs);

// One type-check statement per distinct I/O label whose slot type has a
// registered checker. Skipped slots are reported through `skipped`.
std::vector<AtomicProgram> iot_instances(const AtomicProgram& stmt,
                                         const AppSignature& sig,
                                         ValidationReport* skipped = nullptr);

class SubstitutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// sr1 when `substituted` is null: returns the rewritten statement with fresh
// outputs. sr2 otherwise: returns eqY [y'[j] y[j]] []. The first matching
// slot wins, trying the (old, new) orientation of the equality before
// (new, old). Throws SubstitutionError.
AtomicProgram substitution_instance(const AtomicProgram& original,
                                    const AtomicProgram& equality,
                                    const AtomicProgram* substituted,
                                    const AppSignature& sig,
                                    FreshLabelAllocator& alloc,
                                    std::size_t output_index = 0);

// Every distinct sr1 rewrite (both orientations, every slot); outputs fresh.
std::vector<AtomicProgram> sr1_instances(const AtomicProgram& original,
                                         const AtomicProgram& equality,
                                         const AppSignature& sig,
                                         FreshLabelAllocator& alloc);

// Empty string when `derived` is a valid sr1 / sr2 conclusion, else reason.
std::string check_sr1(const AtomicProgram& original,
                      const AtomicProgram& equality,
                      const AtomicProgram& derived, const AppSignature& sig);
std::string check_sr2(const AtomicProgram& original,
                      const AtomicProgram& equality,
                      const AtomicProgram& substituted,
                      const AtomicProgram& derived, const AppSignature& sig);

// Composite programs. `head` carries pn 0 when `name` is not yet declared.
struct CompositeDescriptor {
  ProgramDecl decl;
  AtomicProgram head;
};

// Throws std::invalid_argument when free or primary output lists differ.
CompositeDescriptor build_disjunction(const ProgramList& a,
                                      const ProgramList& b, std::string name,
                                      const AppSignature& sig);
// Throws std::invalid_argument when [a b] is not a valid program list.
CompositeDescriptor build_conjunction(const AtomicProgram& a,
                                      const AtomicProgram& b, std::string name,
                                      const AppSignature& sig);

struct ReducibilityReport {
  bool checked = false;  // false when the premise exceeds the bound
  std::vector<std::string> witnesses;  // one-step derivations from sublists
};

// Looks for a stored rule or schema that yields the conclusion (up to
// outputs) from a strict subset of the premise lines.
ReducibilityReport find_reducibility(const Iep& theorem, const IepStore& store,
                                     const AppSignature& sig,
                                     std::size_t bound = 6);

}  // namespace pecr

#endif  // PECR_KERNEL_H_

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

// Test helpers: data paths, fixture readers, random program generators and
// the proof mutation suite.

#ifndef PECR_TESTS_SUPPORT_SUPPORT_H_
#define PECR_TESTS_SUPPORT_SUPPORT_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pecr/app.h"
#include "pecr/proof.h"
#include "pecr/signature.h"

namespace pecr::testing {

std::string data_path(const std::string& rel);

using Rows = std::vector<std::vector<std::int64_t>>;

// Integer rows separated by blank lines into blocks. '#' lines are skipped,
// "[" "]" are ignored, and "m*" reads as nvar+m.
std::vector<Rows> read_blocks(const std::string& path, std::uint32_t nvar);
Rows read_rows(const std::string& path, std::uint32_t nvar);
// Lines of the file with comments and blanks removed.
std::vector<std::string> read_lines(const std::string& path);

Rows to_rows(const IntMatrix& m);
template <class M>
Rows to_rows_any(const M& m) {
  Rows r(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

// Corpus files of one pack ("nat" or "pecr") in theorem order.
std::vector<std::string> corpus_files(const std::string& pack);

struct CheckedCorpus {
  std::vector<std::pair<std::string, ProofDocument>> docs;  // theorem order
  std::vector<CheckResult> results;
  // before[k]: axioms plus theorems 1..k-1.
  std::vector<IepStore> before;
};
CheckedCorpus check_corpus(const Application& app, const std::string& pack);

// Synthetic signature for random programs: one type, programs with every
// input arity 0..3 and output arity 0..1, and two constants.
AppSignature random_signature();

struct ProgramShape {
  std::size_t max_len = 6;
  double reuse = 0.35;     // input repeats an earlier label
  double constant = 0.15;  // input is a constant
};
// A program that passes validate_program_list. `pns` fixes the program
// names (and so the length) when non-empty.
ProgramList random_program(std::mt19937_64& rng, const AppSignature& sig,
                           const ProgramShape& shape = {},
                           const std::vector<std::uint32_t>& pns = {});

// Pairs for I/O equivalence testing. Kinds: rename (equivalent both ways),
// merge and constant (q adds bindings), split (q drops one), perturb,
// independent and reshape. `q` may be invalid for perturb.
struct IoeqPair {
  std::string kind;
  ProgramList q;
  ProgramList p;
};
std::vector<std::string> ioeq_pair_kinds();
IoeqPair make_ioeq_pair(std::mt19937_64& rng, const AppSignature& sig,
                        const std::string& kind);

struct Mutation {
  std::string kind;
  ProofDocument doc;
};
// Single-edit mutations of an accepted proof: clist swap, clist retarget,
// output clash, program name change, premise drop, conclusion input change.
// Kinds without a suitable site are left out.
std::vector<Mutation> mutate(const ProofDocument& doc, const AppSignature& sig);

}  // namespace pecr::testing

#endif  // PECR_TESTS_SUPPORT_SUPPORT_H_

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

// Command implementations behind the pecr executable. Each returns the
// process exit status and writes its report to `out`.

#ifndef PECR_CLI_H_
#define PECR_CLI_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pecr/app.h"
#include "pecr/prover.h"

namespace pecr {

enum ExitCode {
  kExitOk = 0,
  kExitRejected = 1,
  kExitParseError = 2,
  kExitBudget = 3,
};

struct CommonOptions {
  std::string app;  // file path, or "nat" / "pecr" for a built-in pack
  std::optional<std::string> mach;  // "msym,mstr,mnat"
  std::optional<std::string> mlst;  // "nprem,npmax,nx,ny"
};

Application load_app(const CommonOptions& o);

// Matrix shape; unset fields are fitted to the program.
struct ShapeOptions {
  std::optional<std::uint32_t> nvar;
  std::optional<std::size_t> nx;
  std::optional<std::size_t> ny;
  std::optional<std::size_t> clist_width;
};

struct RunOptions {
  std::string map = "tent";
  std::int64_t N = 8;
  std::int64_t c = 0;
  std::size_t budget = 1000000;
};

struct ProbeCommandOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> exhaustive;
  RunOptions run;
};

struct DynOptions {
  std::string op;  // iterate | bound | certify | cycle
  std::string map = "tent";
  std::int64_t N = 8;
  std::int64_t c = 0;
  std::string u0 = "0";
  std::optional<std::string> box;  // "[lo hi]", default [0, N] per cell
  std::int64_t n = 1;
  std::int64_t every = 1;
  std::uint64_t limit = 0;  // 0: state count of the box + 1
  std::uint64_t mnat = 2147483647;
};

// .thm files give statements, .proof files give proofs; proofs are checked
// in dependency order.
int cmd_check(const CommonOptions& o, const std::vector<std::string>& files,
              std::ostream& out);
// `lib` proofs are checked first and their theorems become usable rules.
int cmd_prove(const CommonOptions& o, const std::string& thm_file,
              const std::vector<std::string>& lib, const ProverConfig& cfg,
              std::ostream& out);
int cmd_reduce(const CommonOptions& o, const std::string& proof_file,
               std::ostream& out);
// A program file, or with `rule_ids` set a proof file in export format.
int cmd_encode(const CommonOptions& o, const std::string& file,
               const ShapeOptions& shape,
               const std::optional<std::string>& rule_ids, std::ostream& out);
int cmd_decompose(const CommonOptions& o, const std::string& file,
                  const ShapeOptions& shape, std::ostream& out);
int cmd_ioeq(const CommonOptions& o, const std::string& q_file,
             const std::string& p_file, std::ostream& out);
int cmd_run(const CommonOptions& o, const std::string& prog_file,
            const std::string& va_file, const RunOptions& r, std::ostream& out);
// Probes stored rules by label; `lib` proofs supply theorems.
int cmd_probe(const CommonOptions& o, const std::vector<std::string>& labels,
              const std::vector<std::string>& lib, const ProbeCommandOptions& p,
              std::ostream& out);
int cmd_dyn(const DynOptions& d, std::ostream& out);

}  // namespace pecr

#endif  // PECR_CLI_H_

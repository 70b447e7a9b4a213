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

// pecr: proof checking, proving and execution for PECR applications.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pecr/cli.h"

namespace {

void add_common(CLI::App* cmd, pecr::CommonOptions& o) {
  cmd->add_option("app", o.app, "application file, or nat / pecr")->required();
  cmd->add_option("--mach", o.mach, "msym,mstr,mnat");
  cmd->add_option("--mlst", o.mlst, "nprem,npmax,nx,ny");
}

void add_shape(CLI::App* cmd, pecr::ShapeOptions& s) {
  cmd->add_option("--nvar", s.nvar, "variable label count");
  cmd->add_option("--nx", s.nx, "input columns");
  cmd->add_option("--ny", s.ny, "output columns");
}

void add_run(CLI::App* cmd, pecr::RunOptions& r) {
  cmd->add_option("--map", r.map, "map behind f, itf and bndf")
      ->capture_default_str();
  cmd->add_option("--N", r.N, "map parameter N")->capture_default_str();
  cmd->add_option("--c", r.c, "value of the constant map")
      ->capture_default_str();
  cmd->add_option("--budget", r.budget, "atomic program executions")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PECR proof checker, prover and evaluator"};
  app.require_subcommand(1);

  pecr::CommonOptions common;
  std::vector<std::string> files, lib, labels;
  std::string file, second;
  pecr::ShapeOptions shape;
  std::optional<std::string> rule_ids;
  pecr::ProverConfig prover;
  pecr::RunOptions run;
  pecr::ProbeCommandOptions probe;
  pecr::DynOptions dyn;
  std::optional<std::size_t> clist_width;

  auto* check = app.add_subcommand("check", "check proofs in dependency order");
  add_common(check, common);
  check->add_option("files", files, ".thm and .proof files")->required();

  auto* prove = app.add_subcommand("prove", "search for a proof");
  add_common(prove, common);
  prove->add_option("theorem", file, ".thm file")->required();
  prove->add_option("--lib", lib, "checked proofs whose theorems may be used");
  prove->add_option("--depth", prover.max_depth, "generations")
      ->capture_default_str();
  prove->add_option("--facts", prover.max_facts, "statement limit")
      ->capture_default_str();
  prove->add_option("--time", prover.time_budget, "seconds")
      ->capture_default_str();
  prove->add_option("--seed", prover.seed, "rule trial order, 0 = store order")
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "connection list reduction");
  add_common(reduce, common);
  reduce->add_option("proof", file)->required();

  auto* encode = app.add_subcommand("encode", "integer matrix of a program");
  add_common(encode, common);
  encode->add_option("file", file, "program file, or proof with --proof")
      ->required();
  add_shape(encode, shape);
  auto* as_proof = encode->add_flag("--proof", "export a proof matrix");
  encode->add_option("--rule-ids", rule_ids, "rule id fixture for --proof");
  encode->add_option("--clist-width", clist_width, "connection list columns");

  auto* decompose = app.add_subcommand("decompose", "I/O matrix decomposition");
  add_common(decompose, common);
  decompose->add_option("file", file)->required();
  add_shape(decompose, shape);

  auto* ioeq = app.add_subcommand("ioeq", "I/O equivalence ioeq[q p]");
  add_common(ioeq, common);
  ioeq->add_option("q", file)->required();
  ioeq->add_option("p", second)->required();

  auto* runc = app.add_subcommand("run", "execute a program on a VA file");
  add_common(runc, common);
  runc->add_option("program", file)->required();
  runc->add_option("va", second, "label = value lines");
  add_run(runc, run);

  auto* probec = app.add_subcommand("probe", "randomized soundness probe");
  add_common(probec, common);
  probec->add_option("rules", labels, "rule labels")->required();
  probec->add_option("--lib", lib,
                     "checked proofs whose theorems may be probed");
  probec->add_option("--trials", probe.trials)->capture_default_str();
  probec->add_option("--seed", probe.seed)->capture_default_str();
  probec->add_option("--exhaustive", probe.exhaustive,
                     "also enumerate nat variables in 0..n");
  add_run(probec, probe.run);

  auto* dync = app.add_subcommand("dyn", "dynamical system tools");
  dync->add_option("op", dyn.op, "iterate | bound | certify | cycle")
      ->required()
      ->check(CLI::IsMember({"iterate", "bound", "certify", "cycle"}));
  dync->add_option("map", dyn.map)->capture_default_str();
  dync->add_option("--N", dyn.N)->capture_default_str();
  dync->add_option("--c", dyn.c)->capture_default_str();
  dync->add_option("--u0", dyn.u0, "start state, e.g. 3 or [1 2]")
      ->capture_default_str();
  dync->add_option("--box", dyn.box, "domain [lo hi], default [0 N]");
  dync->add_option("--n", dyn.n, "iterations")->capture_default_str();
  dync->add_option("--every", dyn.every, "trace interval")
      ->capture_default_str();
  dync->add_option("--limit", dyn.limit, "cycle search steps");
  dync->add_option("--mnat", dyn.mnat)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::ostream& out = std::cout;
  if (*check) return pecr::cmd_check(common, files, out);
  if (*prove) return pecr::cmd_prove(common, file, lib, prover, out);
  if (*reduce) return pecr::cmd_reduce(common, file, out);
  if (*encode) {
    shape.clist_width = clist_width;
    if (*as_proof && !rule_ids) rule_ids = "";
    return pecr::cmd_encode(common, file, shape, rule_ids, out);
  }
  if (*decompose) return pecr::cmd_decompose(common, file, shape, out);
  if (*ioeq) return pecr::cmd_ioeq(common, file, second, out);
  if (*runc) return pecr::cmd_run(common, file, second, run, out);
  if (*probec) return pecr::cmd_probe(common, labels, lib, probe, out);
  if (*dync) return pecr::cmd_dyn(dyn, out);
  return pecr::kExitParseError;
}

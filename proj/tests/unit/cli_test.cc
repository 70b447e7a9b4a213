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

#include "pecr/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/support.h"

namespace pecr {
namespace {

namespace fs = std::filesystem;
using testing::data_path;

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "pecr_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

CommonOptions app(const char* name) {
  CommonOptions o;
  o.app = name;
  return o;
}

TEST_CASE("check corpus") {
  std::ostringstream out;
  CHECK(cmd_check(app("nat"), testing::corpus_files("nat"), out) == kExitOk);
  std::ostringstream out2;
  CommonOptions file;
  file.app = data_path("apps/pecr.app");
  CHECK(cmd_check(file, testing::corpus_files("pecr"), out2) == kExitOk);
}

TEST_CASE("check rejects a mutated clist") {
  std::ifstream in(data_path("corpus/nat/thm2.proof"));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto pos = text.find("bx4a [7 6 1]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "bx4a [7 6 2]");
  std::string f = write_temp("thm2_bad.proof", text);
  std::ostringstream out;
  CHECK(cmd_check(app("nat"), {data_path("corpus/nat/thm1.proof"), f}, out) ==
        kExitRejected);
  CHECK(out.str().find("rejected") != std::string::npos);
}

TEST_CASE("check with a statement file") {
  std::string thm = write_temp(
      "t5.thm", "theorem thm5\neqbx [p q] []\n-----\neqbx [q p] []\n");
  std::ostringstream out;
  CHECK(cmd_check(app("nat"), {thm, data_path("corpus/nat/thm5.proof")}, out) ==
        kExitOk);
  std::string missing = write_temp(
      "t9.thm", "theorem thm9\neqbx [p q] []\n-----\neqbx [q p] []\n");
  std::ostringstream out2;
  CHECK(cmd_check(app("nat"), {missing}, out2) == kExitRejected);
}

TEST_CASE("parse errors exit 2") {
  std::string bad = write_temp("bad.proof", "proof x\n1 nosuch [a] []\n");
  std::ostringstream out;
  CHECK(cmd_check(app("nat"), {bad}, out) == kExitParseError);
  std::ostringstream out2;
  CHECK(cmd_check(app("nosuch.app"), {bad}, out2) == kExitParseError);
}

TEST_CASE("reduce") {
  std::ostringstream out;
  CHECK(cmd_reduce(app("nat"), data_path("corpus/nat/thm2.proof"), out) ==
        kExitOk);
  std::string s = out.str();
  CHECK(s.rfind("[6 8 9 11 16 17]\n", 0) == 0);
  CHECK(s.find("[1 2]\nno redundant lines\n") != std::string::npos);
}

TEST_CASE("encode and export") {
  std::ostringstream out;
  CHECK(cmd_encode(app("pecr"), data_path("examples/derivation.prog"), {},
                   std::nullopt, out) == kExitOk);
  CHECK(out.str() == "[6 17 3 0]\n[4 17 16 0]\n[8 16 3 19]\n");
  std::ostringstream m;
  ShapeOptions shape;
  shape.clist_width = 6;
  CHECK(cmd_encode(app("nat"), data_path("corpus/nat/thm2.proof"), shape,
                   data_path("fixtures/nat_rule_ids.txt"), m) == kExitOk);
  std::istringstream rows(m.str());
  std::string first;
  std::getline(rows, first);
  CHECK(first == "1 13 16 17 0 0 0 0 0 0 0 0");
}

TEST_CASE("decompose") {
  std::ostringstream out;
  CHECK(cmd_decompose(app("nat"), data_path("examples/axc.prog"), {}, out) ==
        kExitOk);
  std::string s = out.str();
  CHECK(s.find("u[6] w non-binding") != std::string::npos);
  CHECK(s.find("sum matches") != std::string::npos);
}

TEST_CASE("ioeq direction") {
  std::string q = write_temp("q.prog", "eqn [c c] []\n");
  std::string p = write_temp("p.prog", "eqn [a b] []\n");
  std::ostringstream a, b;
  CHECK(cmd_ioeq(app("nat"), q, p, a) == kExitOk);
  CHECK(cmd_ioeq(app("nat"), p, q, b) == kExitRejected);
}

TEST_CASE("run") {
  std::string prog = write_temp("lt.prog", "lt [a b] []\n");
  std::string va = write_temp("lt.va", "a = 1\nb = 2\n");
  std::string bad = write_temp("lt_bad.va", "a = 2\nb = 2\n");
  std::ostringstream a, b;
  CHECK(cmd_run(app("nat"), prog, va, {}, a) == kExitOk);
  CHECK(cmd_run(app("nat"), prog, bad, {}, b) == kExitRejected);
  std::string loop = write_temp("itf.prog", "itf [u n] [w]\n");
  std::string lva = write_temp("itf.va", "u = [3]\nn = 100\n");
  RunOptions r;
  r.budget = 5;
  std::ostringstream c;
  CHECK(cmd_run(app("nat"), loop, lva, r, c) == kExitBudget);
}

TEST_CASE("probe") {
  ProbeCommandOptions p;
  p.trials = 100;
  p.exhaustive = 6;
  std::ostringstream out;
  CHECK(cmd_probe(app("nat"), {"ord1", "bx4a"}, {}, p, out) == kExitOk);
  CHECK(out.str().find("violations=0") != std::string::npos);
}

TEST_CASE("prove writes a checkable proof") {
  std::ostringstream out;
  CHECK(cmd_prove(app("nat"), data_path("corpus/nat/thm5.proof"), {}, {},
                  out) == kExitOk);
  std::string f = write_temp("thm5_found.proof", out.str());
  std::ostringstream chk;
  CHECK(cmd_check(app("nat"), {f}, chk) == kExitOk);
}

TEST_CASE("dyn") {
  DynOptions d;
  d.op = "cycle";
  d.u0 = "3";
  std::ostringstream out;
  CHECK(cmd_dyn(d, out) == kExitOk);
  CHECK(out.str() == "tcyc=4 pcyc=1\n");
  d.op = "certify";
  d.map = "shift";
  std::ostringstream c;
  CHECK(cmd_dyn(d, c) == kExitRejected);
  CHECK(c.str().rfind("refused", 0) == 0);
  d.op = "iterate";
  d.map = "tent";
  d.n = 3;
  std::ostringstream it;
  CHECK(cmd_dyn(d, it) == kExitOk);
  CHECK(it.str() == "0 3\n1 6\n2 4\n3 8\n");
  d.op = "nosuch";
  std::ostringstream e;
  CHECK(cmd_dyn(d, e) == kExitParseError);
}

}  // namespace
}  // namespace pecr

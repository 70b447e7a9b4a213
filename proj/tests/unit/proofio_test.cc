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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "pecr/app.h"
#include "pecr/proof.h"
#include "pecr/runtime.h"
#include "pecr/text.h"
#include "support/support.h"

namespace pecr {
namespace {

using testing::data_path;

const Application& pecr_app() { return builtin_apps().at("pecr"); }
const Application& nat_app() { return builtin_apps().at("nat"); }

ProofDocument load(const std::string& pack, const std::string& name) {
  const Application& app = builtin_apps().at(pack);
  return parse_proof(read_file(data_path("corpus/" + pack + "/" + name)),
                     app.sig);
}

IepStore nat_store_before_thm2() {
  IepStore s = nat_app().axioms;
  CheckResult r = check_proof(load("nat", "thm1.proof"), s, nat_app().sig);
  REQUIRE(r.accepted);
  s.add(*r.theorem);
  return s;
}

TEST_CASE("application packs") {
  const AppSignature& n = nat_app().sig;
  REQUIRE(n.constants.size() == 3);
  CHECK(n.constants[0].name == "0");
  CHECK(n.constants[1].name == "1");
  CHECK(n.constants[2].name == "mnat");
  CHECK(n.find_program("lt").has_value());
  CHECK(nat_app().axioms.find("axc") != nullptr);
  CHECK(pecr_app().sig.find_constant("ep").has_value());
  for (const char* l : {"per", "cr1", "cr7", "eope", "dsj1", "cnj2c"})
    CHECK(pecr_app().axioms.find(l) != nullptr);
  REQUIRE_FALSE(nat_app().false_programs.empty());
  CHECK(nat_app().false_programs[0].label == "ord3");
}

TEST_CASE("application round trip") {
  Application again = parse_application(print_application(nat_app()));
  CHECK(again.axioms.size() == nat_app().axioms.size());
  CHECK(again.sig.programs.size() == nat_app().sig.programs.size());
}

TEST_CASE("application rejects bad axioms") {
  std::string base = builtin_app_text("nat");
  CHECK_THROWS_AS(
      parse_application(base + "\nAXIOM fresh\ntypen [a] []\n-----\n"
                               "lt [a z] []\nEND\n"),
      ParseError);
  CHECK_THROWS_AS(parse_application(base + "\nAXIOM axn1\ntypen [a] []\n-----\n"
                                           "eqn [a a] []\nEND\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_application(base + "\nAXIOM bad\nnope [a] []\n-----\n"
                                           "eqn [a a] []\nEND\n"),
                  ParseError);
}

TEST_CASE("parse proofs") {
  ProofDocument t2 = load("nat", "thm2.proof");
  CHECK(t2.lines.size() == 18);
  CHECK(t2.m == 2);
  REQUIRE(t2.statement.has_value());
  CHECK(t2.statement->premise.size() == 2);
  ProofDocument p1 = load("pecr", "thm1.proof");
  CHECK(p1.lines.size() == 3);
  CHECK(p1.lines[2].just->clist == std::vector<std::size_t>{2, 2});
  CHECK(p1.lines[2].just->rule == "cr4b");
  CHECK_THROWS_AS(parse_proof("proof x\n1 typen [a] []\n2 typen [b] []\n3 "
                              "typen [c] []\n4 typen [d] []\n5 eqn [a a] [] "
                              "axn1 [9]\n",
                              nat_app().sig),
                  ParseError);
  CHECK_THROWS_AS(parse_proof("proof x\n1 nope [a] []\n", nat_app().sig),
                  ParseError);
  CHECK_THROWS_AS(
      parse_proof("proof x\n1 typen [a] [] axn1 [\n", nat_app().sig),
      ParseError);
}

TEST_CASE("theorem files") {
  TheoremStatement t = parse_theorem(
      "theorem t\nsubbx [p q] []\n-----\nsubbx [p p] []\n", nat_app().sig);
  CHECK(t.label == "t");
  CHECK(t.premise.size() == 1);
  CHECK(parse_theorem(print_theorem(t, nat_app().sig), nat_app().sig) == t);
}

TEST_CASE("corpus is accepted and prints back") {
  for (const char* pack : {"nat", "pecr"}) {
    const Application& app = builtin_apps().at(pack);
    auto c = testing::check_corpus(app, pack);
    CHECK(c.docs.size() == (std::string(pack) == "nat" ? 6u : 26u));
    for (std::size_t i = 0; i < c.docs.size(); ++i) {
      CAPTURE(c.docs[i].first);
      CHECK(c.results[i].accepted);
      const ProofDocument& d = c.docs[i].second;
      CHECK(parse_proof(print_proof(d, app.sig), app.sig) == d);
      CHECK(validate_program_list(d.statements(), app.sig).ok());
    }
  }
}

TEST_CASE("check_documents orders by citation") {
  std::vector<std::pair<std::string, ProofDocument>> docs;
  for (const auto& f : testing::corpus_files("pecr"))
    docs.emplace_back(f, parse_proof(read_file(f), pecr_app().sig));
  std::mt19937_64 rng(3);
  std::shuffle(docs.begin(), docs.end(), rng);
  IepStore store = pecr_app().axioms;
  auto reports = check_documents(docs, store, pecr_app().sig);
  REQUIRE(reports.size() == 26);
  for (const auto& r : reports) CHECK(r.result.accepted);
  CHECK(store.size() == pecr_app().axioms.size() + 26);
}

TEST_CASE("circular citations are rejected") {
  const AppSignature& s = nat_app().sig;
  ProofDocument a =
      parse_proof("proof ta\n1 typebx [p] []\n2 eqbx [p p] [] tb [1]\n", s);
  ProofDocument b =
      parse_proof("proof tb\n1 typebx [p] []\n2 eqbx [p p] [] ta [1]\n", s);
  IepStore store = nat_app().axioms;
  auto r = check_documents({{"a", a}, {"b", b}}, store, s);
  REQUIRE(r.size() == 2);
  CHECK_FALSE(r[0].result.accepted);
  CHECK_FALSE(r[1].result.accepted);
}

TEST_CASE("a changed clist is rejected at its line") {
  ProofDocument d = load("nat", "thm2.proof");
  d.lines[11].just->clist = {7, 6, 2};
  CheckResult r = check_proof(d, nat_store_before_thm2(), nat_app().sig);
  CHECK_FALSE(r.accepted);
  CHECK(r.failing_line == 12);
}

TEST_CASE("unknown rule is rejected") {
  ProofDocument d = load("nat", "thm5.proof");
  d.lines[2].just->rule = "nosuch";
  CHECK_FALSE(check_proof(d, nat_app().axioms, nat_app().sig).accepted);
}

TEST_CASE("unused premise makes the theorem reducible") {
  ProofDocument d = parse_proof(
      "proof t\n1 typebx [p] []\n2 typebx [q] []\n3 eqbx [p p] [] bx1 [1]\n",
      nat_app().sig);
  d.m = 2;
  CheckResult r = check_proof(d, nat_app().axioms, nat_app().sig);
  CHECK_FALSE(r.accepted);
}

TEST_CASE("thm2 reduction trace") {
  ProofDocument d = load("nat", "thm2.proof");
  ReductionTrace t = reduce_connection_lists(d);
  auto lines =
      testing::read_lines(data_path("fixtures/nat_thm2_reduction.txt"));
  REQUIRE(t.steps.size() == lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string s = "[";
    for (std::size_t k = 0; k < t.steps[i].size(); ++k)
      s += (k ? " " : "") + std::to_string(t.steps[i][k]);
    CHECK(s + "]" == lines[i]);
  }
  CHECK(t.final_list == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(t.redundant());
  std::size_t mx = 1000;
  for (const auto& s : t.steps) {
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(s.back() <= mx);
    mx = s.back();
  }
}

TEST_CASE("reduction reports an unused line") {
  ProofDocument d = load("nat", "thm2.proof");
  ProofLine extra{d.lines[2].stmt, Justification{"iot", {1}}};
  d.lines.insert(d.lines.begin() + 17, extra);
  ReductionTrace t = reduce_connection_lists(d);
  CHECK(t.redundant_derived == std::vector<std::size_t>{18});
  CHECK(t.redundant_premise.empty());

  ProofDocument one = parse_proof(
      "proof t\n1 typebx [p] []\n2 eqbx [p p] [] bx1 [1]\n", nat_app().sig);
  one.m = 1;
  ReductionTrace u = reduce_connection_lists(one);
  CHECK(u.steps.size() == 1);
  CHECK(u.final_list == std::vector<std::size_t>{1});
}

TEST_CASE("thm2 integer export") {
  ProofDocument d = load("nat", "thm2.proof");
  REQUIRE(check_proof(d, nat_store_before_thm2(), nat_app().sig).accepted);
  auto ids = parse_rule_ids(read_file(data_path("fixtures/nat_rule_ids.txt")));
  IntMatrix m = export_proof_matrix(d, ids, {26, 2, 1, 6});
  CHECK(testing::to_rows(m) ==
        testing::read_rows(data_path("fixtures/nat_thm2_matrix.txt"), 26));
  CHECK(testing::to_rows(m)[0] ==
        std::vector<std::int64_t>{1, 13, 16, 17, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(testing::to_rows(m)[11] ==
        std::vector<std::int64_t>{12, 9, 2, 1, 0, 25, 7, 6, 1, 0, 0, 0});
  ids.erase("bx4c");
  CHECK_THROWS_AS(export_proof_matrix(d, ids, {26, 2, 1, 6}),
                  std::invalid_argument);
}

TEST_CASE("empty clist export row") {
  ProofDocument d =
      parse_proof("proof t\n1 lt [0 1] [] ord2a []\n", nat_app().sig);
  auto ids = default_rule_ids(nat_app());
  IntMatrix m = export_proof_matrix(d, ids, {26, 2, 1, 3});
  CHECK(m(0, 5) == ids.at("ord2a"));
  CHECK(m(0, 6) == 0);
  CHECK(m(0, 8) == 0);
}

}  // namespace
}  // namespace pecr

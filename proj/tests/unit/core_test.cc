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

#include <stdexcept>

#include "doctest.h"
#include "pecr/binding.h"
#include "pecr/label.h"
#include "pecr/lists.h"
#include "pecr/machine.h"
#include "pecr/runtime.h"
#include "pecr/text.h"
#include "pecr/validate.h"

namespace pecr {
namespace {

const AppSignature& pecr_sig() { return builtin_apps().at("pecr").sig; }
const AppSignature& nat_sig() { return builtin_apps().at("nat").sig; }

std::vector<std::string> S(std::initializer_list<const char*> l) {
  return {l.begin(), l.end()};
}

TEST_CASE("concat and chain") {
  CHECK(concat_lists(S({"a", "b", "c"}), S({"d", "e"})) ==
        S({"a", "b", "c", "d", "e"}));
  CHECK(concat_lists(S({}), S({"x", "y"})) == S({"x", "y"}));
  CHECK(chain_terms({Term::parse("[a [b c]]"), Term::parse("[b d]"),
                     Term::parse("[e f]")})
            .str() == "[a [b c] b d e f]");
  CHECK(concat_terms(Term("a"), Term::parse("[b]")).str() == "[a b]");
  CHECK_THROWS_AS(concat_lists(S({"a"}), S({"b"}), 1), CapacityError);
}

TEST_CASE("cap minus unique") {
  CHECK(cap_lists(S({"p", "q", "r", "s"}), S({"r", "q", "s", "q"})) ==
        S({"q", "r", "s"}));
  CHECK(cap_lists(S({"r", "q", "s", "q"}), S({"p", "q", "r", "s"})) ==
        S({"r", "q", "s"}));
  CHECK(cap_lists(S({"a"}), S({})).empty());
  CHECK(minus_lists(S({"p", "q", "r", "s"}), S({"p", "t"})) ==
        S({"q", "r", "s"}));
  CHECK(minus_lists(S({"a", "a"}), S({})) == S({"a", "a"}));
  CHECK(unique_list(S({"p", "q", "r", "s", "r", "q", "s", "q"})) ==
        S({"p", "q", "r", "s"}));
  CHECK(unique_list(S({"r", "q", "s", "q"})) == S({"r", "q", "s"}));
  CHECK(unique_list(S({})).empty());
}

TEST_CASE("sublist flags") {
  auto f = sublist_check(S({"b", "b", "a", "b"}), S({"a", "b", "c"}));
  CHECK(f.sublst);
  CHECK_FALSE(f.equivlst);
  f = sublist_check(S({"b", "b", "a", "b"}), S({"a", "b", "a"}));
  CHECK(f.equivlst);
  CHECK_FALSE(f.eqlst);
  CHECK(sublist_check(S({"a", "b"}), S({"a", "b"})).eqlst);
}

TEST_CASE("variable names") {
  CHECK(variable_name(1) == "a");
  CHECK(variable_name(26) == "z");
  CHECK(variable_name(27) == "a1");
  CHECK(variable_name(53) == "a2");
  CHECK(variable_id("z1") == 52u);
  CHECK_FALSE(variable_id("1a").has_value());
}

TEST_CASE("machine parameters") {
  MachineParams m;
  m.mlst.nprem = 10;
  m.mlst.npmax = 5;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  ListLimits l = parse_mlst("9,64,2,1");
  CHECK(l.nx == 2);
  CHECK(l.npmax == 64);
}

TEST_CASE("validate atomic") {
  CHECK(validate_atomic(parse_statement("ext [q c] []", pecr_sig()), pecr_sig())
            .ok());
  CHECK(validate_atomic(parse_statement("f [a] [a]", nat_sig()), nat_sig())
            .has("cap[x y] nonempty"));
  AtomicProgram ap = parse_statement("f [a] [b]", nat_sig());
  ap.y.push_back(ap.y[0]);
  CHECK(validate_atomic(ap, nat_sig()).has("y not unique"));
}

TEST_CASE("validate program list") {
  ProgramList d = parse_program_list(
      "ext [q c] []\nsub [q p] []\nconc [p c] [s]", pecr_sig());
  CHECK(validate_program_list(d, pecr_sig()).ok());
  ProgramList dup =
      parse_program_list("lbx [p] [s]\nf [s] [s2]\nf [s2] [s]", nat_sig());
  ValidationReport r = validate_program_list(dup, nat_sig());
  CHECK(r.has("duplicate output label"));
  ProgramList later = parse_program_list("f [s] [t]\nlbx [p] [s]", nat_sig());
  CHECK(
      validate_program_list(later, nat_sig()).has("input equals later output"));
}

TEST_CASE("binding profile") {
  ProgramList d = parse_program_list(
      "ext [q c] []\nsub [q p] []\nconc [p c] [s]", pecr_sig());
  BindingProfile b = binding_profile(d);
  auto names = [](const std::vector<Label>& v) {
    std::vector<std::string> r;
    for (Label l : v) r.push_back(pecr_sig().label_text(l));
    return r;
  };
  CHECK(names(b.lio) == S({"q", "c", "p", "s"}));
  CHECK(names(b.pil) == S({"q", "c", "p"}));
  CHECK(names(b.free) == S({"q", "c", "p"}));
  CHECK(names(b.pol) == S({"s"}));
  BindingProfile e = binding_profile({});
  CHECK(e.lio.empty());
  CHECK(e.pol.empty());
}

TEST_CASE("free excludes constants") {
  ProgramList p = parse_program_list("lt [0 a] []\nlt [a mnat] []", nat_sig());
  BindingProfile b = binding_profile(p);
  CHECK(b.pil.size() == 3);
  CHECK(b.free.size() == 1);
}

}  // namespace
}  // namespace pecr

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

#include "pecr/dynsys.h"

#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"

namespace pecr {
namespace {

NatArray A(std::initializer_list<std::int64_t> v) {
  return NatArray{{v.size()}, v};
}
Box B(std::int64_t lo, std::int64_t hi) { return {A({lo}), A({hi})}; }

constexpr std::int64_t kMnat = 2147483647;

TEST_CASE("arrays") {
  CHECK(eqa(A({1, 2}), A({1, 2})));
  CHECK(lta(A({0, 1}), A({1, 2})));
  CHECK_FALSE(lta(A({1, 1}), A({1, 2})));
  CHECK(lea(A({1, 1}), A({1, 2})));
  CHECK_FALSE(lea(A({1}), A({1, 2})));
  CHECK(parse_nat_array("[[1 2] [3 4]]").dims ==
        std::vector<std::size_t>{2, 2});
  CHECK(parse_nat_array("5") == A({5}));
  CHECK(parse_nat_array("[[1 2] [3 4]]").str() == "[[1 2] [3 4]]");
  CHECK_THROWS_AS(parse_nat_array("[[1 2] [3]]"), std::invalid_argument);
  CHECK(subbx(B(1, 2), B(0, 3)));
  CHECK_FALSE(subbx(B(1, 4), B(0, 3)));
}

TEST_CASE("tent iteration") {
  MapSpec t = make_map("tent", 8);
  CHECK(iterate(t, A({3}), 0, kMnat) == A({3}));
  CHECK(iterate(t, A({3}), 1, kMnat) == A({6}));
  CHECK(iterate(t, A({3}), 3, kMnat) ==
        iterate(t, iterate(t, A({3}), 2, kMnat), 1, kMnat));
  CHECK_THROWS_AS(iterate(t, A({9}), 1, kMnat), ExecutionError);
  std::vector<std::int64_t> seen;
  iterate(
      t, A({3}), 4, kMnat,
      [&](std::int64_t k, const NatArray&) { seen.push_back(k); }, 2);
  CHECK(seen == std::vector<std::int64_t>{0, 2, 4});
  CHECK(format_trace_line(2, A({4, 5})) == "2 4 5");
}

TEST_CASE("shift leaves the machine range") {
  MapSpec s = make_map("shift", 8);
  CHECK_THROWS_AS(iterate(s, A({5}), 10, 9), ExecutionError);
}

TEST_CASE("range bounds") {
  for (std::int64_t n : {2, 8, 64}) {
    CHECK(bound_range(make_map("tent", n), B(0, n), kMnat) == B(0, n));
  }
  CHECK(bound_range(make_map("tent", 1), B(0, 1), kMnat) == B(0, 0));
  CHECK(bound_range(make_map("identity", 8), B(2, 5), kMnat) == B(2, 5));
  CHECK(bound_range(make_map("constant", 8, 3), B(0, 8), kMnat) == B(3, 3));
  CHECK(bound_range(make_map("shift", 8), B(0, 8), kMnat, 0) == B(1, 9));
  CHECK_THROWS_AS(make_map("nosuch", 8), std::invalid_argument);
}

TEST_CASE("certification") {
  CHECK(certify_axc(make_map("tent", 8), B(0, 8), kMnat).certified);
  CHECK(certify_axc(make_map("identity", 8), B(0, 8), kMnat).certified);
  AxcCertificate s = certify_axc(make_map("shift", 8), B(0, 8), kMnat);
  CHECK_FALSE(s.certified);
  CHECK_FALSE(s.reason.empty());
}

TEST_CASE("state counts") {
  CHECK(state_count(B(0, 8), kMnat).count == 9);
  CHECK(state_count(B(4, 4), kMnat).count == 1);
  CHECK(state_count({A({0, 0}), A({1, 2})}, kMnat).count == 6);
  CHECK(state_count({A({0, 0, 0}), A({kMnat, kMnat, kMnat})}, kMnat).saturated);
}

TEST_CASE("cycles") {
  auto c = detect_cycle(make_map("constant", 8, 2), A({5}), 10, kMnat);
  REQUIRE(c);
  CHECK(c->tcyc <= 1);
  CHECK(c->pcyc == 1);
  auto inv = detect_cycle(make_map("involution", 8), A({1}), 10, kMnat);
  REQUIRE(inv);
  CHECK(inv->pcyc == 2);
  CHECK(inv->tcyc == 0);
  auto t = detect_cycle(make_map("tent", 8), A({3}), 9, kMnat);
  REQUIRE(t);
  CHECK(t->tcyc == 4);
  CHECK(t->pcyc == 1);
  CHECK_FALSE(detect_cycle(make_map("shift", 100), A({0}), 5, kMnat));
}

TEST_CASE("hashing and Brent agree") {
  std::mt19937_64 rng(5);
  MapSpec t = make_map("tent", 64);
  for (int i = 0; i < 50; ++i) {
    NatArray u = A({std::uniform_int_distribution<std::int64_t>(0, 64)(rng)});
    auto a = detect_cycle(t, u, 100, kMnat);
    auto b = detect_cycle(t, u, 100, kMnat, 0);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->tcyc == b->tcyc);
    CHECK(a->pcyc == b->pcyc);
  }
}

}  // namespace
}  // namespace pecr

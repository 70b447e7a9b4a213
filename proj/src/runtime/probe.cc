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

#include "pecr/binding.h"
#include "pecr/runtime.h"
#include "pecr/text.h"
#include "pecr/validate.h"

namespace pecr {
namespace {

// Statements that random program values are drawn from.
constexpr const char* kProgramPool[] = {
    "typen [a] []",  "lt [a b] []",   "eqn [a b] []", "typea [u] []",
    "lea [u v] []",  "box [u v] [p]", "lbx [p] [w]",  "ubx [p] [w]",
    "typebx [p] []", "eqa [u v] []",
};

struct Sampler {
  std::mt19937_64 rng;
  const ProbeOptions& opts;
  const AppSignature& object_sig;
  std::vector<std::size_t> dims;

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  NatArray array() {
    NatArray a = NatArray::filled(dims, 0);
    for (auto& x : a.data) x = uniform(0, opts.cell_range);
    return a;
  }

  Box box() {
    Box b{array(), {}};
    b.hi = b.lo;
    for (auto& x : b.hi.data) x += uniform(0, opts.cell_range / 2 + 1);
    return b;
  }

  ProgramList program(std::size_t max_len) {
    for (;;) {
      ProgramList p;
      auto n = static_cast<std::size_t>(uniform(0, max_len));
      for (std::size_t i = 0; i < n; ++i) {
        const char* s = kProgramPool[uniform(0, std::size(kProgramPool) - 1)];
        p.push_back(parse_statement(s, object_sig));
      }
      if (validate_program_list(p, object_sig).ok()) return p;
    }
  }

  // Earlier values of the current trial, so relations between variables
  // (equal boxes, nested boxes) come up often enough to exercise premises.
  std::vector<Value> drawn;

  Value fresh(const std::string& type) {
    if (uniform(0, 9) < 4) {
      std::vector<const Value*> same;
      for (const auto& v : drawn)
        if (type_name(v) == type) same.push_back(&v);
      if (!same.empty()) {
        Value v = *same[uniform(0, same.size() - 1)];
        if (auto* b = std::get_if<Box>(&v); b && uniform(0, 1)) {
          for (std::size_t i = 0; i < b->lo.size(); ++i) {
            b->lo.data[i] = uniform(b->lo.data[i], b->hi.data[i]);
            b->hi.data[i] = uniform(b->lo.data[i], b->hi.data[i]);
          }
        }
        return v;
      }
    }
    return value(type);
  }

  static std::string type_name(const Value& v) {
    switch (v.index()) {
      case 0:
        return "nat";
      case 1:
        return "arr";
      case 2:
        return "box";
      default:
        return std::get<ProgramList>(v).size() == 1 ? "atm" : "prgm";
    }
  }

  Value value(const std::string& type) {
    if (type == "nat") return uniform(0, opts.nat_range);
    if (type == "arr") return array();
    if (type == "box") return box();
    if (type == "atm") return program(1);
    if (type == "prgm") return program(3);
    throw std::invalid_argument("cannot sample type " + type);
  }
};

std::vector<std::pair<Label, std::string>> free_types(const ProgramList& p,
                                                      const AppSignature& sig) {
  std::vector<std::pair<Label, std::string>> r;
  for (Label l : binding_profile(p).free) {
    std::string type;
    for (const auto& ap : p)
      for (std::size_t i = 0; i < ap.x.size() && type.empty(); ++i)
        if (ap.x[i] == l)
          if (auto t = sig.input_type(ap, i)) type = sig.types.at(*t).name;
    if (type.empty())
      throw std::invalid_argument("no type for " + sig.label_text(l));
    r.emplace_back(l, type);
  }
  return r;
}

void record(ProbeStats& s, const Iep& th, const ProgramList& both,
            const ValueAssignment& va, const AppSignature& sig,
            const RuntimeConfig& cfg) {
  ++s.trials;
  if (!execute_program(th.premise, va, sig, cfg).computable()) return;
  ++s.premise_ok;
  if (execute_program(both, va, sig, cfg).computable()) {
    ++s.both_ok;
  } else {
    ++s.violations;
    if (s.counterexamples.size() < 5) s.counterexamples.push_back(va);
  }
}

}  // namespace

std::string ProbeStats::str() const {
  return "trials=" + std::to_string(trials) +
         " premise_ok=" + std::to_string(premise_ok) +
         " both_ok=" + std::to_string(both_ok) +
         " violations=" + std::to_string(violations);
}

ProbeStats soundness_probe(const Iep& theorem, const AppSignature& sig,
                           const RuntimeConfig& cfg, const ProbeOptions& opts) {
  ProgramList both = theorem.premise;
  both.push_back(theorem.conclusion);
  if (auto bad = non_executable(both, sig); !bad.empty())
    throw std::invalid_argument(theorem.label + ": no decision procedure for " +
                                bad);
  auto vars = free_types(theorem.premise, sig);
  const AppSignature& object_sig =
      cfg.object_sig ? *cfg.object_sig : builtin_apps().at("nat").sig;
  Sampler sm{std::mt19937_64(opts.seed), opts, object_sig, {}, {}};

  ProbeStats s;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    sm.dims = {static_cast<std::size_t>(sm.uniform(1, 3))};
    sm.drawn.clear();
    ValueAssignment va;
    for (const auto& [l, type] : vars) {
      va[l] = sm.fresh(type);
      sm.drawn.push_back(va[l]);
    }
    record(s, theorem, both, va, sig, cfg);
  }

  bool all_nat = std::all_of(vars.begin(), vars.end(),
                             [](const auto& v) { return v.second == "nat"; });
  if (opts.exhaustive_max_nat && all_nat && !vars.empty()) {
    std::vector<std::int64_t> cur(vars.size(), 0);
    for (;;) {
      ValueAssignment va;
      for (std::size_t i = 0; i < vars.size(); ++i) va[vars[i].first] = cur[i];
      record(s, theorem, both, va, sig, cfg);
      std::size_t i = 0;
      for (; i < cur.size(); ++i) {
        if (cur[i] < *opts.exhaustive_max_nat) {
          ++cur[i];
          break;
        }
        cur[i] = 0;
      }
      if (i == cur.size()) break;
    }
  }
  return s;
}

}  // namespace pecr

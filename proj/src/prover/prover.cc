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

#include "pecr/prover.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

namespace pecr {
namespace {

using Clock = std::chrono::steady_clock;
using Key = std::pair<std::uint32_t, std::vector<Label>>;

struct Fact {
  AtomicProgram stmt;
  Justification just;  // rule empty for premise lines; clist 1-based
};

class Search {
 public:
  Search(const TheoremStatement& target, const IepStore& store,
         const AppSignature& sig, const ProverConfig& cfg)
      : target_(target),
        store_(store),
        sig_(sig),
        cfg_(cfg),
        start_(Clock::now()) {
    alloc_.reserve(target.premise);
    alloc_.reserve(target.conclusion);
    for (const auto& ap : target.premise) add(ap, {});
  }

  ProveResult run();

 private:
  bool out_of_time() const {
    return std::chrono::duration<double>(Clock::now() - start_).count() >
           cfg_.time_budget;
  }
  bool full() const { return facts_.size() >= cfg_.max_facts; }

  // Returns the index of the fact with the same key, adding it if new.
  std::size_t add(const AtomicProgram& ap, Justification j) {
    Key k{ap.pn, ap.x};
    auto [it, fresh] = index_.emplace(k, facts_.size());
    if (!fresh) return it->second;
    facts_.push_back({ap, std::move(j)});
    list_.push_back(ap);
    alloc_.reserve(ap);
    if (!goal_ && same_up_to_outputs(ap, target_.conclusion) &&
        ap.y.size() == target_.conclusion.y.size())
      goal_ = facts_.size() - 1;
    return it->second;
  }

  bool is_equality(const AtomicProgram& ap) const {
    for (const auto& t : sig_.types)
      if (t.eq == ap.pn) return ap.x.size() == 2 && ap.x[0] != ap.x[1];
    return false;
  }

  void rules(std::size_t lo);
  void schemas(std::size_t lo, std::size_t hi);
  void substitute(std::size_t o, std::size_t e);
  ProveResult emit();

  const TheoremStatement& target_;
  const IepStore& store_;
  const AppSignature& sig_;
  const ProverConfig& cfg_;
  Clock::time_point start_;
  FreshLabelAllocator alloc_;
  std::vector<Fact> facts_;
  ProgramList list_;
  std::map<Key, std::size_t> index_;
  std::optional<std::size_t> goal_;
};

void Search::rules(std::size_t lo) {
  std::vector<const Iep*> order;
  for (const auto& iep : store_.all())
    if (!iep.premise.empty() || lo == 0) order.push_back(&iep);
  if (cfg_.seed) {
    std::mt19937_64 rng(cfg_.seed + lo);
    std::shuffle(order.begin(), order.end(), rng);
  }
  for (const Iep* iep : order) {
    if (goal_ || full() || out_of_time()) return;
    MatchOptions mo;
    mo.min_new_line = lo + 1;
    if (iep->premise.empty()) mo.min_new_line = 0;
    for (const auto& m : match_premise(list_, *iep, sig_, mo)) {
      if (goal_ || full()) return;
      AtomicProgram c = instantiate_conclusion(*iep, m.subst, {});
      // Outputs only get fresh labels when the statement is new.
      if (index_.count({c.pn, c.x})) continue;
      std::vector<Label> ys;
      for (std::size_t j = 0; j < iep->conclusion.y.size(); ++j)
        ys.push_back(alloc_.next());
      c.y = ys;
      add(c, {iep->label, m.clist});
    }
  }
}

void Search::substitute(std::size_t o, std::size_t e) {
  const AtomicProgram orig = facts_[o].stmt;
  const AtomicProgram eq = facts_[e].stmt;
  if (substitution_forbidden(sig_.program(orig.pn).name) ||
      !sig_.program(orig.pn).subst)
    return;
  std::vector<AtomicProgram> images;
  try {
    images = sr1_instances(orig, eq, sig_, alloc_);
  } catch (const SubstitutionError&) {
    return;
  }
  for (const auto& img : images) {
    if (full()) return;
    std::size_t s = add(img, {"sr1", {o + 1, e + 1}});
    const AtomicProgram sub = facts_[s].stmt;
    for (std::size_t j = 0; j < orig.y.size() && s != o; ++j) {
      auto t = sig_.output_type(orig, j);
      if (!t || !sig_.types.at(*t).eq) continue;
      AtomicProgram d{sig_.types.at(*t).eq, {sub.y[j], orig.y[j]}, {}};
      if (check_sr2(orig, eq, sub, d, sig_).empty())
        add(d, {"sr2", {o + 1, e + 1, s + 1}});
    }
  }
}

void Search::schemas(std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi && !goal_ && !full(); ++i)
    for (const auto& ap : iot_instances(facts_[i].stmt, sig_))
      add(ap, {"iot", {i + 1}});
  for (std::size_t i = 0; i < hi && !goal_ && !full(); ++i) {
    if (out_of_time()) return;
    for (std::size_t e = 0; e < hi && !goal_ && !full(); ++e) {
      if (i < lo && e < lo) continue;  // old pair, done before
      if (i == e || !is_equality(facts_[e].stmt)) continue;
      substitute(i, e);
    }
  }
}

ProveResult Search::run() {
  ProveResult r;
  std::size_t lo = 0;
  for (std::size_t g = 1; g <= cfg_.max_depth && !goal_; ++g) {
    std::size_t hi = facts_.size();
    if (hi == lo && g > 1) {
      r.reason = "no new statements";
      break;
    }
    rules(lo);
    schemas(lo, hi);
    lo = hi;
    r.generations = g;
    if (full()) {
      r.reason = "fact limit reached";
      break;
    }
    if (out_of_time()) {
      r.reason = "time budget exhausted";
      break;
    }
  }
  r.facts = facts_.size();
  if (!goal_) {
    if (r.reason.empty()) r.reason = "depth limit reached";
    return r;
  }
  ProveResult e = emit();
  e.facts = r.facts;
  e.generations = r.generations;
  return e;
}

ProveResult Search::emit() {
  std::size_t m = target_.premise.size();
  std::vector<bool> keep(facts_.size(), false);
  for (std::size_t i = 0; i < m; ++i) keep[i] = true;
  std::vector<std::size_t> todo{*goal_};
  while (!todo.empty()) {
    std::size_t i = todo.back();
    todo.pop_back();
    if (keep[i]) continue;
    keep[i] = true;
    for (auto c : facts_[i].just.clist) todo.push_back(c - 1);
  }

  FreshLabelAllocator names(target_.premise);
  names.reserve(target_.conclusion);
  std::map<Label, Label> rename;
  std::vector<std::size_t> line_of(facts_.size(), 0);
  ProofDocument doc;
  doc.label = target_.label;
  doc.statement = target_;
  doc.m = m;
  for (std::size_t i = 0; i < facts_.size(); ++i) {
    if (!keep[i]) continue;
    line_of[i] = doc.lines.size() + 1;
    AtomicProgram ap = facts_[i].stmt;
    if (i >= m) {
      for (auto& x : ap.x)
        if (auto it = rename.find(x); it != rename.end()) x = it->second;
      for (std::size_t j = 0; j < ap.y.size(); ++j) {
        Label n = i == *goal_ ? target_.conclusion.y[j] : names.next();
        rename[ap.y[j]] = n;
        ap.y[j] = n;
      }
      Justification j = facts_[i].just;
      for (auto& c : j.clist) c = line_of[c - 1];
      doc.lines.push_back({ap, j});
    } else {
      doc.lines.push_back({ap, std::nullopt});
    }
  }

  ProveResult r;
  CheckResult cr = check_proof(doc, store_, sig_);
  if (!cr.accepted) {
    r.status = ProveStatus::kFailed;
    r.reason = "derivation found but rejected: " +
               (cr.errors.empty() ? std::string("?") : cr.errors.front());
    return r;
  }
  r.status = ProveStatus::kProved;
  r.proof = std::move(doc);
  return r;
}

}  // namespace

ProveResult prove(const TheoremStatement& target, const IepStore& store,
                  const AppSignature& sig, const ProverConfig& cfg) {
  Search s(target, store, sig, cfg);
  return s.run();
}

}  // namespace pecr

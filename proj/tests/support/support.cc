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

#include "support/support.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pecr/binding.h"
#include "pecr/text.h"
#include "pecr/validate.h"

#ifndef PECR_DATA_DIR
#error "PECR_DATA_DIR must be defined"
#endif

namespace pecr::testing {

std::string data_path(const std::string& rel) {
  return std::string(PECR_DATA_DIR) + "/" + rel;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Rows> read_blocks(const std::string& path, std::uint32_t nvar) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Rows> blocks(1);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty() && t[0] == '#') continue;
    if (t.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    std::replace(t.begin(), t.end(), '[', ' ');
    std::replace(t.begin(), t.end(), ']', ' ');
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream ss(t);
    std::vector<std::int64_t> row;
    std::string tok;
    while (ss >> tok) {
      if (tok.back() == '*')
        row.push_back(nvar + std::stoll(tok.substr(0, tok.size() - 1)));
      else
        row.push_back(std::stoll(tok));
    }
    if (!row.empty()) blocks.back().push_back(std::move(row));
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

Rows read_rows(const std::string& path, std::uint32_t nvar) {
  Rows all;
  for (auto& b : read_blocks(path, nvar))
    all.insert(all.end(), b.begin(), b.end());
  return all;
}

Rows to_rows(const IntMatrix& m) { return to_rows_any(m); }

std::vector<std::string> corpus_files(const std::string& pack) {
  std::vector<std::pair<int, std::string>> found;
  for (const auto& e :
       std::filesystem::directory_iterator(data_path("corpus/" + pack))) {
    std::string stem = e.path().stem().string();
    if (e.path().extension() != ".proof" || stem.rfind("thm", 0) != 0) continue;
    found.emplace_back(std::stoi(stem.substr(3)), e.path().string());
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

CheckedCorpus check_corpus(const Application& app, const std::string& pack) {
  CheckedCorpus c;
  IepStore store = app.axioms;
  for (const auto& f : corpus_files(pack)) {
    ProofDocument d = parse_proof(read_file(f), app.sig);
    c.before.push_back(store);
    CheckResult r = check_proof(d, store, app.sig);
    if (r.accepted) store.add(*r.theorem);
    c.docs.emplace_back(f, std::move(d));
    c.results.push_back(std::move(r));
  }
  return c;
}

AppSignature random_signature() {
  AppSignature sig;
  sig.name = "rand";
  sig.mach.mlst = {9, 64, 3, 1};
  std::uint32_t t = sig.add_type("t");
  for (std::size_t nx = 0; nx <= 3; ++nx)
    for (std::size_t ny = 0; ny <= 1; ++ny) {
      ProgramDecl d;
      d.name = "g" + std::to_string(nx) + std::to_string(ny);
      d.in_types.assign(nx, t);
      d.out_types.assign(ny, t);
      d.subst = true;
      sig.add_program(d);
    }
  sig.add_constant({"ka", "0", t});
  sig.add_constant({"kb", "1", t});
  return sig;
}

namespace {

constexpr std::uint32_t kVarSpace = 60;

Label fresh_var(std::mt19937_64& rng, std::set<std::uint32_t>& used) {
  std::uniform_int_distribution<std::uint32_t> d(1, kVarSpace);
  for (;;) {
    std::uint32_t id = d(rng);
    if (used.insert(id).second) return Label::variable(id);
  }
}

bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

ProgramList relabel(const ProgramList& p, const std::map<Label, Label>& m) {
  auto f = [&](Label l) {
    auto it = m.find(l);
    return it == m.end() ? l : it->second;
  };
  ProgramList q = p;
  for (auto& ap : q) {
    for (auto& l : ap.x) l = f(l);
    for (auto& l : ap.y) l = f(l);
  }
  return q;
}

std::vector<Label> input_only_vars(const ProgramList& p) {
  BindingProfile b = binding_profile(p);
  std::vector<Label> r;
  for (Label l : b.free) r.push_back(l);
  return r;
}

}  // namespace

ProgramList random_program(std::mt19937_64& rng, const AppSignature& sig,
                           const ProgramShape& shape,
                           const std::vector<std::uint32_t>& pns) {
  std::size_t n = pns.empty() ? std::uniform_int_distribution<std::size_t>(
                                    0, shape.max_len)(rng)
                              : pns.size();
  std::set<std::uint32_t> used;
  std::vector<Label> pool;
  ProgramList p;
  for (std::size_t m = 0; m < n; ++m) {
    AtomicProgram ap;
    ap.pn = pns.empty() ? std::uniform_int_distribution<std::uint32_t>(
                              1, sig.programs.size())(rng)
                        : pns[m];
    const ProgramDecl& d = sig.program(ap.pn);
    for (std::size_t i = 0; i < d.in_types.size(); ++i) {
      Label l;
      if (!pool.empty() && chance(rng, shape.reuse)) {
        l = pick(rng, pool);
      } else if (!sig.constants.empty() && chance(rng, shape.constant)) {
        l = Label::constant(std::uniform_int_distribution<std::uint32_t>(
            1, sig.constants.size())(rng));
      } else {
        l = fresh_var(rng, used);
      }
      ap.x.push_back(l);
      if (l.is_variable() &&
          std::find(pool.begin(), pool.end(), l) == pool.end())
        pool.push_back(l);
    }
    for (std::size_t j = 0; j < d.out_types.size(); ++j)
      ap.y.push_back(fresh_var(rng, used));
    for (Label l : ap.y) pool.push_back(l);
    p.push_back(std::move(ap));
  }
  ValidationReport r = validate_program_list(p, sig);
  if (!r.ok()) throw std::logic_error("random_program produced " + r.str());
  return p;
}

std::vector<std::string> ioeq_pair_kinds() {
  return {"rename",  "merge",       "constant", "split",
          "perturb", "independent", "reshape"};
}

IoeqPair make_ioeq_pair(std::mt19937_64& rng, const AppSignature& sig,
                        const std::string& kind) {
  ProgramShape shape;
  shape.max_len = 6;
  IoeqPair r{kind, {}, random_program(rng, sig, shape)};
  const ProgramList& p = r.p;
  std::set<std::uint32_t> used;
  for (const auto& ap : p)
    for (Label l : io_labels(ap))
      if (l.is_variable()) used.insert(l.index());

  if (kind == "rename") {
    std::set<std::uint32_t> taken;
    std::map<Label, Label> m;
    for (std::uint32_t id : used)
      m[Label::variable(id)] = fresh_var(rng, taken);
    r.q = relabel(p, m);
  } else if (kind == "merge") {
    std::vector<Label> v = input_only_vars(p);
    if (v.size() >= 2) {
      std::shuffle(v.begin(), v.end(), rng);
      r.q = relabel(p, {{v[1], v[0]}});
    } else if (!v.empty()) {
      r.q = relabel(p, {{v[0], Label::constant(1)}});
    } else {
      r.q = p;
    }
  } else if (kind == "constant") {
    std::vector<Label> v = input_only_vars(p);
    r.q = v.empty() ? p
                    : relabel(p, {{pick(rng, v),
                                   Label::constant(chance(rng, 0.5) ? 1 : 2)}});
  } else if (kind == "split") {
    // Replace one occurrence of a repeated input by a new variable.
    std::map<Label, int> count;
    for (const auto& ap : p)
      for (Label l : io_labels(ap)) ++count[l];
    std::vector<std::pair<std::size_t, std::size_t>> sites;
    for (std::size_t m = 0; m < p.size(); ++m)
      for (std::size_t i = 0; i < p[m].x.size(); ++i)
        if (count[p[m].x[i]] > 1 || p[m].x[i].is_constant())
          sites.emplace_back(m, i);
    r.q = p;
    if (!sites.empty()) {
      auto [m, i] = pick(rng, sites);
      r.q[m].x[i] = fresh_var(rng, used);
    }
  } else if (kind == "perturb") {
    r.q = p;
    std::vector<std::pair<std::size_t, std::size_t>> sites;
    std::vector<Label> labels;
    for (std::size_t m = 0; m < p.size(); ++m) {
      for (std::size_t i = 0; i < p[m].x.size(); ++i) sites.emplace_back(m, i);
      for (Label l : io_labels(p[m])) labels.push_back(l);
    }
    if (!sites.empty()) {
      auto [m, i] = pick(rng, sites);
      int c = std::uniform_int_distribution<int>(0, 2)(rng);
      r.q[m].x[i] = c == 0   ? pick(rng, labels)
                    : c == 1 ? Label::constant(1)
                             : fresh_var(rng, used);
    }
  } else if (kind == "independent") {
    std::vector<std::uint32_t> pns;
    for (const auto& ap : p) pns.push_back(ap.pn);
    r.q = random_program(rng, sig, shape, pns);
  } else if (kind == "reshape") {
    r.q = p;
    if (!r.q.empty() && (r.q.size() >= 6 || chance(rng, 0.5))) {
      r.q.pop_back();
    } else {
      AtomicProgram ap;
      ap.pn = sig.find_program("g10").value();
      ap.x = {Label::constant(1)};
      r.q.push_back(ap);
    }
  } else {
    throw std::invalid_argument("unknown pair kind " + kind);
  }
  return r;
}

namespace {

void sync_statement(ProofDocument& d) {
  if (!d.statement || d.lines.empty()) return;
  d.statement->premise.clear();
  for (std::size_t i = 0; i < d.m && i < d.lines.size(); ++i)
    d.statement->premise.push_back(d.lines[i].stmt);
  d.statement->conclusion = d.lines.back().stmt;
}

std::vector<std::size_t> derived_lines(const ProofDocument& d) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < d.lines.size(); ++i)
    if (d.lines[i].just) r.push_back(i);
  return r;
}

}  // namespace

std::vector<Mutation> mutate(const ProofDocument& doc,
                             const AppSignature& sig) {
  std::vector<Mutation> out;
  auto emit = [&](std::string kind, ProofDocument d) {
    sync_statement(d);
    out.push_back({std::move(kind), std::move(d)});
  };
  const std::vector<std::size_t> derived = derived_lines(doc);
  auto stmt = [&](std::size_t line) -> const AtomicProgram& {
    return doc.lines[line - 1].stmt;
  };

  // Swap two clist entries whose statements have different program names.
  // Entries with the same name can trade roles legitimately (an sr1 step
  // with two equivalences of one type reads either way).
  for (auto it = derived.rbegin(); it != derived.rend(); ++it) {
    const auto& cl = doc.lines[*it].just->clist;
    bool done = false;
    for (std::size_t a = 0; a < cl.size() && !done; ++a)
      for (std::size_t b = a + 1; b < cl.size() && !done; ++b)
        if (stmt(cl[a]).pn != stmt(cl[b]).pn) {
          ProofDocument d = doc;
          std::swap(d.lines[*it].just->clist[a], d.lines[*it].just->clist[b]);
          emit("clist swap", std::move(d));
          done = true;
        }
    if (done) break;
  }

  // Point one clist entry at an earlier line with another program name.
  for (auto it = derived.rbegin(); it != derived.rend(); ++it) {
    const auto& cl = doc.lines[*it].just->clist;
    bool done = false;
    for (std::size_t a = 0; a < cl.size() && !done; ++a)
      for (std::size_t t = 1; t <= *it && !done; ++t)
        if (stmt(t).pn != stmt(cl[a]).pn) {
          ProofDocument d = doc;
          d.lines[*it].just->clist[a] = t;
          emit("clist retarget", std::move(d));
          done = true;
        }
    if (done) break;
  }

  // Give a derived output the name of an earlier label.
  for (std::size_t i : derived) {
    if (doc.lines[i].stmt.y.empty()) continue;
    std::optional<Label> earlier;
    for (std::size_t k = 0; k < i && !earlier; ++k)
      for (Label l : io_labels(doc.lines[k].stmt))
        if (l.is_variable()) {
          earlier = l;
          break;
        }
    if (!earlier) continue;
    ProofDocument d = doc;
    d.lines[i].stmt.y[0] = *earlier;
    emit("output clash", std::move(d));
    break;
  }

  // Rename the program of the first derived line.
  if (!derived.empty()) {
    const AtomicProgram& s = doc.lines[derived.front()].stmt;
    for (std::uint32_t pn = 1; pn <= sig.programs.size(); ++pn) {
      const ProgramDecl& decl = sig.program(pn);
      if (pn == s.pn || decl.in_types.size() != s.x.size() ||
          decl.out_types.size() != s.y.size())
        continue;
      ProofDocument d = doc;
      d.lines[derived.front()].stmt.pn = pn;
      emit("program name", std::move(d));
      break;
    }
  }

  // Drop the first premise line; references to it move to the next line.
  if (doc.m >= 1) {
    ProofDocument d = doc;
    d.lines.erase(d.lines.begin());
    d.m -= 1;
    for (auto& l : d.lines)
      if (l.just)
        for (auto& c : l.just->clist) c = c > 1 ? c - 1 : 1;
    emit("premise drop", std::move(d));
  }

  // Replace a conclusion input by an unused variable.
  if (!doc.lines.empty() && !doc.lines.back().stmt.x.empty()) {
    FreshLabelAllocator alloc(doc.statements());
    ProofDocument d = doc;
    d.lines.back().stmt.x[0] = alloc.next();
    emit("conclusion input", std::move(d));
  }
  return out;
}

}  // namespace pecr::testing

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

#include "pecr/kernel.h"

#include <algorithm>
#include <functional>

#include "pecr/binding.h"

namespace pecr {

void IepStore::add(Iep iep) {
  if (is_schema_label(iep.label))
    throw std::invalid_argument("reserved rule label " + iep.label);
  if (index_.count(iep.label))
    throw std::invalid_argument("duplicate rule label " + iep.label);
  index_[iep.label] = ieps_.size();
  ieps_.push_back(std::move(iep));
}

const Iep* IepStore::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? nullptr : &ieps_[it->second];
}

Label Substitution::apply(Label l) const {
  if (!l.is_variable()) return l;
  auto it = map.find(l);
  return it == map.end() ? l : it->second;
}

void FreshLabelAllocator::reserve(Label l) {
  if (!l.is_variable()) return;
  used_.insert(l.index());
  while (used_.count(floor_)) ++floor_;
}

void FreshLabelAllocator::reserve(const AtomicProgram& ap) {
  for (const auto& l : ap.x) reserve(l);
  for (const auto& l : ap.y) reserve(l);
}

void FreshLabelAllocator::reserve(const ProgramList& p) {
  for (const auto& ap : p) reserve(ap);
}

bool FreshLabelAllocator::used(Label l) const {
  return l.is_variable() && used_.count(l.index());
}

Label FreshLabelAllocator::next() {
  Label l = Label::variable(floor_);
  reserve(l);
  return l;
}

ValidationReport check_extension_structure(const ProgramList& p,
                                           const AtomicProgram& c,
                                           const AppSignature& sig) {
  ValidationReport r;
  ProgramList full = p;
  full.push_back(c);
  r.merge(validate_program_list(full, sig));
  auto prof = binding_profile(p);
  auto known = concat_lists(prof.inp, prof.outp);
  for (const auto& l : c.x) {
    if (l.is_variable() && !contains(known, l))
      r.add(p.size() + 1, "new input variable",
            "input " + sig.label_text(l) + " not in premise I/O or cst");
  }
  return r;
}

ValidationReport check_iep(const Iep& iep, const AppSignature& sig) {
  auto r = check_extension_structure(iep.premise, iep.conclusion, sig);
  if (iep.premise.size() > sig.mach.mlst.nprem)
    r.add(0, "premise exceeds nprem", iep.label);
  return r;
}

ProgramList extract(const ProgramList& proof,
                    const std::vector<std::size_t>& clist) {
  ProgramList r;
  for (auto i : clist) {
    if (i == 0 || i > proof.size())
      throw std::out_of_range("connection list entry " + std::to_string(i));
    r.push_back(proof[i - 1]);
  }
  return r;
}

std::vector<MatchResult> match_premise(const ProgramList& proof, const Iep& iep,
                                       const AppSignature& sig,
                                       const MatchOptions& opts) {
  (void)sig;
  std::vector<MatchResult> out;
  const auto& prem = iep.premise;
  if (prem.empty()) {
    if (opts.min_new_line == 0) out.push_back({});
    return out;
  }
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_pn;
  for (std::size_t i = 0; i < proof.size(); ++i)
    by_pn[proof[i].pn].push_back(i + 1);

  std::vector<std::size_t> clist;
  std::map<Label, Label> map;
  std::size_t newest = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (out.size() >= opts.limit) return;
    if (i == prem.size()) {
      if (opts.min_new_line == 0 || newest >= opts.min_new_line)
        out.push_back({clist, Substitution{map}});
      return;
    }
    auto it = by_pn.find(prem[i].pn);
    if (it == by_pn.end()) return;
    // With no new line chosen yet, the remaining items must supply one.
    for (auto line : it->second) {
      const auto& target = proof[line - 1];
      if (target.x.size() != prem[i].x.size() ||
          target.y.size() != prem[i].y.size())
        continue;
      std::vector<Label> added;
      bool ok = true;
      auto bind = [&](Label from, Label to) {
        if (!ok) return;
        if (from.is_constant()) {
          ok = from == to;
          return;
        }
        auto f = map.find(from);
        if (f != map.end()) {
          ok = f->second == to;
        } else {
          map.emplace(from, to);
          added.push_back(from);
        }
      };
      for (std::size_t k = 0; k < target.x.size(); ++k)
        bind(prem[i].x[k], target.x[k]);
      for (std::size_t k = 0; k < target.y.size(); ++k)
        bind(prem[i].y[k], target.y[k]);
      if (ok) {
        auto saved = newest;
        newest = std::max(newest, line);
        clist.push_back(line);
        dfs(i + 1);
        clist.pop_back();
        newest = saved;
      }
      for (const auto& a : added) map.erase(a);
      if (out.size() >= opts.limit) return;
    }
  };
  dfs(0);
  return out;
}

AtomicProgram instantiate_conclusion(const Iep& iep, const Substitution& s,
                                     std::vector<Label> outputs) {
  AtomicProgram c;
  c.pn = iep.conclusion.pn;
  for (const auto& l : iep.conclusion.x) c.x.push_back(s.apply(l));
  c.y = std::move(outputs);
  return c;
}

AtomicProgram apply_iep(const ProgramList& proof, const Iep& iep,
                        const MatchResult& m, FreshLabelAllocator& alloc,
                        const AppSignature& sig) {
  if (proof.size() >= sig.mach.mlst.npmax)
    throw CapacityError("proof already holds npmax statements");
  alloc.reserve(proof);
  std::vector<Label> ys;
  for (std::size_t j = 0; j < iep.conclusion.y.size(); ++j)
    ys.push_back(alloc.next());
  return instantiate_conclusion(iep, m.subst, std::move(ys));
}

std::vector<AtomicProgram> iot_instances(const AtomicProgram& stmt,
                                         const AppSignature& sig,
                                         ValidationReport* skipped) {
  std::vector<AtomicProgram> out;
  auto visit = [&](Label l, std::optional<std::uint32_t> t) {
    if (!t) return;
    auto checker = sig.types[*t].checker;
    if (!checker) {
      if (skipped)
        skipped->add(0, "no type checker",
                     "type " + sig.types[*t].name + " of " + sig.label_text(l));
      return;
    }
    AtomicProgram ap{checker, {l}, {}};
    if (!contains(out, ap)) out.push_back(std::move(ap));
  };
  for (std::size_t i = 0; i < stmt.x.size(); ++i)
    visit(stmt.x[i], sig.input_type(stmt, i));
  for (std::size_t j = 0; j < stmt.y.size(); ++j)
    visit(stmt.y[j], sig.output_type(stmt, j));
  return out;
}

namespace {

bool is_equality_pn(std::uint32_t pn, const AppSignature& sig) {
  for (const auto& t : sig.types)
    if (t.eq == pn) return true;
  return false;
}

EqualityKind equality_kind(std::uint32_t pn, const AppSignature& sig) {
  for (const auto& t : sig.types)
    if (t.eq == pn) return t.eq_kind;
  return EqualityKind::kEquality;
}

bool slot_takes(const AtomicProgram& ap, std::size_t k, std::uint32_t eq_pn,
                const AppSignature& sig) {
  auto t = sig.input_type(ap, k);
  return t && sig.types[*t].eq == eq_pn;
}

// Empty when new_x is orig.x rewritten in at most one slot by `eq`.
std::string rewrite_error(const AtomicProgram& orig, const AtomicProgram& eq,
                          const std::vector<Label>& new_x,
                          const AppSignature& sig) {
  if (orig.pn == 0 || orig.pn > sig.programs.size()) return "unknown pn";
  if (!sig.program(orig.pn).subst)
    return "ineligible pn " + sig.program(orig.pn).name;
  if (eq.x.size() != 2 || !eq.y.empty() || !is_equality_pn(eq.pn, sig))
    return "cited equality is not a registered eqX statement";
  if (new_x.size() != orig.x.size()) return "arity differs";
  std::vector<std::size_t> diff;
  for (std::size_t k = 0; k < new_x.size(); ++k)
    if (new_x[k] != orig.x[k]) diff.push_back(k);
  if (diff.size() > 1) return "more than one differing slot";
  if (diff.size() == 1) {
    auto k = diff[0];
    if (!slot_takes(orig, k, eq.pn, sig)) return "eqX type mismatch";
    bool fwd = eq.x[0] == orig.x[k] && eq.x[1] == new_x[k];
    bool bwd = eq.x[1] == orig.x[k] && eq.x[0] == new_x[k];
    if (!fwd && !bwd) return "equality does not relate the rewritten slot";
    return "";
  }
  if (eq.x[0] != eq.x[1]) return "no slot rewritten by a proper equality";
  for (std::size_t k = 0; k < orig.x.size(); ++k)
    if (orig.x[k] == eq.x[0] && slot_takes(orig, k, eq.pn, sig)) return "";
  return "identity equality matches no slot";
}

}  // namespace

std::vector<AtomicProgram> sr1_instances(const AtomicProgram& original,
                                         const AtomicProgram& equality,
                                         const AppSignature& sig,
                                         FreshLabelAllocator& alloc) {
  std::vector<AtomicProgram> out;
  if (original.pn == 0 || original.pn > sig.programs.size() ||
      !sig.program(original.pn).subst || equality.x.size() != 2 ||
      !equality.y.empty() || !is_equality_pn(equality.pn, sig))
    return out;
  std::vector<std::vector<Label>> xs;
  for (int dir = 0; dir < 2; ++dir) {
    Label from = equality.x[dir], to = equality.x[1 - dir];
    for (std::size_t k = 0; k < original.x.size(); ++k) {
      if (original.x[k] != from || !slot_takes(original, k, equality.pn, sig))
        continue;
      auto x = original.x;
      x[k] = to;
      if (!contains(xs, x)) xs.push_back(std::move(x));
    }
  }
  for (auto& x : xs) {
    AtomicProgram ap{original.pn, std::move(x), {}};
    for (std::size_t j = 0; j < original.y.size(); ++j)
      ap.y.push_back(alloc.next());
    out.push_back(std::move(ap));
  }
  return out;
}

AtomicProgram substitution_instance(const AtomicProgram& original,
                                    const AtomicProgram& equality,
                                    const AtomicProgram* substituted,
                                    const AppSignature& sig,
                                    FreshLabelAllocator& alloc,
                                    std::size_t output_index) {
  if (!substituted) {
    FreshLabelAllocator probe = alloc;
    auto all = sr1_instances(original, equality, sig, probe);
    if (all.empty()) {
      auto e = rewrite_error(original, equality, original.x, sig);
      if (e.empty() || e.find("slot") != std::string::npos)
        e = "eqX type mismatch: no slot holds an equated label";
      throw SubstitutionError(e);
    }
    AtomicProgram r = all.front();
    r.y.clear();
    for (std::size_t j = 0; j < original.y.size(); ++j)
      r.y.push_back(alloc.next());
    return r;
  }
  if (substituted->pn != original.pn)
    throw SubstitutionError("substituted statement has a different pn");
  auto e = rewrite_error(original, equality, substituted->x, sig);
  if (!e.empty()) throw SubstitutionError(e);
  if (output_index >= original.y.size() ||
      output_index >= substituted->y.size())
    throw SubstitutionError("no output pair to equate");
  auto t = sig.output_type(original, output_index);
  if (!t || !sig.types[*t].eq)
    throw SubstitutionError("output type has no registered equality");
  if (sig.types[*t].eq_kind != equality_kind(equality.pn, sig))
    throw SubstitutionError("equality and equivalence mixed");
  return AtomicProgram{sig.types[*t].eq,
                       {substituted->y[output_index], original.y[output_index]},
                       {}};
}

std::string check_sr1(const AtomicProgram& original,
                      const AtomicProgram& equality,
                      const AtomicProgram& derived, const AppSignature& sig) {
  if (derived.pn != original.pn) return "sr1 conclusion changes the pn";
  if (derived.y.size() != original.y.size()) return "sr1 output arity differs";
  return rewrite_error(original, equality, derived.x, sig);
}

std::string check_sr2(const AtomicProgram& original,
                      const AtomicProgram& equality,
                      const AtomicProgram& substituted,
                      const AtomicProgram& derived, const AppSignature& sig) {
  if (substituted.pn != original.pn)
    return "sr2 substituted statement has a different pn";
  if (substituted.y.size() != original.y.size())
    return "sr2 output arity differs";
  auto e = rewrite_error(original, equality, substituted.x, sig);
  if (!e.empty()) return e;
  if (original.y.empty()) return "sr2 needs outputs to equate";
  for (std::size_t j = 0; j < original.y.size(); ++j) {
    auto t = sig.output_type(original, j);
    if (!t || !sig.types[*t].eq) continue;
    AtomicProgram want{sig.types[*t].eq, {substituted.y[j], original.y[j]}, {}};
    if (derived == want) {
      if (sig.types[*t].eq_kind != equality_kind(equality.pn, sig))
        return "equality and equivalence mixed";
      return "";
    }
  }
  return "sr2 conclusion is not eqY [y' y] for any output pair";
}

namespace {

std::optional<std::uint32_t> label_type(const ProgramList& p, Label l,
                                        const AppSignature& sig) {
  for (const auto& ap : p) {
    for (std::size_t i = 0; i < ap.x.size(); ++i)
      if (ap.x[i] == l) return sig.input_type(ap, i);
    for (std::size_t j = 0; j < ap.y.size(); ++j)
      if (ap.y[j] == l) return sig.output_type(ap, j);
  }
  return std::nullopt;
}

CompositeDescriptor make_composite(const ProgramList& a,
                                   std::vector<ProgramList> operands,
                                   ProgramKind kind, std::string name,
                                   const AppSignature& sig) {
  auto prof = binding_profile(a);
  CompositeDescriptor d;
  d.decl.name = name;
  d.decl.kind = kind;
  for (const auto& l : prof.free) {
    auto t = label_type(a, l, sig);
    if (!t) throw std::invalid_argument("untyped label in operand");
    d.decl.in_types.push_back(*t);
  }
  for (const auto& l : prof.pol) {
    auto t = label_type(a, l, sig);
    if (!t) throw std::invalid_argument("untyped label in operand");
    d.decl.out_types.push_back(*t);
  }
  d.head.pn = sig.find_program(name).value_or(0);
  d.head.x = prof.free;
  d.head.y = prof.pol;
  d.decl.head = d.head;
  d.decl.operands = std::move(operands);
  return d;
}

}  // namespace

CompositeDescriptor build_disjunction(const ProgramList& a,
                                      const ProgramList& b, std::string name,
                                      const AppSignature& sig) {
  auto pa = binding_profile(a), pb = binding_profile(b);
  if (!sublist_check(pa.free, pb.free).equivlst)
    throw std::invalid_argument(
        "disjunction operands have different free "
        "variables");
  if (!sublist_check(pa.pol, pb.pol).equivlst)
    throw std::invalid_argument(
        "disjunction operands have different primary "
        "outputs");
  if (!validate_program_list(a, sig).ok() ||
      !validate_program_list(b, sig).ok())
    throw std::invalid_argument("disjunction operand is not a valid program");
  return make_composite(a, {a, b}, ProgramKind::kDsj, std::move(name), sig);
}

CompositeDescriptor build_conjunction(const AtomicProgram& a,
                                      const AtomicProgram& b, std::string name,
                                      const AppSignature& sig) {
  ProgramList s{a, b};
  auto r = validate_program_list(s, sig);
  if (!r.ok()) throw std::invalid_argument("conjunction operands: " + r.str());
  return make_composite(s, {s}, ProgramKind::kCnj, std::move(name), sig);
}

ReducibilityReport find_reducibility(const Iep& theorem, const IepStore& store,
                                     const AppSignature& sig,
                                     std::size_t bound) {
  ReducibilityReport rep;
  const auto& prem = theorem.premise;
  if (prem.size() > bound) return rep;
  rep.checked = true;
  const auto& goal = theorem.conclusion;
  auto strict = [&](const std::vector<std::size_t>& used) {
    std::set<std::size_t> s(used.begin(), used.end());
    return s.size() < prem.size();
  };
  auto note = [&](const std::string& label,
                  const std::vector<std::size_t>& clist) {
    std::string w = label + " [";
    for (std::size_t i = 0; i < clist.size(); ++i)
      w += (i ? " " : "") + std::to_string(clist[i]);
    rep.witnesses.push_back(w + "]");
  };
  for (const auto& e : store.all()) {
    if (e.conclusion.pn != goal.pn) continue;
    MatchOptions opts;
    opts.limit = 4096;
    for (const auto& m : match_premise(prem, e, sig, opts)) {
      if (!strict(m.clist)) continue;
      if (same_up_to_outputs(instantiate_conclusion(e, m.subst, goal.y), goal))
        note(e.label, m.clist);
    }
  }
  if (prem.size() > 1) {
    for (std::size_t i = 0; i < prem.size(); ++i)
      if (contains(iot_instances(prem[i], sig), goal)) note("iot", {i + 1});
  }
  for (std::size_t i = 0; i < prem.size(); ++i) {
    for (std::size_t k = 0; k < prem.size(); ++k) {
      if (!strict({i + 1, k + 1})) continue;
      if (check_sr1(prem[i], prem[k], goal, sig).empty() &&
          goal.y.empty() == prem[i].y.empty())
        note("sr1", {i + 1, k + 1});
      for (std::size_t s = 0; s < prem.size(); ++s) {
        if (!strict({i + 1, k + 1, s + 1})) continue;
        if (check_sr2(prem[i], prem[k], prem[s], goal, sig).empty())
          note("sr2", {i + 1, k + 1, s + 1});
      }
    }
  }
  return rep;
}

}  // namespace pecr

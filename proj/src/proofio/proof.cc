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

#include "pecr/proof.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "pecr/text.h"
#include "pecr/validate.h"

namespace pecr {
namespace {

struct SourceLine {
  std::size_t number;
  std::string text;
};

std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> r;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto s = strip_comment(raw);
    if (!s.empty()) r.push_back({n, s});
  }
  return r;
}

bool is_separator(const std::string& s) {
  return s.size() >= 3 && s.find_first_not_of('-') == std::string::npos;
}

bool starts_with_word(const std::string& s, const char* w) {
  std::istringstream in(s);
  std::string first;
  in >> first;
  return first == w;
}

std::string second_word(const std::string& s) {
  std::istringstream in(s);
  std::string a, b;
  in >> a >> b;
  return b;
}

// Reads a theorem block from lines[pos]; stops before "proof" or at end.
TheoremStatement read_theorem(const std::vector<SourceLine>& lines,
                              std::size_t& pos, const AppSignature& sig) {
  TheoremStatement t;
  if (pos < lines.size() && starts_with_word(lines[pos].text, "theorem")) {
    t.label = second_word(lines[pos].text);
    ++pos;
  }
  bool after = false;
  bool have_conclusion = false;
  for (; pos < lines.size(); ++pos) {
    const auto& [n, s] = lines[pos];
    if (starts_with_word(s, "proof")) break;
    if (is_separator(s)) {
      if (after) throw ParseError(n, "second separator");
      after = true;
      continue;
    }
    auto ap = parse_statement(s, sig, n);
    if (!after) {
      t.premise.push_back(std::move(ap));
    } else {
      if (have_conclusion) throw ParseError(n, "more than one conclusion");
      t.conclusion = std::move(ap);
      have_conclusion = true;
    }
  }
  if (!have_conclusion) throw ParseError(0, "theorem has no conclusion");
  return t;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string r = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    r += (i ? " " : "") + std::to_string(v[i]);
  return r + "]";
}

}  // namespace

ProgramList ProofDocument::statements() const {
  ProgramList p;
  for (const auto& l : lines) p.push_back(l.stmt);
  return p;
}

TheoremStatement parse_theorem(std::string_view text, const AppSignature& sig) {
  auto lines = significant_lines(text);
  std::size_t pos = 0;
  auto t = read_theorem(lines, pos, sig);
  if (pos != lines.size())
    throw ParseError(lines[pos].number, "unexpected proof section");
  return t;
}

std::string print_theorem(const TheoremStatement& t, const AppSignature& sig) {
  std::ostringstream os;
  if (!t.label.empty()) os << "theorem " << t.label << "\n";
  for (const auto& ap : t.premise) os << sig.render(ap) << "\n";
  os << "-----\n" << sig.render(t.conclusion) << "\n";
  return os.str();
}

ProofDocument parse_proof(std::string_view text, const AppSignature& sig) {
  auto lines = significant_lines(text);
  ProofDocument doc;
  std::size_t pos = 0;
  if (pos < lines.size() && !starts_with_word(lines[pos].text, "proof") &&
      !std::isdigit(static_cast<unsigned char>(lines[pos].text[0]))) {
    doc.statement = read_theorem(lines, pos, sig);
    doc.label = doc.statement->label;
  }
  if (pos < lines.size() && starts_with_word(lines[pos].text, "proof")) {
    auto l = second_word(lines[pos].text);
    if (!l.empty()) {
      if (!doc.label.empty() && doc.label != l)
        throw ParseError(
            lines[pos].number,
            "proof label " + l + " differs from theorem " + doc.label);
      doc.label = l;
    }
    ++pos;
  }
  bool derived_seen = false;
  for (; pos < lines.size(); ++pos) {
    const auto& [n, s] = lines[pos];
    auto tok = tokenize(s);
    std::size_t expect = doc.lines.size() + 1;
    if (tok.empty() || tok[0] != std::to_string(expect))
      throw ParseError(n, "expected line number " + std::to_string(expect));
    std::size_t p = 1;
    ProofLine pl;
    pl.stmt = parse_statement_tokens(tok, p, sig, n);
    if (p < tok.size()) {
      Justification j;
      j.rule = tok[p++];
      j.clist = parse_index_list(tok, p, n);
      if (p != tok.size()) throw ParseError(n, "trailing tokens");
      for (auto c : j.clist) {
        if (c == 0) throw ParseError(n, "clist entries start at 1");
        if (c >= expect)
          throw ParseError(n, "clist references line >= current");
      }
      pl.just = std::move(j);
      derived_seen = true;
    } else {
      if (derived_seen)
        throw ParseError(n, "premise line after a derived line");
      ++doc.m;
    }
    doc.lines.push_back(std::move(pl));
  }
  if (doc.lines.empty()) throw ParseError(0, "proof has no lines");
  return doc;
}

std::string print_proof(const ProofDocument& doc, const AppSignature& sig) {
  std::ostringstream os;
  if (doc.statement) os << print_theorem(*doc.statement, sig);
  os << "proof";
  if (!doc.label.empty()) os << " " << doc.label;
  os << "\n";
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    const auto& l = doc.lines[i];
    os << (i + 1) << " " << sig.render(l.stmt);
    if (l.just) os << " " << l.just->rule << " " << join_indices(l.just->clist);
    os << "\n";
  }
  return os.str();
}

std::string CheckResult::str() const {
  std::ostringstream os;
  os << (accepted ? "accepted" : "rejected");
  if (theorem) os << " " << theorem->label;
  os << "\n";
  for (const auto& e : errors) os << "  error: " << e << "\n";
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  return os.str();
}

namespace {

// Empty when line i (1-based) is justified.
std::string check_line(const ProgramList& stmts, std::size_t i,
                       const Justification& j, const IepStore& store,
                       const AppSignature& sig) {
  const auto& stmt = stmts[i - 1];
  auto cited = [&](std::size_t k) -> const AtomicProgram& {
    return stmts[j.clist[k] - 1];
  };
  auto want = [&](std::size_t n) {
    return j.clist.size() == n
               ? std::string()
               : j.rule + " cites " + std::to_string(n) + " lines, got " +
                     std::to_string(j.clist.size());
  };
  if (j.rule == "iot") {
    if (auto e = want(1); !e.empty()) return e;
    if (!contains(iot_instances(cited(0), sig), stmt))
      return "not a type-check instance of line " + std::to_string(j.clist[0]);
    return "";
  }
  if (j.rule == "sr1") {
    if (auto e = want(2); !e.empty()) return e;
    return check_sr1(cited(0), cited(1), stmt, sig);
  }
  if (j.rule == "sr2") {
    if (auto e = want(3); !e.empty()) return e;
    return check_sr2(cited(0), cited(1), cited(2), stmt, sig);
  }
  const Iep* iep = store.find(j.rule);
  if (!iep) return "rule label unknown: " + j.rule;
  if (auto e = want(iep->premise.size()); !e.empty()) return e;
  auto q = extract(stmts, j.clist);
  auto r = ioeq_check(q, iep->premise);
  if (!r.equivalent) return "premise mismatch for " + j.rule + ": " + r.failure;
  auto inst = instantiate_conclusion(*iep, Substitution{r.witness}, stmt.y);
  if (inst.pn != stmt.pn || inst.x != stmt.x ||
      iep->conclusion.y.size() != stmt.y.size())
    return "conclusion mismatch: " + j.rule + " yields " + sig.render(inst);
  return "";
}

}  // namespace

CheckResult check_proof(const ProofDocument& doc, const IepStore& store,
                        const AppSignature& sig, const CheckOptions& opts) {
  CheckResult res;
  auto fail = [&](std::size_t line, std::string msg) {
    if (!res.failing_line) res.failing_line = line;
    res.errors.push_back((line ? "line " + std::to_string(line) + ": " : "") +
                         std::move(msg));
  };
  if (doc.lines.empty() || doc.m == doc.lines.size()) {
    fail(0, "proof derives nothing");
    return res;
  }
  auto stmts = doc.statements();
  auto vr = validate_program_list(stmts, sig);
  for (const auto& v : vr.violations)
    fail(v.item, v.condition + (v.message.empty() ? "" : ": " + v.message));

  for (std::size_t i = 1; i <= doc.lines.size(); ++i) {
    const auto& l = doc.lines[i - 1];
    if (i <= doc.m) {
      if (l.just) fail(i, "premise line carries a justification");
      continue;
    }
    if (!l.just) {
      fail(i, "derived line has no justification");
      continue;
    }
    bool bad_ref = false;
    for (auto c : l.just->clist)
      if (c == 0 || c >= i) bad_ref = true;
    if (bad_ref) {
      fail(i, "clist references line >= current");
      continue;
    }
    auto e = check_line(stmts, i, *l.just, store, sig);
    if (!e.empty()) fail(i, e);
  }

  Iep thm;
  thm.label = doc.label;
  thm.provenance = Provenance::kTheorem;
  thm.premise.assign(stmts.begin(), stmts.begin() + doc.m);
  thm.conclusion = stmts.back();
  if (doc.statement) {
    if (doc.statement->premise != thm.premise)
      fail(0, "proof premise differs from the theorem statement");
    if (!same_up_to_outputs(doc.statement->conclusion, thm.conclusion))
      fail(doc.lines.size(), "final line differs from the theorem conclusion");
    else
      thm.conclusion = doc.statement->conclusion;
  }
  if (!res.errors.empty()) return res;

  auto sr = check_iep(thm, sig);
  for (const auto& v : sr.violations)
    fail(0, "theorem structure: " + v.condition + " " + v.message);

  auto trace = reduce_connection_lists(doc);
  for (auto k : trace.redundant_premise)
    fail(k, "premise line unused by the proof; the theorem is reducible");
  for (auto k : trace.redundant_derived)
    res.warnings.push_back("line " + std::to_string(k) + " is redundant");

  auto red = find_reducibility(thm, store, sig, opts.irreducibility_bound);
  if (!red.checked)
    res.warnings.push_back("irreducibility not checked: premise has " +
                           std::to_string(thm.premise.size()) + " lines");
  for (const auto& w : red.witnesses) fail(0, "theorem is reducible: " + w);

  if (res.errors.empty()) {
    res.accepted = true;
    res.theorem = std::move(thm);
  }
  return res;
}

ReductionTrace reduce_connection_lists(const ProofDocument& doc) {
  ReductionTrace t;
  const std::size_t n = doc.lines.size();
  auto clist = [&](std::size_t i) {
    const auto& j = doc.lines[i - 1].just;
    return j ? j->clist : std::vector<std::size_t>{};
  };
  auto order = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  if (n == 0 || n <= doc.m) return t;
  auto b = order(clist(n));
  t.steps.push_back(b);
  for (std::size_t i = n - 1; i > doc.m; --i) {
    if (!std::binary_search(b.begin(), b.end(), i)) {
      t.redundant_derived.push_back(i);
      continue;
    }
    b = order(concat_lists(minus_lists(b, {i}), clist(i)));
    t.steps.push_back(b);
  }
  t.final_list = b;
  std::reverse(t.redundant_derived.begin(), t.redundant_derived.end());
  for (std::size_t k = 1; k <= doc.m; ++k)
    if (!std::binary_search(b.begin(), b.end(), k))
      t.redundant_premise.push_back(k);
  return t;
}

IntMatrix export_proof_matrix(const ProofDocument& doc,
                              const std::map<std::string, std::int64_t>& ids,
                              const ExportShape& shape) {
  const auto width = 3 + shape.nx + shape.ny + shape.clist_width;
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(doc.lines.size()),
                                static_cast<Eigen::Index>(width));
  auto enc = encode_program(doc.statements(),
                            LabelEncoding{shape.nvar, shape.nx, shape.ny});
  for (std::size_t i = 0; i < doc.lines.size(); ++i) {
    auto r = static_cast<Eigen::Index>(i);
    m(r, 0) = static_cast<std::int64_t>(i + 1);
    m.row(r).segment(1, enc.rows.cols()) = enc.rows.row(r);
    const auto& j = doc.lines[i].just;
    if (!j) continue;
    auto it = ids.find(j->rule);
    if (it == ids.end())
      throw std::invalid_argument("no rule id for " + j->rule);
    auto col = static_cast<Eigen::Index>(1 + enc.rows.cols());
    m(r, col) = it->second;
    if (j->clist.size() > shape.clist_width)
      throw CapacityError("clist wider than the export shape");
    for (std::size_t k = 0; k < j->clist.size(); ++k)
      m(r, col + 1 + static_cast<Eigen::Index>(k)) =
          static_cast<std::int64_t>(j->clist[k]);
  }
  return m;
}

}  // namespace pecr

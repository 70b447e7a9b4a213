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

#include <filesystem>
#include <map>
#include <sstream>

#include "pecr/binding.h"
#include "pecr/cli.h"
#include "pecr/codec.h"
#include "pecr/dynsys.h"
#include "pecr/proof.h"
#include "pecr/runtime.h"
#include "pecr/text.h"

namespace pecr {
namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string r = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    r += (i ? " " : "") + std::to_string(v[i]);
  return r + "]";
}

// Constants print as m* relative to nvar.
std::string star_matrix(const IntMatrix& m, std::uint32_t nvar) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      if (m(i, j) > nvar)
        os << m(i, j) - nvar << "*";
      else
        os << m(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

LabelEncoding fitted(const ProgramList& p, const ShapeOptions& s) {
  LabelEncoding e;
  std::size_t nx = 1, ny = 1;
  for (const auto& ap : p) {
    nx = std::max(nx, ap.x.size());
    ny = std::max(ny, ap.y.size());
  }
  e.nvar = s.nvar.value_or(default_nvar(p));
  e.nx = s.nx.value_or(nx);
  e.ny = s.ny.value_or(ny);
  return e;
}

std::vector<std::pair<std::string, ProofDocument>> read_proofs(
    const std::vector<std::string>& files, const AppSignature& sig) {
  std::vector<std::pair<std::string, ProofDocument>> docs;
  for (const auto& f : files)
    docs.emplace_back(f, parse_proof(read_file(f), sig));
  return docs;
}

// Checks `lib` and returns the store extended with accepted theorems.
IepStore library_store(const Application& app,
                       const std::vector<std::string>& lib, std::ostream& out,
                       bool* ok) {
  IepStore store = app.axioms;
  *ok = true;
  for (const auto& r :
       check_documents(read_proofs(lib, app.sig), store, app.sig)) {
    if (!r.result.accepted) {
      out << r.source << ": " << r.result.str();
      *ok = false;
    }
  }
  return store;
}

template <class F>
int guarded(std::ostream& out, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    out << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
  }
  return kExitParseError;
}

}  // namespace

Application load_app(const CommonOptions& o) {
  bool file = std::filesystem::exists(o.app);
  std::string text = file ? read_file(o.app) : builtin_app_text(o.app);
  Application app = parse_application(text);
  if (!o.mach && !o.mlst) return app;
  MachineParams m = app.sig.mach;
  if (o.mach) m = parse_mach(*o.mach, m);
  if (o.mlst) m.mlst = parse_mlst(*o.mlst);
  m.validate();
  return parse_application(text, m);
}

int cmd_check(const CommonOptions& o, const std::vector<std::string>& files,
              std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    std::map<std::string, TheoremStatement> stated;
    std::vector<std::string> proofs;
    for (const auto& f : files) {
      if (has_suffix(f, ".thm")) {
        TheoremStatement t = parse_theorem(read_file(f), app.sig);
        stated[t.label] = t;
      } else {
        proofs.push_back(f);
      }
    }
    auto docs = read_proofs(proofs, app.sig);
    for (auto& [src, d] : docs) {
      auto it = stated.find(d.label);
      if (it == stated.end()) continue;
      if (d.statement && !(*d.statement == it->second))
        throw ParseError(0, src + ": statement differs from " + d.label);
      d.statement = it->second;
      stated.erase(it);
    }
    int status = kExitOk;
    for (const auto& [label, t] : stated) {
      out << label << ": rejected\n  error: no proof given\n";
      status = kExitRejected;
    }
    IepStore store = app.axioms;
    for (const auto& r : check_documents(std::move(docs), store, app.sig)) {
      out << r.source << ": " << r.result.str();
      if (!r.result.accepted) status = kExitRejected;
    }
    return status;
  });
}

int cmd_prove(const CommonOptions& o, const std::string& thm_file,
              const std::vector<std::string>& lib, const ProverConfig& cfg,
              std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    std::string text = read_file(thm_file);
    TheoremStatement t = has_suffix(thm_file, ".proof")
                             ? parse_proof(text, app.sig).statement.value()
                             : parse_theorem(text, app.sig);
    bool ok = true;
    IepStore store = library_store(app, lib, out, &ok);
    if (!ok) return static_cast<int>(kExitRejected);
    ProveResult r = prove(t, store, app.sig, cfg);
    if (r.status == ProveStatus::kProved) {
      out << print_proof(*r.proof, app.sig);
      return static_cast<int>(kExitOk);
    }
    out << "no proof of " << t.label << ": " << r.reason << " (facts "
        << r.facts << ", generations " << r.generations << ")\n";
    return static_cast<int>(r.status == ProveStatus::kFailed ? kExitRejected
                                                             : kExitBudget);
  });
}

int cmd_reduce(const CommonOptions& o, const std::string& proof_file,
               std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    ProofDocument d = parse_proof(read_file(proof_file), app.sig);
    ReductionTrace t = reduce_connection_lists(d);
    for (const auto& s : t.steps) out << index_list(s) << "\n";
    if (!t.redundant()) {
      out << "no redundant lines\n";
      return static_cast<int>(kExitOk);
    }
    if (!t.redundant_derived.empty())
      out << "redundant derived lines " << index_list(t.redundant_derived)
          << "\n";
    if (!t.redundant_premise.empty())
      out << "redundant premise lines " << index_list(t.redundant_premise)
          << "\n";
    return static_cast<int>(kExitRejected);
  });
}

int cmd_encode(const CommonOptions& o, const std::string& file,
               const ShapeOptions& shape,
               const std::optional<std::string>& rule_ids, std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    if (rule_ids) {
      ProofDocument d = parse_proof(read_file(file), app.sig);
      LabelEncoding e = fitted(d.statements(), shape);
      ExportShape s{e.nvar, e.nx, e.ny, 0};
      for (const auto& l : d.lines)
        if (l.just)
          s.clist_width = std::max(s.clist_width, l.just->clist.size());
      if (shape.clist_width) s.clist_width = *shape.clist_width;
      auto ids = rule_ids->empty() ? default_rule_ids(app)
                                   : parse_rule_ids(read_file(*rule_ids));
      out << format_matrix(export_proof_matrix(d, ids, s)) << "\n";
      return static_cast<int>(kExitOk);
    }
    ProgramList p = parse_program_list(read_file(file), app.sig);
    ProgramMatrix m = encode_program(p, fitted(p, shape));
    out << star_matrix(m.rows, m.enc.nvar);
    return static_cast<int>(kExitOk);
  });
}

int cmd_decompose(const CommonOptions& o, const std::string& file,
                  const ShapeOptions& shape, std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    ProgramList p = parse_program_list(read_file(file), app.sig);
    ProgramMatrix m = encode_program(p, fitted(p, shape));
    IntMatrix mio = io_matrix(m);
    auto lio = binding_profile(p).lio;
    DmioDecomposition d = decompose_io_matrix(mio, lio, m.enc.nvar);
    out << "mio\n" << star_matrix(mio, m.enc.nvar);
    for (std::size_t k = 0; k < d.parts.size(); ++k) {
      const auto& part = d.parts[k];
      out << "u[" << k + 1 << "] " << app.sig.label_text(part.label) << " "
          << (part.binding ? "binding" : "non-binding") << "\n"
          << star_matrix(part.u, m.enc.nvar);
    }
    bool exact = d.sum() == mio;
    out << "sum " << (exact ? "matches" : "differs") << "\n";
    return static_cast<int>(exact ? kExitOk : kExitRejected);
  });
}

int cmd_ioeq(const CommonOptions& o, const std::string& q_file,
             const std::string& p_file, std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    ProgramList q = parse_program_list(read_file(q_file), app.sig);
    ProgramList p = parse_program_list(read_file(p_file), app.sig);
    IoeqResult r = ioeq_check(q, p);
    if (!r.equivalent) {
      out << "not equivalent: " << r.failure << "\n";
      return static_cast<int>(kExitRejected);
    }
    out << "equivalent\n";
    for (const auto& [from, to] : r.witness)
      out << "  " << app.sig.label_text(from) << " -> "
          << app.sig.label_text(to) << "\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_run(const CommonOptions& o, const std::string& prog_file,
            const std::string& va_file, const RunOptions& ro,
            std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    ProgramList p = parse_program_list(read_file(prog_file), app.sig);
    ValueAssignment va =
        parse_va(va_file.empty() ? "" : read_file(va_file), p, app.sig);
    RuntimeConfig cfg;
    cfg.budget = ro.budget;
    cfg.map = make_map(ro.map, ro.N, ro.c);
    ExecutionOutcome r = execute_program(p, va, app.sig, cfg);
    out << to_string(r.status) << " steps=" << r.steps << "\n";
    if (!r.computable()) {
      out << "item " << r.failing_item << ": " << r.cause << "\n";
      return static_cast<int>(r.status == ExecStatus::kBudgetExhausted
                                  ? kExitBudget
                                  : kExitRejected);
    }
    for (const auto& [l, v] : r.outputs)
      out << app.sig.label_text(l) << " = " << format_value(v) << "\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_probe(const CommonOptions& o, const std::vector<std::string>& labels,
              const std::vector<std::string>& lib,
              const ProbeCommandOptions& po, std::ostream& out) {
  return guarded(out, [&] {
    Application app = load_app(o);
    bool ok = true;
    IepStore store = library_store(app, lib, out, &ok);
    if (!ok) return static_cast<int>(kExitRejected);
    RuntimeConfig cfg;
    cfg.budget = po.run.budget;
    cfg.map = make_map(po.run.map, po.run.N, po.run.c);
    ProbeOptions opts;
    opts.trials = po.trials;
    opts.seed = po.seed;
    opts.exhaustive_max_nat = po.exhaustive;
    int status = kExitOk;
    for (const auto& l : labels) {
      const Iep* iep = store.find(l);
      if (!iep) throw std::invalid_argument("no rule " + l);
      ProbeStats s = soundness_probe(*iep, app.sig, cfg, opts);
      out << l << " " << s.str() << "\n";
      if (s.violations) status = kExitRejected;
    }
    return status;
  });
}

int cmd_dyn(const DynOptions& d, std::ostream& out) {
  return guarded(out, [&] {
    MapSpec f = make_map(d.map, d.N, d.c);
    auto mnat = static_cast<std::int64_t>(d.mnat);
    NatArray u0 = parse_nat_array(d.u0);
    Box p{NatArray::filled(u0.dims, 0), NatArray::filled(u0.dims, d.N)};
    if (d.box) {
      Value v = parse_value(*d.box, "box");
      p = std::get<Box>(v);
    }
    if (d.op == "iterate") {
      iterate(
          f, u0, d.n, mnat,
          [&](std::int64_t t, const NatArray& w) {
            out << format_trace_line(t, w) << "\n";
          },
          d.every);
      return static_cast<int>(kExitOk);
    }
    if (d.op == "bound") {
      out << bound_range(f, p, mnat).str() << "\n";
      return static_cast<int>(kExitOk);
    }
    if (d.op == "certify") {
      AxcCertificate c = certify_axc(f, p, mnat);
      if (c.certified) {
        out << "certified bound " << c.q.str() << " inside " << p.str() << "\n";
        return static_cast<int>(kExitOk);
      }
      out << "refused: " << c.reason << "\n";
      return static_cast<int>(kExitRejected);
    }
    if (d.op == "cycle") {
      std::uint64_t limit = d.limit;
      if (!limit) limit = state_count(p, mnat).count + 1;
      auto r = detect_cycle(f, u0, limit, mnat);
      if (!r) {
        out << "no cycle within " << limit << " steps\n";
        return static_cast<int>(kExitBudget);
      }
      out << r->str() << "\n";
      return static_cast<int>(kExitOk);
    }
    throw std::invalid_argument("unknown dyn operation " + d.op);
  });
}

}  // namespace pecr

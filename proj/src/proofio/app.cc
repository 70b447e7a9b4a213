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

#include "pecr/app.h"

#include <regex>
#include <sstream>

#include "pecr/text.h"

namespace pecr {
namespace {

enum class Section {
  kNone,
  kConstants,
  kPrograms,
  kEquality,
  kTypecheck,
  kDefine
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> r;
  std::string w;
  while (in >> w) r.push_back(w);
  return r;
}

std::uint64_t to_number(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError(line, "expected a number, got '" + s + "'");
}

std::uint32_t type_id(const AppSignature& sig, const std::string& n,
                      std::size_t line) {
  auto t = sig.find_type(n);
  if (!t) throw ParseError(line, "unknown type '" + n + "'");
  return *t;
}

ProgramList parse_operand(const std::string& text, const AppSignature& sig,
                          std::size_t line) {
  ProgramList p;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    auto t = trim(part);
    if (!t.empty()) p.push_back(parse_statement(t, sig, line));
  }
  if (p.empty()) throw ParseError(line, "empty operand");
  return p;
}

class Parser {
 public:
  explicit Parser(const std::optional<MachineParams>& mach) : override_(mach) {}

  Application run(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto s = strip_comment(raw);
      if (s.empty()) continue;
      if (block_) {
        on_block_line(s, line);
        continue;
      }
      auto w = words(s);
      const auto& k = w[0];
      if (k == "NAME") {
        app_.sig.name = w.size() > 1 ? w[1] : "";
      } else if (k == "MACH") {
        if (w.size() != 4) throw ParseError(line, "MACH needs 3 numbers");
        auto& m = app_.sig.mach;
        m.msym = to_number(w[1], line);
        m.mstr = to_number(w[2], line);
        m.mnat = to_number(w[3], line);
      } else if (k == "MLST") {
        if (w.size() != 5) throw ParseError(line, "MLST needs 4 numbers");
        auto& l = app_.sig.mach.mlst;
        l.nprem = to_number(w[1], line);
        l.npmax = to_number(w[2], line);
        l.nx = to_number(w[3], line);
        l.ny = to_number(w[4], line);
      } else if (k == "TYPES") {
        for (std::size_t i = 1; i < w.size(); ++i) add_type(w[i], line);
        section_ = Section::kNone;
      } else if (k == "CONSTANTS") {
        section_ = Section::kConstants;
      } else if (k == "PROGRAMS") {
        apply_override();
        section_ = Section::kPrograms;
      } else if (k == "EQUALITY") {
        section_ = Section::kEquality;
      } else if (k == "TYPECHECK") {
        section_ = Section::kTypecheck;
      } else if (k == "DEFINE") {
        section_ = Section::kDefine;
      } else if (k == "AXIOM" || k == "FALSE") {
        if (w.size() != 2) throw ParseError(line, k + " needs a label");
        apply_override();
        block_ = Block{k == "FALSE", w[1], line, {}, {}, false};
      } else {
        on_section_line(s, w, line);
      }
    }
    if (block_) throw ParseError(block_->start, "unterminated block");
    apply_override();
    for (const auto& d : app_.sig.programs)
      if (d.kind != ProgramKind::kFatm && !d.head)
        throw ParseError(
            0, "composite program " + d.name + " has no DEFINE entry");
    try {
      app_.sig.mach.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
    return std::move(app_);
  }

 private:
  struct Block {
    bool is_false = false;
    std::string label;
    std::size_t start = 0;
    ProgramList premise;
    std::vector<std::string> conclusion;
    bool after_rule = false;
  };

  void apply_override() {
    if (override_) app_.sig.mach = *override_;
  }

  void add_type(const std::string& n, std::size_t line) {
    try {
      app_.sig.add_type(n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }

  void on_section_line(const std::string& s, const std::vector<std::string>& w,
                       std::size_t line) {
    auto& sig = app_.sig;
    switch (section_) {
      case Section::kConstants: {
        static const std::regex re(R"(^(\S+)\s*=\s*(.*?)\s*:\s*(\S+)$)");
        std::smatch m;
        if (!std::regex_match(s, m, re))
          throw ParseError(line, "expected 'name = value : type'");
        try {
          sig.add_constant({m[1], m[2], type_id(sig, m[3], line)});
        } catch (const std::invalid_argument& e) {
          throw ParseError(line, e.what());
        }
        return;
      }
      case Section::kPrograms: {
        static const std::regex re(
            R"(^(\S+?)\s*\(([^;]*);([^)]*)\)\s+(fatm|dsj|cnj)\s+(subst|nosubst)$)");
        std::smatch m;
        if (!std::regex_match(s, m, re))
          throw ParseError(
              line, "expected 'name(in;out) fatm|dsj|cnj subst|nosubst'");
        ProgramDecl d;
        d.name = m[1];
        for (const auto& t : words(m[2]))
          d.in_types.push_back(type_id(sig, t, line));
        for (const auto& t : words(m[3]))
          d.out_types.push_back(type_id(sig, t, line));
        d.kind = m[4] == "dsj"   ? ProgramKind::kDsj
                 : m[4] == "cnj" ? ProgramKind::kCnj
                                 : ProgramKind::kFatm;
        d.subst = m[5] == "subst";
        try {
          sig.add_program(std::move(d));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line, e.what());
        }
        return;
      }
      case Section::kEquality: {
        if (w.size() != 3 || (w[2] != "equality" && w[2] != "equivalence"))
          throw ParseError(line, "expected 'type eqX equality|equivalence'");
        auto t = type_id(sig, w[0], line);
        auto pn = sig.find_program(w[1]);
        if (!pn) throw ParseError(line, "unknown program " + w[1]);
        const auto& d = sig.program(*pn);
        if (d.in_types.size() != 2 || !d.out_types.empty())
          throw ParseError(line, w[1] + " must take two inputs and no outputs");
        sig.types[t].eq = *pn;
        sig.types[t].eq_kind = w[2] == "equality" ? EqualityKind::kEquality
                                                  : EqualityKind::kEquivalence;
        return;
      }
      case Section::kTypecheck: {
        if (w.size() != 2) throw ParseError(line, "expected 'type typeX'");
        auto t = type_id(sig, w[0], line);
        auto pn = sig.find_program(w[1]);
        if (!pn) throw ParseError(line, "unknown program " + w[1]);
        const auto& d = sig.program(*pn);
        if (d.in_types.size() != 1 || !d.out_types.empty())
          throw ParseError(line, w[1] + " must take one input and no outputs");
        sig.types[t].checker = *pn;
        return;
      }
      case Section::kDefine:
        on_define(s, line);
        return;
      default:
        throw ParseError(line, "unexpected line '" + s + "'");
    }
  }

  void on_define(const std::string& s, std::size_t line) {
    auto& sig = app_.sig;
    auto pos = s.find(":=");
    if (pos == std::string::npos) throw ParseError(line, "expected ':='");
    auto head = parse_statement(s.substr(0, pos), sig, line);
    auto body = words(s.substr(pos + 2));
    if (body.empty()) throw ParseError(line, "empty definition");
    auto rest = trim(s.substr(pos + 2));
    rest = trim(std::string_view(rest).substr(body[0].size()));
    auto& decl = sig.programs[head.pn - 1];
    CompositeDescriptor desc;
    try {
      if (body[0] == "disj") {
        if (decl.kind != ProgramKind::kDsj)
          throw ParseError(line, decl.name + " is not declared dsj");
        auto bar = rest.find('|');
        if (bar == std::string::npos) throw ParseError(line, "expected '|'");
        desc = build_disjunction(parse_operand(rest.substr(0, bar), sig, line),
                                 parse_operand(rest.substr(bar + 1), sig, line),
                                 decl.name, sig);
      } else if (body[0] == "conj") {
        if (decl.kind != ProgramKind::kCnj)
          throw ParseError(line, decl.name + " is not declared cnj");
        auto ops = parse_operand(rest, sig, line);
        if (ops.size() != 2)
          throw ParseError(line, "conj needs exactly two statements");
        desc = build_conjunction(ops[0], ops[1], decl.name, sig);
      } else {
        throw ParseError(line, "expected disj or conj");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    if (!sublist_check(head.x, desc.head.x).equivlst ||
        !sublist_check(head.y, desc.head.y).equivlst ||
        head.x.size() != desc.head.x.size() ||
        head.y.size() != desc.head.y.size())
      throw ParseError(line,
                       "head does not list the free inputs and primary "
                       "outputs of the operands");
    // Slot types follow the head order.
    auto type_of = [&](Label l) {
      for (std::size_t i = 0; i < desc.head.x.size(); ++i)
        if (desc.head.x[i] == l) return desc.decl.in_types[i];
      for (std::size_t j = 0; j < desc.head.y.size(); ++j)
        if (desc.head.y[j] == l) return desc.decl.out_types[j];
      return std::uint32_t{0};
    };
    for (std::size_t i = 0; i < head.x.size(); ++i)
      if (type_of(head.x[i]) != decl.in_types[i])
        throw ParseError(line, "slot type mismatch in " + decl.name);
    for (std::size_t j = 0; j < head.y.size(); ++j)
      if (type_of(head.y[j]) != decl.out_types[j])
        throw ParseError(line, "slot type mismatch in " + decl.name);
    decl.head = head;
    decl.operands = std::move(desc.decl.operands);
  }

  void on_block_line(const std::string& s, std::size_t line) {
    auto& b = *block_;
    if (s == "END") {
      finish_block(line);
      block_.reset();
      return;
    }
    if (s.find_first_not_of('-') == std::string::npos && s.size() >= 3) {
      if (b.is_false) throw ParseError(line, "FALSE blocks have no conclusion");
      if (b.after_rule) throw ParseError(line, "second separator");
      b.after_rule = true;
      return;
    }
    if (b.after_rule) {
      b.conclusion.push_back(s);
    } else {
      b.premise.push_back(parse_statement(s, app_.sig, line));
    }
  }

  void finish_block(std::size_t line) {
    auto& b = *block_;
    auto& sig = app_.sig;
    bool is_false = b.is_false;
    if (!is_false) {
      if (!b.after_rule || b.conclusion.size() != 1)
        throw ParseError(
            line, "axiom " + b.label + " needs '-----' and one conclusion");
      is_false = b.conclusion[0] == "false";
    }
    if (app_.axioms.find(b.label) || is_known_false(b.label))
      throw ParseError(b.start, "duplicate rule label " + b.label);
    if (is_false) {
      auto r = validate_program_list(b.premise, sig);
      if (!r.ok()) throw ParseError(b.start, b.label + ": " + r.str());
      app_.false_programs.push_back({b.label, b.premise});
      app_.rule_order.push_back(b.label);
      register_falsity(b.label, b.premise, b.start);
      return;
    }
    Iep iep{b.label, b.premise, parse_statement(b.conclusion[0], sig, line),
            Provenance::kAxiom};
    auto r = check_iep(iep, sig);
    if (!r.ok())
      throw ParseError(b.start,
                       "axiom " + b.label +
                           " fails the extension structure check: " + r.str());
    add_axiom(std::move(iep), b.start);
    app_.rule_order.push_back(b.label);
  }

  bool is_known_false(const std::string& label) const {
    for (const auto& f : app_.false_programs)
      if (f.label == label) return true;
    return false;
  }

  void add_axiom(Iep iep, std::size_t line) {
    try {
      app_.axioms.add(std::move(iep));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }

  // With an flse program available, the false program becomes a constant
  // and flse [P] [] an axiom with empty premise.
  void register_falsity(const std::string& label, const ProgramList& p,
                        std::size_t line) {
    auto& sig = app_.sig;
    auto flse = sig.find_program("flse");
    if (!flse) return;
    const auto& d = sig.program(*flse);
    if (d.in_types.size() != 1 || !d.out_types.empty()) return;
    std::uint32_t m = 0;
    try {
      m = sig.add_constant(
          {label, "{" + sig.render(p, "; ") + "}", d.in_types[0]});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    add_axiom(Iep{label,
                  {},
                  AtomicProgram{*flse, {Label::constant(m)}, {}},
                  Provenance::kAxiom},
              line);
  }

  Application app_;
  Section section_ = Section::kNone;
  std::optional<Block> block_;
  std::optional<MachineParams> override_;
};

}  // namespace

Application parse_application(std::string_view text,
                              const std::optional<MachineParams>& mach) {
  return Parser(mach).run(text);
}

Application load_application(const std::string& path,
                             const std::optional<MachineParams>& mach) {
  return parse_application(read_file(path), mach);
}

std::string print_application(const Application& app) {
  const auto& sig = app.sig;
  std::ostringstream os;
  os << "NAME " << sig.name << "\n";
  os << "MACH " << sig.mach.msym << " " << sig.mach.mstr << " " << sig.mach.mnat
     << "\n";
  os << "MLST " << sig.mach.mlst.nprem << " " << sig.mach.mlst.npmax << " "
     << sig.mach.mlst.nx << " " << sig.mach.mlst.ny << "\n";
  os << "TYPES";
  for (const auto& t : sig.types) os << " " << t.name;
  os << "\n";
  // Constants created from FALSE blocks are re-created on parse.
  std::vector<std::string> implicit;
  if (sig.find_program("flse"))
    for (const auto& f : app.false_programs) implicit.push_back(f.label);
  os << "CONSTANTS\n";
  for (const auto& c : sig.constants) {
    if (contains(implicit, c.name)) continue;
    os << c.name << " = " << c.value << " : " << sig.types[c.type].name << "\n";
  }
  os << "PROGRAMS\n";
  auto type_names = [&](const std::vector<std::uint32_t>& v) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i)
      r += (i ? " " : "") + sig.types[v[i]].name;
    return r;
  };
  for (const auto& d : sig.programs)
    os << d.name << "(" << type_names(d.in_types) << ";"
       << type_names(d.out_types) << ") " << to_string(d.kind) << " "
       << (d.subst ? "subst" : "nosubst") << "\n";
  os << "EQUALITY\n";
  for (const auto& t : sig.types)
    if (t.eq)
      os << t.name << " " << sig.program(t.eq).name << " "
         << to_string(t.eq_kind) << "\n";
  os << "TYPECHECK\n";
  for (const auto& t : sig.types)
    if (t.checker) os << t.name << " " << sig.program(t.checker).name << "\n";
  os << "DEFINE\n";
  for (const auto& d : sig.programs) {
    if (d.kind == ProgramKind::kFatm || !d.head) continue;
    os << sig.render(*d.head) << " := ";
    if (d.kind == ProgramKind::kDsj)
      os << "disj " << sig.render(d.operands[0], " ; ") << " | "
         << sig.render(d.operands[1], " ; ") << "\n";
    else
      os << "conj " << sig.render(d.operands[0], " ; ") << "\n";
  }
  for (const auto& label : app.rule_order) {
    const FalseProgram* f = nullptr;
    for (const auto& fp : app.false_programs)
      if (fp.label == label) f = &fp;
    if (f) {
      os << "\nFALSE " << label << "\n" << sig.render(f->program) << "\nEND\n";
      continue;
    }
    const auto* iep = app.axioms.find(label);
    os << "\nAXIOM " << label << "\n";
    for (const auto& ap : iep->premise) os << sig.render(ap) << "\n";
    os << "-----\n" << sig.render(iep->conclusion) << "\nEND\n";
  }
  return os.str();
}

std::map<std::string, std::int64_t> parse_rule_ids(std::string_view text) {
  std::map<std::string, std::int64_t> r;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto w = words(strip_comment(raw));
    if (w.empty()) continue;
    if (w.size() != 2) throw ParseError(line, "expected 'label id'");
    r[w[0]] = static_cast<std::int64_t>(to_number(w[1], line));
  }
  return r;
}

std::map<std::string, std::int64_t> default_rule_ids(const Application& app) {
  std::map<std::string, std::int64_t> r;
  std::int64_t id = 0;
  for (const auto& l : app.rule_order) r[l] = ++id;
  for (const char* s : {"iot", "sr1", "sr2"}) r[s] = ++id;
  return r;
}

}  // namespace pecr

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

#include "pecr/runtime.h"

#include <functional>
#include <sstream>
#include <unordered_map>

#include "pecr/binding.h"
#include "pecr/codec.h"
#include "pecr/lists.h"
#include "pecr/text.h"
#include "pecr/validate.h"

namespace pecr {
namespace internal {
extern const char kNatApp[];
extern const char kPecrApp[];
}  // namespace internal

namespace {

class BudgetError : public std::runtime_error {
 public:
  BudgetError() : std::runtime_error("budget exhausted") {}
};

const AppSignature& default_object_sig() {
  return builtin_apps().at("nat").sig;
}

const AppSignature& object_sig_or_default(const AppSignature* s) {
  return s ? *s : default_object_sig();
}

std::string type_of(const Value& v) {
  switch (v.index()) {
    case 0:
      return "nat";
    case 1:
      return "arr";
    case 2:
      return "box";
    default:
      return "prgm";
  }
}

struct Context {
  const AppSignature& sig;
  const RuntimeConfig& cfg;
  const AppSignature& object_sig;
  std::size_t steps = 0;
};

std::int64_t mnat(const Context& c) {
  return static_cast<std::int64_t>(c.sig.mach.mnat);
}

std::int64_t nat(const Value& v, const Context& c) {
  const auto* n = std::get_if<std::int64_t>(&v);
  if (!n) throw ExecutionError("expected nat, got " + type_of(v));
  if (*n < 0 || *n > mnat(c))
    throw ExecutionError(std::to_string(*n) + " outside [0, mnat]");
  return *n;
}

const NatArray& arr(const Value& v) {
  const auto* a = std::get_if<NatArray>(&v);
  if (!a) throw ExecutionError("expected arr, got " + type_of(v));
  return *a;
}

const NatArray& same_dims(const Value& a, const Value& b) {
  if (!arr(a).same_shape(arr(b))) throw ExecutionError("dimension mismatch");
  return arr(a);
}

const Box& box(const Value& v) {
  const auto* b = std::get_if<Box>(&v);
  if (!b || !b->valid())
    throw ExecutionError("expected box, got " + type_of(v));
  return *b;
}

const ProgramList& prgm(const Value& v, const Context& c) {
  const auto* p = std::get_if<ProgramList>(&v);
  if (!p) throw ExecutionError("expected prgm, got " + type_of(v));
  auto r = validate_program_list(*p, c.object_sig);
  if (!r.ok()) throw ExecutionError("not a program: " + r.str());
  return *p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ExecutionError(what + " fails");
}

using Args = std::vector<Value>;
using Handler = std::function<Args(const Args&, Context&)>;

const std::unordered_map<std::string, Handler>& handlers() {
  static const auto* table = new std::unordered_map<std::string, Handler>{
      {"typen",
       [](const Args& a, Context& c) {
         nat(a[0], c);
         return Args{};
       }},
      {"eqn",
       [](const Args& a, Context& c) {
         require(nat(a[0], c) == nat(a[1], c), "eqn");
         return Args{};
       }},
      {"lt",
       [](const Args& a, Context& c) {
         require(nat(a[0], c) < nat(a[1], c), "lt");
         return Args{};
       }},
      {"typea",
       [](const Args& a, Context&) {
         arr(a[0]);
         return Args{};
       }},
      {"eqa",
       [](const Args& a, Context&) {
         require(eqa(same_dims(a[0], a[1]), arr(a[1])), "eqa");
         return Args{};
       }},
      {"lta",
       [](const Args& a, Context&) {
         require(lta(same_dims(a[0], a[1]), arr(a[1])), "lta");
         return Args{};
       }},
      {"lea",
       [](const Args& a, Context&) {
         require(lea(same_dims(a[0], a[1]), arr(a[1])), "lea");
         return Args{};
       }},
      {"typebx",
       [](const Args& a, Context&) {
         box(a[0]);
         return Args{};
       }},
      {"eqbx",
       [](const Args& a, Context&) {
         const Box &p = box(a[0]), &q = box(a[1]);
         require(eqa(p.lo, q.lo) && eqa(p.hi, q.hi), "eqbx");
         return Args{};
       }},
      {"eltbx",
       [](const Args& a, Context&) {
         const NatArray& u = arr(a[0]);
         require(box(a[1]).contains(u), "eltbx");
         return Args{};
       }},
      {"subbx",
       [](const Args& a, Context&) {
         require(subbx(box(a[0]), box(a[1])), "subbx");
         return Args{};
       }},
      {"lbx", [](const Args& a, Context&) { return Args{box(a[0]).lo}; }},
      {"ubx", [](const Args& a, Context&) { return Args{box(a[0]).hi}; }},
      {"box",
       [](const Args& a, Context&) {
         const NatArray& lo = same_dims(a[0], a[1]);
         require(lea(lo, arr(a[1])), "lea[a b]");
         return Args{Box{lo, arr(a[1])}};
       }},
      {"f",
       [](const Args& a, Context& c) {
         NatArray v = iterate(c.cfg.map, arr(a[0]), 1, mnat(c));
         return Args{v};
       }},
      {"itf",
       [](const Args& a, Context& c) {
         const NatArray& u = arr(a[0]);
         std::int64_t n = nat(a[1], c);
         if (c.steps + static_cast<std::size_t>(n) > c.cfg.budget)
           throw BudgetError();
         c.steps += static_cast<std::size_t>(n);
         return Args{iterate(c.cfg.map, u, n, mnat(c))};
       }},
      {"bndf",
       [](const Args& a, Context& c) {
         try {
           return Args{bound_range(c.cfg.map, box(a[0]), mnat(c))};
         } catch (const std::invalid_argument& e) {
           throw ExecutionError(e.what());
         }
       }},
      {"typep",
       [](const Args& a, Context& c) {
         prgm(a[0], c);
         return Args{};
       }},
      {"typeap",
       [](const Args& a, Context& c) {
         require(prgm(a[0], c).size() == 1, "typeap");
         return Args{};
       }},
      {"sub",
       [](const Args& a, Context& c) {
         require(sublist_check(prgm(a[0], c), prgm(a[1], c)).sublst, "sub");
         return Args{};
       }},
      {"equiv",
       [](const Args& a, Context& c) {
         require(sublist_check(prgm(a[0], c), prgm(a[1], c)).equivlst, "equiv");
         return Args{};
       }},
      {"ioeq",
       [](const Args& a, Context& c) {
         require(ioeq_check(prgm(a[0], c), prgm(a[1], c)).equivalent, "ioeq");
         return Args{};
       }},
      {"conc",
       [](const Args& a, Context& c) {
         Value s = concat_lists(prgm(a[0], c), prgm(a[1], c),
                                c.object_sig.mach.mlst.npmax);
         prgm(s, c);
         return Args{s};
       }},
  };
  return *table;
}

Value lookup(Label l, const ValueAssignment& env, const Context& c) {
  if (l.is_constant()) return constant_value(c.sig, l.index(), &c.object_sig);
  auto it = env.find(l);
  if (it == env.end())
    throw ExecutionError("no value for " + c.sig.label_text(l));
  return it->second;
}

void run_list(const ProgramList& p, ValueAssignment& env, Context& c,
              std::size_t* failing = nullptr);

Args run_ap(const AtomicProgram& ap, const Args& in, Context& c) {
  if (++c.steps > c.cfg.budget) throw BudgetError();
  const ProgramDecl& d = c.sig.program(ap.pn);
  if (d.kind == ProgramKind::kFatm) {
    auto it = handlers().find(d.name);
    if (it == handlers().end())
      throw std::invalid_argument("no decision procedure for " + d.name);
    return it->second(in, c);
  }
  if (!d.head) throw std::invalid_argument(d.name + " has no definition");
  ValueAssignment local;
  for (std::size_t i = 0; i < d.head->x.size(); ++i)
    if (d.head->x[i].is_variable()) local[d.head->x[i]] = in[i];
  auto outputs = [&](const ValueAssignment& env) {
    Args out;
    for (Label y : d.head->y) out.push_back(env.at(y));
    return out;
  };
  if (d.kind == ProgramKind::kCnj) {
    ProgramList body = chain(d.operands);
    run_list(body, local, c);
    return outputs(local);
  }
  std::string causes;
  for (const auto& operand : d.operands) {
    ValueAssignment env = local;
    try {
      run_list(operand, env, c);
      return outputs(env);
    } catch (const ExecutionError& e) {
      causes += causes.empty() ? e.what() : std::string("; ") + e.what();
    }
  }
  throw ExecutionError(d.name + ": no operand computable (" + causes + ")");
}

void run_list(const ProgramList& p, ValueAssignment& env, Context& c,
              std::size_t* failing) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (failing) *failing = i + 1;
    Args in;
    for (Label x : p[i].x) in.push_back(lookup(x, env, c));
    Args out = run_ap(p[i], in, c);
    for (std::size_t j = 0; j < p[i].y.size(); ++j) env[p[i].y[j]] = out[j];
  }
}

NatArray array_from_term(const Term& t) { return parse_nat_array(t.str()); }

}  // namespace

const char* to_string(ExecStatus s) {
  switch (s) {
    case ExecStatus::kComputable:
      return "computable";
    case ExecStatus::kExecutionError:
      return "execution-error";
    case ExecStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

Value parse_value(const std::string& text, const std::string& type,
                  const AppSignature* object_sig) {
  std::string s = trim(text);
  if (type == "nat") {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 0)
      throw std::invalid_argument("not a machine number: " + s);
    return static_cast<std::int64_t>(v);
  }
  if (type == "arr") return parse_nat_array(s);
  if (type == "box") {
    Term t = Term::parse(s);
    if (t.is_atom() || t.items().size() != 2)
      throw std::invalid_argument("box needs [lower upper]: " + s);
    Box b{array_from_term(t.items()[0]), array_from_term(t.items()[1])};
    if (!b.valid()) throw std::invalid_argument("invalid box: " + s);
    return b;
  }
  if (type == "prgm" || type == "atm") {
    const AppSignature& sig = object_sig_or_default(object_sig);
    auto tok = tokenize(s);
    if (tok.size() < 2 || tok.front() != "[" || tok.back() != "]")
      throw std::invalid_argument("program needs [stmt ...]: " + s);
    tok.pop_back();
    ProgramList p;
    for (std::size_t pos = 1; pos < tok.size();)
      p.push_back(parse_statement_tokens(tok, pos, sig));
    return p;
  }
  throw std::invalid_argument("no values of type " + type);
}

std::string format_value(const Value& v, const AppSignature* object_sig) {
  switch (v.index()) {
    case 0:
      return std::to_string(std::get<0>(v));
    case 1:
      return std::get<1>(v).str();
    case 2:
      return std::get<2>(v).str();
    default: {
      const AppSignature& sig = object_sig_or_default(object_sig);
      return "[" + sig.render(std::get<3>(v), " ") + "]";
    }
  }
}

Value constant_value(const AppSignature& sig, std::uint32_t m,
                     const AppSignature* object_sig) {
  const ConstantDecl& c = sig.constant(m);
  if (c.value == "mnat") return static_cast<std::int64_t>(sig.mach.mnat);
  return parse_value(c.value, sig.types.at(c.type).name, object_sig);
}

const std::map<std::string, Application>& builtin_apps() {
  static const auto* apps = new std::map<std::string, Application>{
      {"nat", parse_application(internal::kNatApp)},
      {"pecr", parse_application(internal::kPecrApp)},
  };
  return *apps;
}

std::string builtin_app_text(const std::string& name) {
  if (name == "nat") return internal::kNatApp;
  if (name == "pecr") return internal::kPecrApp;
  throw std::invalid_argument("no built-in application " + name);
}

std::string non_executable(const ProgramList& p, const AppSignature& sig) {
  std::function<std::string(const ProgramList&, int)> scan =
      [&](const ProgramList& q, int depth) -> std::string {
    for (const auto& ap : q) {
      const ProgramDecl& d = sig.program(ap.pn);
      if (d.kind == ProgramKind::kFatm) {
        if (!handlers().count(d.name)) return d.name;
      } else if (!d.head || depth > 16) {
        return d.name;
      } else {
        for (const auto& o : d.operands)
          if (auto r = scan(o, depth + 1); !r.empty()) return r;
      }
    }
    return "";
  };
  return scan(p, 0);
}

ExecutionOutcome execute_program(const ProgramList& p,
                                 const ValueAssignment& va,
                                 const AppSignature& sig,
                                 const RuntimeConfig& cfg) {
  if (auto bad = non_executable(p, sig); !bad.empty())
    throw std::invalid_argument("no decision procedure for " + bad);
  BindingProfile bp = binding_profile(p);
  for (Label l : bp.free)
    if (!va.count(l))
      throw std::invalid_argument("missing value for " + sig.label_text(l));
  for (const auto& [l, v] : va)
    if (!contains(bp.free, l))
      throw std::invalid_argument("extra value for " + sig.label_text(l));

  Context c{sig, cfg, object_sig_or_default(cfg.object_sig)};
  ExecutionOutcome out;
  ValueAssignment env = va;
  std::size_t failing = 0;
  try {
    run_list(p, env, c, &failing);
    for (Label y : bp.pol) out.outputs[y] = env.at(y);
  } catch (const ExecutionError& e) {
    out.status = ExecStatus::kExecutionError;
    out.failing_item = failing;
    out.cause = e.what();
  } catch (const BudgetError& e) {
    out.status = ExecStatus::kBudgetExhausted;
    out.failing_item = failing;
    out.cause = e.what();
  }
  out.steps = c.steps;
  return out;
}

ValueAssignment parse_va(const std::string& text, const ProgramList& p,
                         const AppSignature& sig,
                         const AppSignature* object_sig) {
  std::map<Label, std::string> types;
  for (const auto& ap : p)
    for (std::size_t i = 0; i < ap.x.size(); ++i)
      if (auto t = sig.input_type(ap, i); t && !types.count(ap.x[i]))
        types[ap.x[i]] = sig.types.at(*t).name;
  ValueAssignment va;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError(line, "expected label = value");
    auto l = sig.parse_label(trim(s.substr(0, eq)));
    if (!l || !l->is_variable())
      throw ParseError(line, "bad label " + trim(s.substr(0, eq)));
    auto t = types.find(*l);
    if (t == types.end())
      throw ParseError(line,
                       "label " + sig.label_text(*l) + " is not an input");
    try {
      va[*l] = parse_value(s.substr(eq + 1), t->second, object_sig);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  return va;
}

}  // namespace pecr

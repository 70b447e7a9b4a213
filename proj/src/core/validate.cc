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

#include "pecr/validate.h"

#include <set>
#include <sstream>

#include "pecr/lists.h"

namespace pecr {

bool ValidationReport::has(const std::string& condition) const {
  for (const auto& v : violations)
    if (v.condition == condition) return true;
  return false;
}

void ValidationReport::add(std::size_t item, std::string condition,
                           std::string message) {
  violations.push_back({item, std::move(condition), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other,
                             std::size_t item_offset) {
  for (auto v : other.violations) {
    if (v.item) v.item += item_offset;
    violations.push_back(std::move(v));
  }
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    if (v.item) os << "item " << v.item << ": ";
    os << v.condition;
    if (!v.message.empty()) os << " (" << v.message << ")";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate_atomic(const AtomicProgram& ap,
                                 const AppSignature& sig) {
  ValidationReport r;
  if (ap.pn == 0 || ap.pn > sig.programs.size()) {
    r.add(0, "unknown pn", "program id " + std::to_string(ap.pn));
    return r;
  }
  const auto& d = sig.program(ap.pn);
  for (const auto& l : ap.x)
    if (l.is_null()) r.add(0, "x not in var+cst", "null input label");
  for (const auto& l : ap.y)
    if (!l.is_variable())
      r.add(0, "y not in var", "output " + sig.label_text(l));
  if (!cap_lists(ap.x, ap.y).empty())
    r.add(0, "cap[x y] nonempty", sig.render(ap));
  if (unique_list(ap.y) != ap.y) r.add(0, "y not unique", sig.render(ap));
  if (ap.x.size() != d.in_types.size() || ap.y.size() != d.out_types.size())
    r.add(0, "arity",
          d.name + " declares " + std::to_string(d.in_types.size()) +
              " inputs and " + std::to_string(d.out_types.size()) + " outputs");
  if (ap.x.size() > sig.mach.mlst.nx) r.add(0, "nx overflow", d.name);
  if (ap.y.size() > sig.mach.mlst.ny) r.add(0, "ny overflow", d.name);
  return r;
}

ValidationReport validate_program_list(const ProgramList& p,
                                       const AppSignature& sig) {
  ValidationReport r;
  if (p.size() > sig.mach.mlst.npmax)
    r.add(0, "length exceeds npmax", std::to_string(p.size()));
  for (std::size_t m = 0; m < p.size(); ++m)
    r.merge(validate_atomic(p[m], sig), m + 1);

  std::set<Label> seen_outputs;
  for (std::size_t m = 0; m < p.size(); ++m) {
    for (const auto& l : p[m].y) {
      if (!seen_outputs.insert(l).second)
        r.add(m + 1, "duplicate output label", sig.label_text(l));
    }
  }
  // An input may only read outputs of strictly earlier items.
  for (std::size_t m = 0; m < p.size(); ++m) {
    for (const auto& l : p[m].x) {
      if (!l.is_variable()) continue;
      for (std::size_t k = m; k < p.size(); ++k) {
        if (contains(p[k].y, l)) {
          r.add(m + 1, "input equals later output",
                sig.label_text(l) + " is an output of item " +
                    std::to_string(k + 1));
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace pecr

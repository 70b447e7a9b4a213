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

#include "pecr/program.h"

#include "pecr/binding.h"
#include "pecr/lists.h"

namespace pecr {

std::vector<Label> io_labels(const AtomicProgram& ap) {
  return concat_lists(ap.x, ap.y);
}

bool same_up_to_outputs(const AtomicProgram& a, const AtomicProgram& b) {
  return a.pn == b.pn && a.x == b.x && a.y.size() == b.y.size();
}

BindingProfile binding_profile(const ProgramList& p) {
  BindingProfile b;
  for (const auto& ap : p) {
    b.inp.insert(b.inp.end(), ap.x.begin(), ap.x.end());
    b.outp.insert(b.outp.end(), ap.y.begin(), ap.y.end());
  }
  b.lio = unique_list(concat_lists(b.inp, b.outp));
  b.pil = unique_list(minus_lists(b.inp, b.outp));
  for (const auto& l : b.pil)
    if (!l.is_constant()) b.free.push_back(l);
  b.pol = minus_lists(b.outp, b.inp);
  return b;
}

}  // namespace pecr

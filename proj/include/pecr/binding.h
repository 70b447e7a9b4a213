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

#ifndef PECR_BINDING_H_
#define PECR_BINDING_H_

#include <vector>

#include "pecr/label.h"
#include "pecr/program.h"

namespace pecr {

struct BindingProfile {
  std::vector<Label> inp;   // chain of all x
  std::vector<Label> outp;  // chain of all y
  std::vector<Label> lio;   // distinct I/O labels in order of appearance
  std::vector<Label> pil;   // primary inputs
  std::vector<Label> free;  // primary inputs that are not constants
  std::vector<Label> pol;   // primary outputs
};

BindingProfile binding_profile(const ProgramList& p);

}  // namespace pecr

#endif  // PECR_BINDING_H_

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

#include <utility>

#include "pecr/proof.h"

namespace pecr {

std::vector<DocumentReport> check_documents(
    std::vector<std::pair<std::string, ProofDocument>> docs, IepStore& store,
    const AppSignature& sig, const CheckOptions& opts) {
  std::vector<DocumentReport> out;
  std::vector<bool> done(docs.size(), false);
  auto ready = [&](const ProofDocument& d) {
    for (const auto& l : d.lines) {
      if (!l.just || is_schema_label(l.just->rule)) continue;
      if (!store.find(l.just->rule)) {
        for (std::size_t j = 0; j < docs.size(); ++j)
          if (!done[j] && docs[j].second.label == l.just->rule) return false;
      }
    }
    return true;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (done[i] || !ready(docs[i].second)) continue;
      done[i] = progress = true;
      CheckResult r = check_proof(docs[i].second, store, sig, opts);
      if (r.accepted && r.theorem && !store.find(r.theorem->label))
        store.add(*r.theorem);
      out.push_back({docs[i].first, std::move(docs[i].second), std::move(r)});
    }
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (done[i]) continue;
    CheckResult r;
    r.errors.push_back("circular citation");
    out.push_back({docs[i].first, std::move(docs[i].second), std::move(r)});
  }
  return out;
}

}  // namespace pecr

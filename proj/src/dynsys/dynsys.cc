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

#include "pecr/dynsys.h"

#include <algorithm>
#include <unordered_map>

#include "pecr/lists.h"

namespace pecr {

NatArray NatArray::filled(std::vector<std::size_t> dims, std::int64_t v) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return {std::move(dims), std::vector<std::int64_t>(n, v)};
}

namespace {

std::string nested(const NatArray& a, std::size_t axis, std::size_t& pos) {
  std::string r = "[";
  for (std::size_t i = 0; i < a.dims[axis]; ++i) {
    if (i) r += ' ';
    if (axis + 1 == a.dims.size())
      r += std::to_string(a.data[pos++]);
    else
      r += nested(a, axis + 1, pos);
  }
  return r + "]";
}

template <class Cmp>
bool elementwise(const NatArray& a, const NatArray& b, Cmp cmp) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!cmp(a.data[i], b.data[i])) return false;
  return true;
}

NatArray cellwise(const NatArray& u,
                  const std::function<std::int64_t(std::int64_t)>& g) {
  NatArray v = u;
  for (auto& x : v.data) x = g(x);
  return v;
}

std::optional<Box> boxwise(
    const Box& p,
    const std::function<std::optional<std::pair<std::int64_t, std::int64_t>>(
        std::int64_t, std::int64_t)>& g) {
  Box q = p;
  for (std::size_t i = 0; i < p.lo.size(); ++i) {
    auto r = g(p.lo.data[i], p.hi.data[i]);
    if (!r) return std::nullopt;
    q.lo.data[i] = r->first;
    q.hi.data[i] = r->second;
  }
  return q;
}

void check_state(const NatArray& u, std::int64_t mnat) {
  for (auto x : u.data)
    if (x < 0 || x > mnat)
      throw ExecutionError("state " + u.str() + " outside [0, " +
                           std::to_string(mnat) + "]");
}

NatArray from_term(const Term& t, std::size_t depth) {
  if (t.is_atom()) {
    std::size_t used = 0;
    long long v = std::stoll(t.atom(), &used);
    if (used != t.atom().size() || v < 0)
      throw std::invalid_argument("not a machine number: " + t.atom());
    return {{}, {v}};
  }
  if (t.items().empty()) throw std::invalid_argument("empty array");
  if (depth > 8) throw std::invalid_argument("array nesting too deep");
  NatArray r;
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < t.items().size(); ++i) {
    NatArray c = from_term(t.items()[i], depth + 1);
    if (i == 0)
      inner = c.dims;
    else if (c.dims != inner)
      throw std::invalid_argument("ragged array");
    r.data.insert(r.data.end(), c.data.begin(), c.data.end());
  }
  r.dims = concat_lists(t.items().size(), inner);
  return r;
}

}  // namespace

std::string NatArray::str() const {
  std::size_t pos = 0;
  return nested(*this, 0, pos);
}

std::size_t NatArrayHash::operator()(const NatArray& a) const {
  std::size_t h = a.dims.size();
  for (auto x : a.data)
    h ^= std::hash<std::int64_t>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

bool eqa(const NatArray& a, const NatArray& b) {
  return elementwise(a, b, std::equal_to<>());
}
bool lta(const NatArray& a, const NatArray& b) {
  return elementwise(a, b, std::less<>());
}
bool lea(const NatArray& a, const NatArray& b) {
  return elementwise(a, b, std::less_equal<>());
}

bool subbx(const Box& q, const Box& p) {
  return lea(p.lo, q.lo) && lea(q.hi, p.hi);
}

MapSpec make_map(const std::string& name, std::int64_t N, std::int64_t c) {
  using Range = std::optional<std::pair<std::int64_t, std::int64_t>>;
  MapSpec m;
  m.name = name;
  if (name == "tent") {
    auto T = [N](std::int64_t x) -> std::int64_t {
      if (x < 0 || x > N)
        throw ExecutionError("tent map: " + std::to_string(x) +
                             " outside [0, " + std::to_string(N) + "]");
      return std::min(2 * x, 2 * (N - x));
    };
    m.apply = [T](const NatArray& u) { return cellwise(u, T); };
    m.bounder = [N, T](const Box& p) {
      return boxwise(p, [N, T](std::int64_t l, std::int64_t h) -> Range {
        if (l < 0 || h > N) return std::nullopt;
        std::int64_t lo = std::min(T(l), T(h)), hi = std::max(T(l), T(h));
        for (std::int64_t x : {N / 2, (N + 1) / 2})
          if (l <= x && x <= h) hi = std::max(hi, T(x));
        return std::pair{lo, hi};
      });
    };
  } else if (name == "identity") {
    m.apply = [](const NatArray& u) { return u; };
    m.bounder = [](const Box& p) { return std::optional<Box>(p); };
  } else if (name == "constant") {
    m.apply = [c](const NatArray& u) {
      return cellwise(u, [c](std::int64_t) { return c; });
    };
    m.bounder = [c](const Box& p) {
      return boxwise(p, [c](std::int64_t, std::int64_t) -> Range {
        return std::pair{c, c};
      });
    };
  } else if (name == "involution") {
    m.apply = [N](const NatArray& u) {
      return cellwise(u, [N](std::int64_t x) {
        if (x > N)
          throw ExecutionError("involution: " + std::to_string(x) + " > " +
                               std::to_string(N));
        return N - x;
      });
    };
    m.bounder = [N](const Box& p) {
      return boxwise(p, [N](std::int64_t l, std::int64_t h) -> Range {
        if (h > N) return std::nullopt;
        return std::pair{N - h, N - l};
      });
    };
  } else if (name == "shift") {
    m.apply = [](const NatArray& u) {
      return cellwise(u, [](std::int64_t x) { return x + 1; });
    };
    m.bounder = [](const Box& p) {
      return boxwise(p, [](std::int64_t l, std::int64_t h) -> Range {
        return std::pair{l + 1, h + 1};
      });
    };
  } else {
    throw std::invalid_argument("unknown map: " + name);
  }
  return m;
}

std::vector<std::string> map_names() {
  return {"tent", "identity", "constant", "involution", "shift"};
}

StateCount state_count(const Box& p, std::int64_t mnat) {
  StateCount r{1, false};
  for (std::size_t i = 0; i < p.lo.size(); ++i) {
    auto w = static_cast<std::uint64_t>(p.hi.data[i] - p.lo.data[i] + 1);
    if (r.count > static_cast<std::uint64_t>(mnat) / w) {
      return {static_cast<std::uint64_t>(mnat), true};
    }
    r.count *= w;
  }
  return r;
}

NatArray iterate(
    const MapSpec& f, const NatArray& u, std::int64_t n, std::int64_t mnat,
    const std::function<void(std::int64_t, const NatArray&)>& snapshot,
    std::int64_t every) {
  if (n < 0) throw std::invalid_argument("negative iteration count");
  check_state(u, mnat);
  NatArray w = u;
  if (snapshot) snapshot(0, w);
  for (std::int64_t t = 1; t <= n; ++t) {
    w = f.apply(w);
    check_state(w, mnat);
    if (snapshot && (t == n || (every > 0 && t % every == 0))) snapshot(t, w);
  }
  return w;
}

std::string format_trace_line(std::int64_t t, const NatArray& u) {
  std::string r = std::to_string(t);
  for (auto x : u.data) r += " " + std::to_string(x);
  return r;
}

Box bound_range(const MapSpec& f, const Box& p, std::int64_t mnat,
                std::uint64_t exhaustive_limit) {
  if (!p.valid()) throw std::invalid_argument("invalid box " + p.str());
  StateCount n = state_count(p, mnat);
  if (!n.saturated && n.count <= exhaustive_limit) {
    NatArray u = p.lo;
    std::optional<Box> q;
    for (;;) {
      NatArray v = f.apply(u);
      check_state(v, mnat);
      if (!q) {
        q = Box{v, v};
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
          q->lo.data[i] = std::min(q->lo.data[i], v.data[i]);
          q->hi.data[i] = std::max(q->hi.data[i], v.data[i]);
        }
      }
      std::size_t i = 0;  // odometer over the cells of p
      for (; i < u.size(); ++i) {
        if (u.data[i] < p.hi.data[i]) {
          ++u.data[i];
          break;
        }
        u.data[i] = p.lo.data[i];
      }
      if (i == u.size()) break;
    }
    return *q;
  }
  if (f.bounder) {
    if (auto q = f.bounder(p)) return *q;
  }
  throw std::invalid_argument("map " + f.name + " has no bound on " + p.str());
}

AxcCertificate certify_axc(const MapSpec& f, const Box& p, std::int64_t mnat) {
  AxcCertificate c;
  try {
    c.q = bound_range(f, p, mnat);
  } catch (const std::exception& e) {
    c.reason = e.what();
    return c;
  }
  c.certified = subbx(c.q, p);
  if (!c.certified) c.reason = "bound " + c.q.str() + " not inside " + p.str();
  return c;
}

std::optional<CycleReport> detect_cycle(const MapSpec& f, const NatArray& u0,
                                        std::uint64_t limit, std::int64_t mnat,
                                        std::size_t memory_cap) {
  auto step = [&](const NatArray& u) {
    NatArray v = f.apply(u);
    check_state(v, mnat);
    return v;
  };
  check_state(u0, mnat);
  std::unordered_map<NatArray, std::uint64_t, NatArrayHash> seen;
  NatArray u = u0;
  std::uint64_t t = 0;
  for (; t <= limit && seen.size() < memory_cap; ++t) {
    auto [it, fresh] = seen.emplace(u, t);
    if (!fresh) return CycleReport{it->second, t - it->second};
    if (t < limit) u = step(u);
  }
  if (t > limit) return std::nullopt;
  seen.clear();

  // Brent: find the period, then the first state on the cycle.
  std::uint64_t power = 1, lam = 1, used = 1;
  NatArray tortoise = u0, hare = step(u0);
  while (tortoise != hare) {
    if (used++ > limit) return std::nullopt;
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
  }
  tortoise = hare = u0;
  for (std::uint64_t i = 0; i < lam; ++i) hare = step(hare);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    if (mu + lam > limit) return std::nullopt;
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  return CycleReport{mu, lam};
}

NatArray parse_nat_array(const std::string& text) {
  Term t = Term::parse(text);
  NatArray a = from_term(t, 0);
  if (a.dims.empty()) a.dims = {1};
  return a;
}

}  // namespace pecr

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

// Fully discrete dynamical systems: elementwise maps on machine-number
// arrays, range bounding over boxes, and orbit cycle detection.

#ifndef PECR_DYNSYS_H_
#define PECR_DYNSYS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pecr {

class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NatArray {
  std::vector<std::size_t> dims;
  std::vector<std::int64_t> data;  // row-major

  static NatArray scalar(std::int64_t v) { return {{1}, {v}}; }
  static NatArray filled(std::vector<std::size_t> dims, std::int64_t v);
  std::size_t size() const { return data.size(); }
  bool same_shape(const NatArray& o) const { return dims == o.dims; }
  std::string str() const;  // nested bracket form

  auto operator<=>(const NatArray&) const = default;
};

struct NatArrayHash {
  std::size_t operator()(const NatArray& a) const;
};

// Elementwise comparisons; false when shapes differ.
bool eqa(const NatArray& a, const NatArray& b);
bool lta(const NatArray& a, const NatArray& b);
bool lea(const NatArray& a, const NatArray& b);

struct Box {
  NatArray lo;
  NatArray hi;

  bool valid() const { return lo.same_shape(hi) && lea(lo, hi); }
  bool contains(const NatArray& u) const {
    return u.same_shape(lo) && lea(lo, u) && lea(u, hi);
  }
  std::string str() const { return "[" + lo.str() + " " + hi.str() + "]"; }

  auto operator<=>(const Box&) const = default;
};

// q inside p.
bool subbx(const Box& q, const Box& p);

struct MapSpec {
  std::string name;
  // Throws ExecutionError when the argument is outside the map's domain.
  std::function<NatArray(const NatArray&)> apply;
  // Cheap enclosure of the range over a box; empty if the map has none.
  std::function<std::optional<Box>(const Box&)> bounder;
};

// Shipped maps: tent (x -> min(2x, 2(N-x))), identity, constant (x -> c),
// involution (x -> N-x) and shift (x -> x+1, bounder [lo+1, hi+1]). All act
// elementwise. Throws std::invalid_argument on an unknown name.
MapSpec make_map(const std::string& name, std::int64_t N, std::int64_t c = 0);
std::vector<std::string> map_names();

struct StateCount {
  std::uint64_t count = 0;
  bool saturated = false;  // product exceeded mnat
};

StateCount state_count(const Box& p, std::int64_t mnat);

// n-fold application. Throws ExecutionError when a state leaves [0, mnat].
// `snapshot` (if set) is called with (t, state) every `every` steps and at
// t = 0 and t = n.
NatArray iterate(
    const MapSpec& f, const NatArray& u, std::int64_t n, std::int64_t mnat,
    const std::function<void(std::int64_t, const NatArray&)>& snapshot = {},
    std::int64_t every = 1);

// "t v1 v2 ..." with the array flattened row-major.
std::string format_trace_line(std::int64_t t, const NatArray& u);

// Exact by enumeration when the box holds at most `exhaustive_limit` states,
// otherwise the map's bounder. Throws std::invalid_argument when neither
// applies, ExecutionError when f fails on a state of p.
Box bound_range(const MapSpec& f, const Box& p, std::int64_t mnat,
                std::uint64_t exhaustive_limit = 1000000);

struct AxcCertificate {
  bool certified = false;
  Box q;               // the computed bound
  std::string reason;  // empty when certified
};

AxcCertificate certify_axc(const MapSpec& f, const Box& p, std::int64_t mnat);

struct CycleReport {
  std::uint64_t tcyc = 0;  // index of the first state on the cycle
  std::uint64_t pcyc = 0;  // minimal period
  std::string str() const {
    return "tcyc=" + std::to_string(tcyc) + " pcyc=" + std::to_string(pcyc);
  }
};

// Searches the orbit of u0 for at most `limit` steps. Visited states are
// hashed until `memory_cap` entries, after which Brent's method takes over.
std::optional<CycleReport> detect_cycle(const MapSpec& f, const NatArray& u0,
                                        std::uint64_t limit, std::int64_t mnat,
                                        std::size_t memory_cap = 1 << 20);

// Parses "[1 2]" or "[[1 2] [3 4]]"; a bare number is a one-cell array.
// Throws std::invalid_argument.
NatArray parse_nat_array(const std::string& text);

}  // namespace pecr

#endif  // PECR_DYNSYS_H_

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

// Integer matrix encoding of program lists, the per-label decomposition of
// I/O matrices, AND/OR gates and the template form of I/O equivalence.

#ifndef PECR_CODEC_H_
#define PECR_CODEC_H_

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pecr/label.h"
#include "pecr/program.h"
#include "pecr/signature.h"

namespace pecr {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic,
                                Eigen::RowMajor>;
using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>;

struct LabelEncoding {
  std::uint32_t nvar = 26;
  std::size_t nx = 3;
  std::size_t ny = 1;
};

// Smallest multiple of 26 (at least 26) covering every variable id in p.
std::uint32_t default_nvar(const ProgramList& p);

struct ProgramMatrix {
  IntMatrix rows;  // n x (1 + nx + ny)
  LabelEncoding enc;
};

// Throws CapacityError when an arity exceeds enc.nx / enc.ny.
ProgramMatrix encode_program(const ProgramList& p, const LabelEncoding& enc);

// Throws std::invalid_argument on unknown pn ids, out of range cells and
// non-null cells beyond the declared arity.
ProgramList decode_program(const ProgramMatrix& m, const AppSignature& sig);

// Drops the pn column.
IntMatrix io_matrix(const ProgramMatrix& m);

Label decode_label(std::int64_t code, std::uint32_t nvar);

struct BindingMatrix {
  Label label;
  std::int64_t code = 0;
  IntMatrix u;     // code * b
  BinaryMatrix b;  // template
  bool binding = false;
};

struct DmioDecomposition {
  std::vector<BindingMatrix> parts;  // in lio order
  IntMatrix sum() const;
};

// lio lists the distinct labels to split out; cells holding any other
// nonzero code are an error (std::invalid_argument).
DmioDecomposition decompose_io_matrix(const IntMatrix& mio,
                                      const std::vector<Label>& lio,
                                      std::uint32_t nvar);

enum class GateMode { kAnd, kOr };

// Throws std::invalid_argument on a shape mismatch or non-binary cell.
BinaryMatrix gate(const BinaryMatrix& u, const BinaryMatrix& v, GateMode mode);

struct IoeqResult {
  bool equivalent = false;
  std::string failure;             // which condition failed
  std::map<Label, Label> witness;  // p-label -> q-label
};

// ioeq[q p]: q keeps every binding pattern of p (repetitions and constants).
IoeqResult ioeq_check(const ProgramList& q, const ProgramList& p);

// One row per line, space separated. Constants may be written m* and are
// then read as nvar+m.
std::string format_matrix(const IntMatrix& m);
IntMatrix parse_matrix(const std::string& text, std::uint32_t nvar);

}  // namespace pecr

#endif  // PECR_CODEC_H_

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

#include "pecr/codec.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pecr/binding.h"
#include "pecr/lists.h"

namespace pecr {

std::uint32_t default_nvar(const ProgramList& p) {
  std::uint32_t top = 0;
  for (const auto& ap : p)
    for (const auto& l : io_labels(ap))
      if (l.is_variable()) top = std::max(top, l.index());
  std::uint32_t n = 26 * ((top + 25) / 26);
  return std::max<std::uint32_t>(n, 26);
}

ProgramMatrix encode_program(const ProgramList& p, const LabelEncoding& enc) {
  ProgramMatrix m;
  m.enc = enc;
  m.rows = IntMatrix::Zero(static_cast<Eigen::Index>(p.size()),
                           static_cast<Eigen::Index>(1 + enc.nx + enc.ny));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& ap = p[i];
    if (ap.x.size() > enc.nx || ap.y.size() > enc.ny)
      throw CapacityError("row " + std::to_string(i + 1) +
                          " exceeds the encoding arity");
    auto r = static_cast<Eigen::Index>(i);
    m.rows(r, 0) = ap.pn;
    for (std::size_t j = 0; j < ap.x.size(); ++j) {
      if (ap.x[j].is_variable() && ap.x[j].index() > enc.nvar)
        throw CapacityError("variable id above nvar");
      m.rows(r, static_cast<Eigen::Index>(1 + j)) =
          static_cast<std::int64_t>(ap.x[j].code(enc.nvar));
    }
    for (std::size_t j = 0; j < ap.y.size(); ++j) {
      if (ap.y[j].index() > enc.nvar)
        throw CapacityError("variable id above nvar");
      m.rows(r, static_cast<Eigen::Index>(1 + enc.nx + j)) =
          static_cast<std::int64_t>(ap.y[j].code(enc.nvar));
    }
  }
  return m;
}

Label decode_label(std::int64_t code, std::uint32_t nvar) {
  if (code < 0) throw std::invalid_argument("negative matrix entry");
  if (code == 0) return Label();
  if (code <= nvar) return Label::variable(static_cast<std::uint32_t>(code));
  return Label::constant(static_cast<std::uint32_t>(code - nvar));
}

ProgramList decode_program(const ProgramMatrix& m, const AppSignature& sig) {
  const auto& enc = m.enc;
  if (m.rows.rows() > 0 &&
      m.rows.cols() != static_cast<Eigen::Index>(1 + enc.nx + enc.ny))
    throw std::invalid_argument("matrix width does not match nx/ny");
  ProgramList p;
  for (Eigen::Index r = 0; r < m.rows.rows(); ++r) {
    std::string where = "row " + std::to_string(r + 1) + ": ";
    auto pn = m.rows(r, 0);
    if (pn <= 0 || static_cast<std::size_t>(pn) > sig.programs.size())
      throw std::invalid_argument(where + "unknown pn id " +
                                  std::to_string(pn));
    AtomicProgram ap;
    ap.pn = static_cast<std::uint32_t>(pn);
    const auto& d = sig.program(ap.pn);
    auto read_block = [&](std::size_t offset, std::size_t width,
                          std::size_t arity, const char* what,
                          std::vector<Label>& out) {
      for (std::size_t j = 0; j < width; ++j) {
        auto cell = m.rows(r, static_cast<Eigen::Index>(offset + j));
        if (j >= arity) {
          if (cell != 0)
            throw std::invalid_argument(where + what + " where " + d.name +
                                        " declares none");
          continue;
        }
        Label l = decode_label(cell, enc.nvar);
        if (l.is_null())
          throw std::invalid_argument(where + "null inside declared arity");
        if (l.is_constant() && l.index() > sig.constants.size())
          throw std::invalid_argument(where + "constant id out of range");
        out.push_back(l);
      }
      if (arity > width)
        throw std::invalid_argument(where + d.name + " arity exceeds width");
    };
    read_block(1, enc.nx, d.in_types.size(), "input", ap.x);
    read_block(1 + enc.nx, enc.ny, d.out_types.size(), "output", ap.y);
    p.push_back(std::move(ap));
  }
  return p;
}

IntMatrix io_matrix(const ProgramMatrix& m) {
  return m.rows.rightCols(m.rows.cols() - 1);
}

IntMatrix DmioDecomposition::sum() const {
  if (parts.empty()) return IntMatrix();
  IntMatrix s = IntMatrix::Zero(parts[0].u.rows(), parts[0].u.cols());
  for (const auto& p : parts) s += p.u;
  return s;
}

DmioDecomposition decompose_io_matrix(const IntMatrix& mio,
                                      const std::vector<Label>& lio,
                                      std::uint32_t nvar) {
  DmioDecomposition d;
  for (const auto& l : lio) {
    BindingMatrix bm;
    bm.label = l;
    bm.code = static_cast<std::int64_t>(l.code(nvar));
    bm.b = (mio.array() == bm.code).cast<std::uint8_t>();
    bm.u = bm.b.cast<std::int64_t>() * bm.code;
    auto cells = bm.b.cast<int>().sum();
    bm.binding = cells >= 2 || l.is_constant();
    d.parts.push_back(std::move(bm));
  }
  IntMatrix rest = mio - d.sum();
  if (mio.size() && d.parts.empty() && (mio.array() != 0).any())
    throw std::invalid_argument("nonzero cell with no label in lio");
  if (!d.parts.empty() && (rest.array() != 0).any())
    throw std::invalid_argument("nonzero cell with no label in lio");
  return d;
}

BinaryMatrix gate(const BinaryMatrix& u, const BinaryMatrix& v, GateMode mode) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("gate shape mismatch");
  if ((u.array() > 1).any() || (v.array() > 1).any())
    throw std::invalid_argument("gate operand is not binary");
  if (mode == GateMode::kAnd) return u.cwiseMin(v);
  return u.cwiseMax(v);
}

IoeqResult ioeq_check(const ProgramList& q, const ProgramList& p) {
  IoeqResult res;
  if (q.size() != p.size()) {
    res.failure = "lengths differ";
    return res;
  }
  std::size_t nx = 0, ny = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i].pn != p[i].pn || q[i].x.size() != p[i].x.size() ||
        q[i].y.size() != p[i].y.size()) {
      res.failure =
          "program name differs at item " + std::to_string(i + 1);
      return res;
    }
    nx = std::max(nx, p[i].x.size());
    ny = std::max(ny, p[i].y.size());
  }
  std::uint32_t nvar = std::max(default_nvar(q), default_nvar(p));
  LabelEncoding enc{nvar, nx, ny};
  IntMatrix mq = io_matrix(encode_program(q, enc));
  IntMatrix mp = io_matrix(encode_program(p, enc));
  auto dq = decompose_io_matrix(mq, binding_profile(q).lio, nvar);
  auto dp = decompose_io_matrix(mp, binding_profile(p).lio, nvar);

  for (const auto& b : dp.parts) {
    if (!b.binding) {
      for (Eigen::Index r = 0; r < b.b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.b.cols(); ++c)
          if (b.b(r, c)) res.witness[b.label] = decode_label(mq(r, c), nvar);
      continue;
    }
    const BindingMatrix* best = nullptr;
    for (const auto& a : dq.parts) {
      if (b.label.is_constant() && a.label != b.label) continue;
      if (gate(a.b, b.b, GateMode::kAnd) != b.b) continue;
      if (!best || a.code < best->code) best = &a;
    }
    if (!best) {
      res.witness.clear();
      res.failure = b.label.is_constant()
                        ? "constant not preserved"
                        : "binding of a repeated label not "
                          "preserved";
      return res;
    }
    res.witness[b.label] = best->label;
  }
  res.equivalent = true;
  return res;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix parse_matrix(const std::string& text, std::uint32_t nvar) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (ls >> tok) {
      bool star = tok.back() == '*';
      if (star) tok.pop_back();
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty() || v < 0)
        throw std::invalid_argument("bad matrix entry '" + tok + "'");
      row.push_back(star ? v + nvar : v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw std::invalid_argument("ragged matrix");
    rows.push_back(std::move(row));
  }
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
  return m;
}

}  // namespace pecr

#include "fockdual/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockdual {

GLDiagram::GLDiagram(std::vector<long long> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("GLDiagram: negative row");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("GLDiagram: rows must be non-increasing");
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

long long GLDiagram::cells() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0LL);
}

std::vector<long long> GLDiagram::padded(size_t n) const {
  if (rows_.size() > n) throw std::invalid_argument("GLDiagram: diagram deeper than padding");
  std::vector<long long> out = rows_;
  out.resize(n, 0);
  return out;
}

std::vector<long long> GLDiagram::column_depths(size_t n) const {
  if (size_t(width()) > n)
    throw std::invalid_argument("GLDiagram: diagram wider than padding");
  std::vector<long long> out(n, 0);
  for (size_t c = 1; c <= size_t(width()); ++c) {
    long long depth = 0;
    for (long long r : rows_)
      if (r >= static_cast<long long>(c)) ++depth;
    out[c - 1] = depth;
  }
  return out;
}

GLDiagram GLDiagram::conjugate() const {
  std::vector<long long> cols(static_cast<size_t>(width()), 0);
  for (long long r : rows_)
    for (long long c = 0; c < r; ++c) ++cols[static_cast<size_t>(c)];
  return GLDiagram(std::move(cols));
}

std::string to_string(const GLDiagram& lam) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lam.rows().size(); ++i) os << (i ? "," : "") << lam.rows()[i];
  os << ")";
  return os.str();
}

bool OGroupDiagram::valid() const {
  if (d < 1) return false;
  // depths of any two different columns must not exceed d
  long long c1 = static_cast<long long>(shape.depth());
  long long c2 = 0;
  for (long long r : shape.rows())
    if (r >= 2) ++c2;
  return c1 + c2 <= d;
}

OGroupDiagram complementary(const OGroupDiagram& lam) {
  if (!lam.valid()) throw std::invalid_argument("complementary: invalid O(d) diagram");
  std::vector<long long> cols = lam.shape.column_depths(
      std::max<size_t>(1, static_cast<size_t>(lam.shape.width())));
  if (cols.empty()) cols.push_back(0);
  cols[0] = lam.d - cols[0];
  // the replaced first column must keep the columns non-increasing
  GLDiagram colshape(std::move(cols));
  return OGroupDiagram{colshape.conjugate(), lam.d};
}

OAlgebraDiagram::OAlgebraDiagram(std::vector<Rat> w) : w_(std::move(w)) {
  if (w_.empty()) return;
  bool half = w_.front().is_half_odd_integer();
  for (const Rat& r : w_) {
    if (!r.is_integer() && !r.is_half_odd_integer())
      throw std::invalid_argument("OAlgebraDiagram: rows must be integral or half-integral");
    if (r.is_half_odd_integer() != half)
      throw std::invalid_argument("OAlgebraDiagram: rows must all have the same parity class");
  }
  for (size_t i = 0; i + 1 < w_.size(); ++i) {
    if (w_[i] < w_[i + 1])
      throw std::invalid_argument("OAlgebraDiagram: rows must be non-increasing");
    if (i + 2 == w_.size() && w_[i] < w_[i + 1].abs())
      throw std::invalid_argument("OAlgebraDiagram: |last row| exceeds its predecessor");
    if (i + 2 < w_.size() && w_[i + 1] < Rat(0))
      throw std::invalid_argument("OAlgebraDiagram: only the last row may be negative");
  }
}

bool OAlgebraDiagram::spin() const {
  if (w_.empty()) return false;
  return w_.front().is_half_odd_integer();
}

std::string to_string(const OAlgebraDiagram& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.w().size(); ++i) os << (i ? "," : "") << w.w()[i].str();
  os << ")";
  return os.str();
}

std::string to_string(PairType t) {
  switch (t) {
    case PairType::gl_gl: return "gl-gl";
    case PairType::sp_sp: return "sp-sp";
    case PairType::o_o: return "o-o";
  }
  throw std::logic_error("unknown pair type");
}

PairType pair_type_from_string(const std::string& s) {
  if (s == "gl-gl") return PairType::gl_gl;
  if (s == "sp-sp") return PairType::sp_sp;
  if (s == "o-o") return PairType::o_o;
  throw std::invalid_argument("unknown pair type: " + s);
}

std::vector<GLDiagram> partitions_in_box(long long depth, long long width) {
  std::vector<GLDiagram> out;
  std::vector<long long> rows;
  auto rec = [&](auto&& self, long long maxw) -> void {
    out.emplace_back(std::vector<long long>(rows));
    if (static_cast<long long>(rows.size()) == depth) return;
    for (long long r = 1; r <= maxw; ++r) {
      rows.push_back(r);
      self(self, r);
      rows.pop_back();
    }
  };
  if (depth > 0) rec(rec, width);
  else out.emplace_back();
  std::sort(out.begin(), out.end(),
            [](const GLDiagram& a, const GLDiagram& b) { return a.rows() < b.rows(); });
  return out;
}

GLDiagram gl_pair(const GLDiagram& lam, int d, int k, Statistics stat) {
  if (stat == Statistics::fermion) {
    if (static_cast<long long>(lam.depth()) > d || lam.width() > k)
      throw std::invalid_argument("gl_pair: fermion diagram must fit in the d x k box");
    return lam.conjugate();
  }
  if (static_cast<long long>(lam.depth()) > std::min(d, k))
    throw std::invalid_argument("gl_pair: boson diagram depth exceeds min(d,k)");
  return lam;
}

static OAlgebraDiagram frame_partner(const GLDiagram& lam, int d, int k) {
  std::vector<long long> cols = lam.column_depths(static_cast<size_t>(k));
  std::vector<Rat> w(static_cast<size_t>(k));
  for (int tau = 1; tau <= k; ++tau)
    w[static_cast<size_t>(tau - 1)] = Rat(d, 2) - Rat(cols[static_cast<size_t>(k - tau)]);
  return OAlgebraDiagram(std::move(w));
}

PairingTable frame_fill_pairs(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("frame_fill_pairs: d and k must be positive");
  PairingTable table{PairType::o_o, d, k, {}};
  for (const GLDiagram& lam : partitions_in_box(d / 2, k)) {
    PairingEntry e;
    e.lambda = lam;
    e.w = frame_partner(lam, d, k);
    e.lambda_pm = (d % 2 == 0) && lam.row(static_cast<size_t>(d / 2)) != 0;
    e.w_pm = !e.w.w().empty() && !e.w.w().back().is_zero();
    table.entries.push_back(std::move(e));
  }
  return table;
}

PairingTable helmers_pairs(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("helmers_pairs: d and k must be positive");
  if (d % 2 != 0) throw std::invalid_argument("helmers_pairs: d must be even");
  PairingTable table{PairType::sp_sp, d, k, {}};
  for (const GLDiagram& lam : partitions_in_box(d / 2, k)) {
    PairingEntry e;
    e.lambda = lam;
    e.w = frame_partner(lam, d, k);
    table.entries.push_back(std::move(e));
  }
  return table;
}

PairingTable gl_conjugate_pairs(int d, int k) {
  if (d < 1 || k < 1)
    throw std::invalid_argument("gl_conjugate_pairs: d and k must be positive");
  PairingTable table{PairType::gl_gl, d, k, {}};
  for (const GLDiagram& lam : partitions_in_box(d, k)) {
    PairingEntry e;
    e.lambda = lam;
    std::vector<Rat> w;
    for (long long r : lam.conjugate().padded(static_cast<size_t>(k))) w.emplace_back(r);
    e.w = OAlgebraDiagram(std::move(w));
    table.entries.push_back(std::move(e));
  }
  return table;
}

OAlgebraDiagram rowe_w_from_lambda(const OGroupDiagram& lam, int k) {
  if (!lam.valid()) throw std::invalid_argument("rowe_w_from_lambda: invalid O(d) diagram");
  if (lam.shape.width() > k)
    throw std::invalid_argument("rowe_w_from_lambda: diagram wider than k columns");
  return frame_partner(lam.shape, lam.d, k);
}

std::vector<Rat> boson_dual_weights(const GLDiagram& lam, int d, int k) {
  if (static_cast<long long>(lam.depth()) > std::min(d, k))
    throw std::invalid_argument("boson_dual_weights: diagram depth exceeds min(d,k)");
  std::vector<long long> rows = lam.padded(static_cast<size_t>(k));
  std::vector<Rat> w(static_cast<size_t>(k));
  for (int tau = 1; tau <= k; ++tau)
    w[static_cast<size_t>(tau - 1)] = -Rat(rows[static_cast<size_t>(k - tau)]) - Rat(d, 2);
  return w;
}

std::vector<OAlgebraDiagram> o_group_to_algebra(const OGroupDiagram& lam) {
  if (!lam.valid()) throw std::invalid_argument("o_group_to_algebra: invalid O(d) diagram");
  if (2 * lam.first_column() > lam.d) {
    // complementary partners share one algebra diagram, read from the partner
    // with the shallow first column
    return o_group_to_algebra(complementary(lam));
  }
  size_t half = static_cast<size_t>(lam.d / 2);
  std::vector<long long> rows = lam.shape.padded(std::max(lam.shape.depth(), half));
  std::vector<Rat> w(half);
  for (size_t p = 0; p < half; ++p) w[p] = Rat(rows[p]);
  if (lam.self_complementary() && !w.empty() && !w.back().is_zero()) {
    std::vector<Rat> wneg = w;
    wneg.back() = -wneg.back();
    return {OAlgebraDiagram(w), OAlgebraDiagram(wneg)};
  }
  return {OAlgebraDiagram(w)};
}

static std::string render_row(const Rat& len) {
  std::string out;
  Rat a = len.abs();
  if (len < Rat(0)) out += "-";
  long long full = a.num() / a.den();
  bool half = !a.is_integer();
  if (half) out += "|";
  for (long long i = 0; i < full; ++i) out += "[]";
  return out;
}

std::vector<std::string> render_diagram(const GLDiagram& lam) {
  if (lam.depth() == 0) return {"(empty)"};
  std::vector<std::string> lines;
  for (long long r : lam.rows()) lines.push_back(render_row(Rat(r)));
  return lines;
}

std::vector<std::string> render_diagram(const OAlgebraDiagram& w) {
  bool all_zero = true;
  for (const Rat& r : w.w())
    if (!r.is_zero()) all_zero = false;
  if (w.w().empty() || all_zero) return {"(empty)"};
  std::vector<std::string> lines;
  for (const Rat& r : w.w())
    if (!r.is_zero()) lines.push_back(render_row(r));
  return lines;
}

}  // namespace fockdual

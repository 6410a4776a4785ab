#include "fockdual/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockdual {

void SparseVec::scale(const Rat& c) {
  if (c.is_zero()) {
    entries.clear();
    return;
  }
  for (auto& [i, v] : entries) v *= c;
}

void SparseVec::axpy(const Rat& c, const SparseVec& other) {
  if (c.is_zero() || other.empty()) return;
  std::vector<std::pair<uint64_t, Rat>> out;
  out.reserve(entries.size() + other.entries.size());
  size_t i = 0, j = 0;
  while (i < entries.size() || j < other.entries.size()) {
    if (j == other.entries.size() ||
        (i < entries.size() && entries[i].first < other.entries[j].first)) {
      out.push_back(entries[i++]);
    } else if (i == entries.size() || other.entries[j].first < entries[i].first) {
      out.emplace_back(other.entries[j].first, c * other.entries[j].second);
      ++j;
    } else {
      Rat v = entries[i].second + c * other.entries[j].second;
      if (!v.is_zero()) out.emplace_back(entries[i].first, v);
      ++i;
      ++j;
    }
  }
  entries = std::move(out);
}

void SparseVec::normalize_leading() {
  if (entries.empty()) return;
  Rat inv = entries.front().second.inv();
  if (inv == Rat(1)) return;
  for (auto& [i, v] : entries) v *= inv;
}

SparseVec sparse_from_map(const std::map<uint64_t, Rat>& m) {
  SparseVec v;
  v.entries.reserve(m.size());
  for (const auto& [i, c] : m)
    if (!c.is_zero()) v.entries.emplace_back(i, c);
  return v;
}

SparseVec Echelon::reduce(SparseVec v) const {
  // A stored row's entries never precede its pivot, so eliminating the entry
  // at position pos leaves everything before pos untouched.
  size_t pos = 0;
  while (pos < v.entries.size()) {
    auto it = rows_.find(v.entries[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    v.axpy(-v.entries[pos].second, it->second);
  }
  return v;
}

bool Echelon::insert(SparseVec v) { return insert_get(std::move(v)) != nullptr; }

const SparseVec* Echelon::insert_get(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return nullptr;
  v.normalize_leading();
  uint64_t pivot = v.leading().first;
  auto [it, ok] = rows_.emplace(pivot, std::move(v));
  return &it->second;
}

std::vector<std::vector<Rat>> kernel_of_columns(const std::vector<SparseVec>& columns) {
  size_t m = columns.size();
  // pivot index -> (reduced image, combination over original columns)
  std::map<uint64_t, std::pair<SparseVec, std::vector<Rat>>> rows;
  std::vector<std::vector<Rat>> kernel;
  for (size_t j = 0; j < m; ++j) {
    SparseVec v = columns[j];
    std::vector<Rat> comb(m);
    comb[j] = Rat(1);
    while (!v.empty()) {
      auto it = rows.find(v.leading().first);
      if (it == rows.end()) break;
      Rat c = -v.leading().second;
      v.axpy(c, it->second.first);
      for (size_t t = 0; t < m; ++t) comb[t] += c * it->second.second[t];
    }
    if (v.empty()) {
      // normalize: first nonzero coordinate +1
      size_t lead = 0;
      while (lead < m && comb[lead].is_zero()) ++lead;
      Rat inv = comb[lead].inv();
      for (auto& c : comb) c *= inv;
      kernel.push_back(std::move(comb));
    } else {
      Rat inv = v.leading().second.inv();
      v.scale(inv);
      for (auto& c : comb) c *= inv;
      rows.emplace(v.leading().first, std::make_pair(std::move(v), std::move(comb)));
    }
  }
  return kernel;
}

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t l = 0; l < cols_; ++l) {
      const Rat& a = at(i, l);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(l, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix out(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

void SparseMatrix::set(size_t i, size_t j, const Rat& v) {
  if (j >= cols_.size()) cols_.resize(j + 1);
  if (v.is_zero())
    cols_[j].erase(i);
  else
    cols_[j][i] = v;
}

Rat SparseMatrix::get(size_t i, size_t j) const {
  if (j >= cols_.size()) return Rat(0);
  auto it = cols_[j].find(i);
  return it == cols_[j].end() ? Rat(0) : it->second;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix out(nrows_, o.cols());
  for (size_t j = 0; j < o.cols(); ++j) {
    std::map<size_t, Rat> col;
    for (const auto& [l, b] : o.column(j)) {
      if (l >= cols_.size()) continue;
      for (const auto& [i, a] : cols_[l]) {
        Rat& acc = col[i];
        acc += a * b;
        if (acc.is_zero()) col.erase(i);
      }
    }
    for (const auto& [i, v] : col) out.set(i, j, v);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols())
    throw std::invalid_argument("SparseMatrix: shape mismatch");
  SparseMatrix out(nrows_, cols());
  for (size_t j = 0; j < cols(); ++j) {
    std::map<size_t, Rat> col = cols_[j];
    for (const auto& [i, v] : o.column(j)) {
      Rat& acc = col[i];
      acc -= v;
      if (acc.is_zero()) col.erase(i);
    }
    for (const auto& [i, v] : col) out.set(i, j, v);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero();
}

}  // namespace fockdual

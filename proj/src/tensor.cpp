#include "fockdual/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockdual {

namespace {

constexpr long long kTensorGuard = 1000000;

void check_tensor_guard(int n, int d) {
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= d;
    if (size > kTensorGuard) throw guard_error("tensor space exceeds the d^n guard");
  }
}

// permutations of 0..n-1
using Perm = std::vector<int>;

int perm_sign(const Perm& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = size_t(p[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// all permutations fixing each block of the partition of {0..n-1}
std::vector<Perm> block_permutations(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Perm> out{Perm(size_t(n))};
  for (auto& p : out)
    for (int i = 0; i < n; ++i) p[size_t(i)] = i;
  for (const auto& block : blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> arrangement = sorted;
    std::vector<Perm> next;
    do {
      for (const Perm& base : out) {
        Perm p = base;
        for (size_t i = 0; i < sorted.size(); ++i) p[size_t(sorted[i])] = arrangement[i];
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(next);
  }
  return out;
}

// tensor slots permuted: (s T)(p_1, ..., p_n) = T(p_{s(1)}, ..., p_{s(n)}),
// so a unit tensor at `tuple` moves to the tuple with entry tuple_i at slot s(i)
Tensor perm_act(const Perm& s, const Tensor& t) {
  Tensor out(t.rank(), t.range());
  for (const auto& [tuple, c] : t.values()) {
    std::vector<int> p(size_t(t.rank()));
    for (size_t i = 0; i < p.size(); ++i) p[size_t(s[i])] = tuple[i];
    out.add(p, c);
  }
  return out;
}

}  // namespace

Tensor::Tensor(int n, int d) : n_(n), d_(d) {
  if (n < 0 || d < 1) throw std::invalid_argument("Tensor: rank >= 0 and range >= 1 required");
  check_tensor_guard(n, d);
}

Rat Tensor::value(const std::vector<int>& tuple) const {
  auto it = vals_.find(tuple);
  return it == vals_.end() ? Rat(0) : it->second;
}

void Tensor::add(const std::vector<int>& tuple, const Rat& c) {
  if (tuple.size() != size_t(n_)) throw std::invalid_argument("Tensor: tuple length mismatch");
  for (int p : tuple)
    if (p < 1 || p > d_) throw std::out_of_range("Tensor: index outside 1..d");
  if (c.is_zero()) return;
  Rat& acc = vals_[tuple];
  acc += c;
  if (acc.is_zero()) vals_.erase(tuple);
}

Tensor Tensor::scaled(const Rat& c) const {
  Tensor out(n_, d_);
  if (!c.is_zero())
    for (const auto& [tuple, v] : vals_) out.vals_[tuple] = v * c;
  return out;
}

void Tensor::add_scaled(const Tensor& other, const Rat& c) {
  if (other.n_ != n_ || other.d_ != d_) throw std::invalid_argument("Tensor: shape mismatch");
  for (const auto& [tuple, v] : other.vals_) add(tuple, v * c);
}

Tableau::Tableau(const GLDiagram& lam) : shape(lam) {
  int i = 0;
  const auto& rows = lam.rows();
  for (size_t r = 0; r < rows.size(); ++r)
    for (long long c = 1; c <= rows[r]; ++c) {
      rho.push_back(int(r + 1));
      kappa.push_back(int(c));
      ++i;
    }
}

Tensor chi_lambda(const GLDiagram& lam, int d) {
  Tableau tab(lam);
  int n = int(tab.rho.size());
  Tensor out(n, d);
  if (static_cast<long long>(lam.depth()) > d) return out;  // identically zero
  std::vector<int> tuple(tab.rho.begin(), tab.rho.end());
  out.add(tuple, Rat(1));
  return out;
}

namespace {

// the two permutation families of the reading-order tableau
std::vector<std::vector<int>> tableau_rows(const Tableau& tab) {
  std::vector<std::vector<int>> rows(tab.shape.depth());
  for (size_t i = 0; i < tab.rho.size(); ++i) rows[size_t(tab.rho[i] - 1)].push_back(int(i));
  return rows;
}

std::vector<std::vector<int>> tableau_columns(const Tableau& tab) {
  std::vector<std::vector<int>> cols(size_t(tab.shape.width()));
  for (size_t i = 0; i < tab.kappa.size(); ++i) cols[size_t(tab.kappa[i] - 1)].push_back(int(i));
  return cols;
}

Tensor young_raw(const GLDiagram& lam, const Tensor& t) {
  Tableau tab(lam);
  int n = int(tab.rho.size());
  if (t.rank() != n) throw std::invalid_argument("young_symmetrize: rank must equal |lambda|");
  // row sums first, then signed column sums
  Tensor rowsum(t.rank(), t.range());
  for (const Perm& s : block_permutations(n, tableau_rows(tab)))
    rowsum.add_scaled(perm_act(s, t), Rat(1));
  Tensor out(t.rank(), t.range());
  for (const Perm& s : block_permutations(n, tableau_columns(tab)))
    out.add_scaled(perm_act(s, rowsum), Rat(perm_sign(s)));
  return out;
}

}  // namespace

Tensor young_symmetrize(const GLDiagram& lam, const Tensor& t) {
  Tensor once = young_raw(lam, t);
  if (once.is_zero()) return once;
  // Y_raw^2 = gamma Y_raw on the image; solve gamma on a witness tensor with
  // the full index range so the witness cannot vanish
  int n = int(lam.cells());
  int witness_d = std::max(1, n);
  Tensor wit = chi_lambda(lam, witness_d);
  Tensor u = young_raw(lam, wit);
  if (u.is_zero()) throw std::logic_error("young_symmetrize: witness projection vanished");
  Tensor uu = young_raw(lam, u);
  const auto& [tuple, c] = *u.values().begin();
  Rat gamma = uu.value(tuple) / c;
  if (gamma.is_zero()) throw std::logic_error("young_symmetrize: zero normalization");
  return once.scaled(gamma.inv());
}

Tensor chi_hw(const GLDiagram& lam, int d) {
  Tensor chi = chi_lambda(lam, d);
  if (chi.is_zero()) return chi;
  return young_symmetrize(lam, chi);
}

Tensor gl_act(const RatMatrix& x, const Tensor& t) {
  if (x.rows() != size_t(t.range()) || x.cols() != size_t(t.range()))
    throw std::invalid_argument("gl_act: matrix must be d x d");
  Tensor out(t.rank(), t.range());
  for (const auto& [tuple, c] : t.values()) {
    for (size_t i = 0; i < tuple.size(); ++i) {
      for (int p = 1; p <= t.range(); ++p) {
        const Rat& m = x.at(size_t(p - 1), size_t(tuple[i] - 1));
        if (m.is_zero()) continue;
        std::vector<int> target = tuple;
        target[i] = p;
        out.add(target, c * m);
      }
    }
  }
  return out;
}

Tensor group_act(const RatMatrix& g, const Tensor& t) {
  if (g.rows() != size_t(t.range()) || g.cols() != size_t(t.range()))
    throw std::invalid_argument("group_act: matrix must be d x d");
  Tensor out(t.rank(), t.range());
  std::vector<int> target(size_t(t.rank()));
  for (const auto& [tuple, c] : t.values()) {
    // expand the product over slots, skipping zero matrix entries
    auto rec = [&](auto&& self, size_t slot, const Rat& acc) -> void {
      if (slot == tuple.size()) {
        out.add(target, acc);
        return;
      }
      for (int p = 1; p <= t.range(); ++p) {
        const Rat& m = g.at(size_t(p - 1), size_t(tuple[slot] - 1));
        if (m.is_zero()) continue;
        target[slot] = p;
        self(self, slot + 1, acc * m);
      }
    };
    rec(rec, 0, c);
  }
  return out;
}

bool is_traceless(const Tensor& t, const BilinearForm& b) {
  if (t.rank() < 2) return true;
  if (b.d() != t.range()) throw std::invalid_argument("is_traceless: dimension mismatch");
  int n = t.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::map<std::vector<int>, Rat> contracted;
      for (const auto& [tuple, c] : t.values()) {
        Rat w = b.entry(tuple[size_t(i)], tuple[size_t(j)]);
        if (w.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(size_t(n - 2));
        for (int s = 0; s < n; ++s)
          if (s != i && s != j) rest.push_back(tuple[size_t(s)]);
        Rat& acc = contracted[rest];
        acc += w * c;
        if (acc.is_zero()) contracted.erase(rest);
      }
      if (!contracted.empty()) return false;
    }
  return true;
}

RatMatrix e_matrix(int p, int q, int d) {
  RatMatrix m(static_cast<size_t>(d), static_cast<size_t>(d));
  m.at(size_t(p - 1), size_t(q - 1)) = Rat(1);
  return m;
}

RatMatrix r_matrix(int d) {
  RatMatrix m = RatMatrix::identity(size_t(d));
  if (d % 2 == 1) {
    int mid = (d + 1) / 2;
    m.at(size_t(mid - 1), size_t(mid - 1)) = Rat(-1);
  } else {
    int a = d / 2, b = d / 2 + 1;
    m.at(size_t(a - 1), size_t(a - 1)) = Rat(0);
    m.at(size_t(b - 1), size_t(b - 1)) = Rat(0);
    m.at(size_t(a - 1), size_t(b - 1)) = Rat(1);
    m.at(size_t(b - 1), size_t(a - 1)) = Rat(1);
  }
  return m;
}

RatMatrix ebar_matrix(int p, int q, int d) {
  return e_matrix(p, q, d) - e_matrix(d + 1 - q, d + 1 - p, d);
}

Tensor r_act(const Tensor& t) { return group_act(r_matrix(t.range()), t); }

}  // namespace fockdual

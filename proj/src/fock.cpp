#include "fockdual/fock.hpp"

#include <algorithm>

namespace fockdual {

namespace {
int g_max_modes = 24;
}

int max_full_basis_modes() { return g_max_modes; }
void set_max_full_basis_modes(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("full-basis guard must be in 1..30");
  g_max_modes = n;
}

std::vector<ModeIndex> FockState::occupied_modes() const {
  std::vector<ModeIndex> out;
  for (int m = 0; m < n_modes(); ++m)
    if ((bits >> m) & 1u) out.push_back(mode_from_number(m, d, k));
  return out;
}

FockState vacuum(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("vacuum: d and k must be positive");
  if (d * k > 63) throw std::invalid_argument("vacuum: d*k exceeds 63 modes");
  return FockState{0, d, k};
}

static int preceding_sign(uint64_t bits, int mode) {
  uint64_t below = bits & ((uint64_t(1) << mode) - 1);
  return (__builtin_popcountll(below) & 1) ? -1 : 1;
}

std::optional<SignedState> apply_creation(const FockState& s, const ModeIndex& m) {
  int mode = mode_number(m, s.d, s.k);
  if ((s.bits >> mode) & 1u) return std::nullopt;
  FockState t = s;
  t.bits |= uint64_t(1) << mode;
  return SignedState{preceding_sign(s.bits, mode), t};
}

std::optional<SignedState> apply_annihilation(const FockState& s, const ModeIndex& m) {
  int mode = mode_number(m, s.d, s.k);
  if (!((s.bits >> mode) & 1u)) return std::nullopt;
  FockState t = s;
  t.bits &= ~(uint64_t(1) << mode);
  return SignedState{preceding_sign(s.bits, mode), t};
}

StateVector StateVector::unit(const FockState& s, const Rat& c) {
  StateVector v(s.d, s.k);
  v.add(s.bits, c);
  return v;
}

Rat StateVector::coeff(const FockState& s) const {
  auto it = terms_.find(s.bits);
  return it == terms_.end() ? Rat(0) : it->second;
}

void StateVector::add(uint64_t bits, const Rat& c) {
  if (c.is_zero()) return;
  Rat& acc = terms_[bits];
  acc += c;
  if (acc.is_zero()) terms_.erase(bits);
}

void StateVector::add(const FockState& s, const Rat& c) {
  if (s.d != d_ || s.k != k_) throw std::invalid_argument("StateVector: (d,k) mismatch");
  add(s.bits, c);
}

void StateVector::add_scaled(const StateVector& other, const Rat& c) {
  if (other.d_ != d_ || other.k_ != k_)
    throw std::invalid_argument("StateVector: (d,k) mismatch");
  for (const auto& [bits, v] : other.terms_) add(bits, c * v);
}

StateVector StateVector::scaled(const Rat& c) const {
  StateVector out(d_, k_);
  if (!c.is_zero())
    for (const auto& [bits, v] : terms_) out.terms_[bits] = c * v;
  return out;
}

SparseVec StateVector::to_sparse() const { return sparse_from_map(terms_); }

StateVector StateVector::from_sparse(const SparseVec& v, int d, int k) {
  StateVector out(d, k);
  for (const auto& [bits, c] : v.entries) out.add(bits, c);
  return out;
}

void QuadraticOperator::add_cc(int m1, int m2, const Rat& c) {
  check_mode(m1);
  check_mode(m2);
  if (m1 == m2 || c.is_zero()) return;
  Rat v = c;
  if (m1 > m2) {
    std::swap(m1, m2);
    v = -v;
  }
  Rat& acc = cc_[{m1, m2}];
  acc += v;
  if (acc.is_zero()) cc_.erase({m1, m2});
}

void QuadraticOperator::add_ca(int m1, int m2, const Rat& c) {
  check_mode(m1);
  check_mode(m2);
  if (c.is_zero()) return;
  Rat& acc = ca_[{m1, m2}];
  acc += c;
  if (acc.is_zero()) ca_.erase({m1, m2});
}

void QuadraticOperator::add_aa(int m1, int m2, const Rat& c) {
  check_mode(m1);
  check_mode(m2);
  if (m1 == m2 || c.is_zero()) return;
  Rat v = c;
  if (m1 > m2) {
    std::swap(m1, m2);
    v = -v;
  }
  Rat& acc = aa_[{m1, m2}];
  acc += v;
  if (acc.is_zero()) aa_.erase({m1, m2});
}

void QuadraticOperator::add_product(const FieldOp& x, const FieldOp& y, const Rat& c) {
  if (c.is_zero()) return;
  if (x.dagger && y.dagger) {
    add_cc(x.mode, y.mode, c);
  } else if (x.dagger && !y.dagger) {
    add_ca(x.mode, y.mode, c);
  } else if (!x.dagger && !y.dagger) {
    add_aa(x.mode, y.mode, c);
  } else {
    // a_m a_{m'}^+ = delta - a_{m'}^+ a_m
    if (x.mode == y.mode) add_scalar(c);
    add_ca(y.mode, x.mode, -c);
  }
}

QuadraticOperator& QuadraticOperator::operator+=(const QuadraticOperator& o) {
  if (o.d_ != d_ || o.k_ != k_) throw std::invalid_argument("QuadraticOperator: (d,k) mismatch");
  for (const auto& [mm, c] : o.cc_) add_cc(mm.first, mm.second, c);
  for (const auto& [mm, c] : o.ca_) add_ca(mm.first, mm.second, c);
  for (const auto& [mm, c] : o.aa_) add_aa(mm.first, mm.second, c);
  scalar_ += o.scalar_;
  return *this;
}

QuadraticOperator& QuadraticOperator::operator-=(const QuadraticOperator& o) {
  if (o.d_ != d_ || o.k_ != k_) throw std::invalid_argument("QuadraticOperator: (d,k) mismatch");
  for (const auto& [mm, c] : o.cc_) add_cc(mm.first, mm.second, -c);
  for (const auto& [mm, c] : o.ca_) add_ca(mm.first, mm.second, -c);
  for (const auto& [mm, c] : o.aa_) add_aa(mm.first, mm.second, -c);
  scalar_ -= o.scalar_;
  return *this;
}

QuadraticOperator& QuadraticOperator::operator*=(const Rat& c) {
  if (c.is_zero()) {
    cc_.clear();
    ca_.clear();
    aa_.clear();
    scalar_ = Rat(0);
    return *this;
  }
  for (auto& [mm, v] : cc_) v *= c;
  for (auto& [mm, v] : ca_) v *= c;
  for (auto& [mm, v] : aa_) v *= c;
  scalar_ *= c;
  return *this;
}

std::vector<std::tuple<FieldOp, FieldOp, Rat>> QuadraticOperator::monomials() const {
  std::vector<std::tuple<FieldOp, FieldOp, Rat>> out;
  out.reserve(cc_.size() + ca_.size() + aa_.size());
  for (const auto& [mm, c] : cc_)
    out.emplace_back(FieldOp{mm.first, true}, FieldOp{mm.second, true}, c);
  for (const auto& [mm, c] : ca_)
    out.emplace_back(FieldOp{mm.first, true}, FieldOp{mm.second, false}, c);
  for (const auto& [mm, c] : aa_)
    out.emplace_back(FieldOp{mm.first, false}, FieldOp{mm.second, false}, c);
  return out;
}

static std::optional<SignedState> apply_field(const FockState& s, const FieldOp& f, int d,
                                              int k) {
  ModeIndex m = mode_from_number(f.mode, d, k);
  return f.dagger ? apply_creation(s, m) : apply_annihilation(s, m);
}

StateVector QuadraticOperator::apply(const StateVector& v) const {
  if (v.d() != d_ || v.k() != k_)
    throw std::invalid_argument("QuadraticOperator::apply: (d,k) mismatch");
  StateVector out(d_, k_);
  auto monos = monomials();
  for (const auto& [bits, c] : v.terms()) {
    FockState s{bits, d_, k_};
    if (!scalar_.is_zero()) out.add(bits, scalar_ * c);
    for (const auto& [x, y, w] : monos) {
      // monomial x y acts right to left
      auto first = apply_field(s, y, d_, k_);
      if (!first) continue;
      auto second = apply_field(first->state, x, d_, k_);
      if (!second) continue;
      out.add(second->state.bits, c * w * Rat(first->sign * second->sign));
    }
  }
  return out;
}

SparseVec QuadraticOperator::coefficient_vector() const {
  const uint64_t M = uint64_t(n_modes());
  std::map<uint64_t, Rat> m;
  for (const auto& [mm, c] : cc_) m[0 * M * M + uint64_t(mm.first) * M + mm.second] = c;
  for (const auto& [mm, c] : ca_) m[1 * M * M + uint64_t(mm.first) * M + mm.second] = c;
  for (const auto& [mm, c] : aa_) m[2 * M * M + uint64_t(mm.first) * M + mm.second] = c;
  if (!scalar_.is_zero()) m[3 * M * M] = scalar_;
  return sparse_from_map(m);
}

QuadraticOperator bracket(const QuadraticOperator& a, const QuadraticOperator& b) {
  if (a.d() != b.d() || a.k() != b.k())
    throw std::invalid_argument("bracket: (d,k) mismatch");
  QuadraticOperator out(a.d(), a.k());
  auto anti = [](const FieldOp& x, const FieldOp& y) -> int {
    return (x.mode == y.mode && x.dagger != y.dagger) ? 1 : 0;
  };
  // For fermionic field operators with scalar anticommutators,
  // [AB, CD] = {B,C} AD - {A,C} BD + {B,D} CA - {A,D} CB.
  for (const auto& [A, B, ca] : a.monomials()) {
    for (const auto& [C, D, cb] : b.monomials()) {
      Rat c = ca * cb;
      if (int s = anti(B, C)) out.add_product(A, D, c * Rat(s));
      if (int s = anti(A, C)) out.add_product(B, D, -c * Rat(s));
      if (int s = anti(B, D)) out.add_product(C, A, c * Rat(s));
      if (int s = anti(A, D)) out.add_product(C, B, -c * Rat(s));
    }
  }
  return out;
}

std::vector<FockState> full_basis(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("full_basis: d and k must be positive");
  int n = d * k;
  if (n > max_full_basis_modes())
    throw guard_error("full_basis: d*k = " + std::to_string(n) + " exceeds the guard of " +
                      std::to_string(max_full_basis_modes()) + " modes");
  std::vector<FockState> out;
  out.reserve(size_t(1) << n);
  for (uint64_t bits = 0; bits < (uint64_t(1) << n); ++bits) out.push_back(FockState{bits, d, k});
  return out;
}

SparseMatrix matrix_of(const QuadraticOperator& op, const std::vector<FockState>& basis) {
  std::map<uint64_t, size_t> index;
  for (size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].d != op.d() || basis[j].k != op.k())
      throw std::invalid_argument("matrix_of: (d,k) mismatch");
    if (!index.emplace(basis[j].bits, j).second)
      throw std::invalid_argument("matrix_of: repeated basis state");
  }
  SparseMatrix m(basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    StateVector image = op.apply(basis[j]);
    for (const auto& [bits, c] : image.terms()) {
      auto it = index.find(bits);
      if (it == index.end())
        throw std::invalid_argument("matrix_of: image leaves the spanned basis");
      m.set(it->second, j, c);
    }
  }
  return m;
}

}  // namespace fockdual

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockdual/linalg.hpp"
#include "fockdual/rational.hpp"

namespace fockdual {

// Thrown when a request would exceed the full-basis resource guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full-basis construction is capped at this many modes (default 24, i.e.
// 16.7M states). Adjustable for the CLI via FOCK_MAX_DK.
int max_full_basis_modes();
void set_max_full_basis_modes(int n);

// One fermionic mode: orbital p in 1..d, kind tau in 1..k.
struct ModeIndex {
  int p = 1;
  int tau = 1;
  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

// Canonical linear order of the d*k modes; this choice fixes every fermionic
// sign in the library.
inline int mode_number(const ModeIndex& m, int d, int k) {
  if (m.p < 1 || m.p > d || m.tau < 1 || m.tau > k)
    throw std::out_of_range("mode index out of range");
  return (m.p - 1) * k + (m.tau - 1);
}
inline ModeIndex mode_from_number(int mode, int d, int k) {
  if (mode < 0 || mode >= d * k) throw std::out_of_range("mode number out of range");
  return ModeIndex{mode / k + 1, mode % k + 1};
}

// Occupation-number basis state over d*k modes, one bit per mode. The state
// with occupied modes m1 < m2 < ... < mn stands for a_{m1}^+ a_{m2}^+ ...
// a_{mn}^+ applied to the vacuum, in that order.
struct FockState {
  uint64_t bits = 0;
  int d = 1;
  int k = 1;

  int n_modes() const { return d * k; }
  int particle_count() const { return __builtin_popcountll(bits); }
  bool occupied(const ModeIndex& m) const { return (bits >> mode_number(m, d, k)) & 1u; }
  std::vector<ModeIndex> occupied_modes() const;

  friend auto operator<=>(const FockState&, const FockState&) = default;
};

FockState vacuum(int d, int k);

struct SignedState {
  int sign = 1;  // +1 or -1
  FockState state;
};

// a_m^+ applied to s: null when m is occupied, otherwise sign
// (-1)^(number of occupied modes preceding m in canonical order).
std::optional<SignedState> apply_creation(const FockState& s, const ModeIndex& m);
// a_m applied to s: null when m is empty, same sign rule.
std::optional<SignedState> apply_annihilation(const FockState& s, const ModeIndex& m);

// Exact linear combination of basis states sharing one (d, k).
class StateVector {
 public:
  StateVector() = default;
  StateVector(int d, int k) : d_(d), k_(k) {}
  static StateVector unit(const FockState& s, const Rat& c = Rat(1));

  int d() const { return d_; }
  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<uint64_t, Rat>& terms() const { return terms_; }

  Rat coeff(const FockState& s) const;
  void add(uint64_t bits, const Rat& c);
  void add(const FockState& s, const Rat& c);
  void add_scaled(const StateVector& other, const Rat& c);
  StateVector scaled(const Rat& c) const;

  SparseVec to_sparse() const;
  static StateVector from_sparse(const SparseVec& v, int d, int k);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int d_ = 1, k_ = 1;
  std::map<uint64_t, Rat> terms_;
};

// A single creation or annihilation operator, for building quadratics.
struct FieldOp {
  int mode = 0;
  bool dagger = false;
};

// Normal-ordered quadratic form in the field operators:
//   sum cc[m<m'] a_m^+ a_m'^+  +  sum ca[m,m'] a_m^+ a_m'  +
//   sum aa[m<m'] a_m a_m'      +  scalar.
// The normal-ordered coefficient arrays are a canonical form, so equality of
// operators is equality of coefficients. Brackets of quadratics are again
// quadratic, which keeps every Lie-algebra computation symbolic.
class QuadraticOperator {
 public:
  QuadraticOperator() = default;
  QuadraticOperator(int d, int k) : d_(d), k_(k) {}

  int d() const { return d_; }
  int k() const { return k_; }
  int n_modes() const { return d_ * k_; }

  bool is_zero() const { return cc_.empty() && ca_.empty() && aa_.empty() && scalar_.is_zero(); }
  const Rat& scalar() const { return scalar_; }
  const std::map<std::pair<int, int>, Rat>& cc() const { return cc_; }
  const std::map<std::pair<int, int>, Rat>& ca() const { return ca_; }
  const std::map<std::pair<int, int>, Rat>& aa() const { return aa_; }

  void add_scalar(const Rat& c) { scalar_ += c; }
  // a_{m1}^+ a_{m2}^+ ; antisymmetrized into m1 < m2
  void add_cc(int m1, int m2, const Rat& c);
  // a_{m1}^+ a_{m2} ; already normal ordered for any pair
  void add_ca(int m1, int m2, const Rat& c);
  // a_{m1} a_{m2} ; antisymmetrized into m1 < m2
  void add_aa(int m1, int m2, const Rat& c);
  // general product of two field operators, normal ordered on insertion
  void add_product(const FieldOp& x, const FieldOp& y, const Rat& c);

  QuadraticOperator& operator+=(const QuadraticOperator& o);
  QuadraticOperator& operator-=(const QuadraticOperator& o);
  QuadraticOperator& operator*=(const Rat& c);
  friend QuadraticOperator operator+(QuadraticOperator a, const QuadraticOperator& b) {
    return a += b;
  }
  friend QuadraticOperator operator-(QuadraticOperator a, const QuadraticOperator& b) {
    return a -= b;
  }
  friend QuadraticOperator operator*(QuadraticOperator a, const Rat& c) { return a *= c; }

  friend bool operator==(const QuadraticOperator&, const QuadraticOperator&) = default;

  // enumerate the quadratic monomials as (first factor, second factor, coeff)
  std::vector<std::tuple<FieldOp, FieldOp, Rat>> monomials() const;

  StateVector apply(const StateVector& v) const;
  StateVector apply(const FockState& s) const { return apply(StateVector::unit(s)); }

  // Coefficient vector over a fixed monomial indexing, for exact span
  // arithmetic on operators (closure and conjugation-invariance checks).
  SparseVec coefficient_vector() const;

 private:
  void check_mode(int m) const {
    if (m < 0 || m >= n_modes()) throw std::out_of_range("mode out of range");
  }

  int d_ = 1, k_ = 1;
  std::map<std::pair<int, int>, Rat> cc_, ca_, aa_;
  Rat scalar_;
};

// Symbolic normal-ordered commutator [A, B].
QuadraticOperator bracket(const QuadraticOperator& a, const QuadraticOperator& b);

// All 2^(d*k) basis states in canonical (bit-pattern) order. Guarded.
std::vector<FockState> full_basis(int d, int k);

// Matrix of the operator on an ordered list of basis states; throws if the
// image of a basis state leaves the span (the full basis never does).
SparseMatrix matrix_of(const QuadraticOperator& op, const std::vector<FockState>& basis);

}  // namespace fockdual

#pragma once

#include <map>
#include <vector>

#include "fockdual/diagram.hpp"
#include "fockdual/dual_pair.hpp"
#include "fockdual/linalg.hpp"

namespace fockdual {

// Rank-n tensor over index range 1..d with exact rational values. Rank 0 is
// allowed; it holds a single value at the empty tuple. Dense tuple tables are
// guarded by d^n <= 10^6.
class Tensor {
 public:
  Tensor(int n, int d);

  int rank() const { return n_; }
  int range() const { return d_; }
  bool is_zero() const { return vals_.empty(); }
  const std::map<std::vector<int>, Rat>& values() const { return vals_; }

  Rat value(const std::vector<int>& tuple) const;
  void add(const std::vector<int>& tuple, const Rat& c);
  Tensor scaled(const Rat& c) const;
  void add_scaled(const Tensor& other, const Rat& c);

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  int n_, d_;
  std::map<std::vector<int>, Rat> vals_;
};

// Reading-order tableau of a diagram: cell i (1-based, rows left to right,
// top to bottom) sits in row rho(i) and column kappa(i).
struct Tableau {
  GLDiagram shape;
  std::vector<int> rho, kappa;  // per cell

  explicit Tableau(const GLDiagram& lam);
};

// The unit tensor with p_i = rho(i); identically zero when the diagram has
// more than d rows.
Tensor chi_lambda(const GLDiagram& lam, int d);

// Young symmetrizer for the reading-order tableau: signed column sums after
// row sums, normalized so that applying it twice changes nothing. The
// normalization is solved exactly from the proportionality of the double
// application.
Tensor young_symmetrize(const GLDiagram& lam, const Tensor& t);

// chi_hw = Y_lambda chi_lambda
Tensor chi_hw(const GLDiagram& lam, int d);

// derivation action of a d x d matrix: one slot at a time
Tensor gl_act(const RatMatrix& x, const Tensor& t);
// group action of an invertible d x d matrix: product over all slots
Tensor group_act(const RatMatrix& g, const Tensor& t);

// contraction test sum <b|p_i p_j> chi = 0 over every slot pair i != j;
// tensors of rank below 2 are vacuously traceless
bool is_traceless(const Tensor& t, const BilinearForm& b);

// slotwise action of the reflection r
Tensor r_act(const Tensor& t);

// matrices e_pq, the reflection, and ebar_pq = e_pq - e_{q* p*}
RatMatrix e_matrix(int p, int q, int d);
RatMatrix r_matrix(int d);
RatMatrix ebar_matrix(int p, int q, int d);

}  // namespace fockdual

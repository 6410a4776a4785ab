#pragma once

#include <string>
#include <vector>

#include "fockdual/diagram.hpp"
#include "fockdual/fock.hpp"
#include "fockdual/linalg.hpp"

namespace fockdual {

// Non-singular bilinear form on the d-dimensional orbital space, together
// with its dual form. Concretely anti-diagonal: <b|pq> = delta_{p+q,d+1}
// in the symmetric case, with the sign of (q-p) in the skew case.
class BilinearForm {
 public:
  enum class Kind { symmetric, skew };

  BilinearForm(Kind kind, int d);

  Kind kind() const { return kind_; }
  int d() const { return d_; }
  int star(int p) const { return d_ + 1 - p; }  // dual-basis index
  // +1 for p <= d/2, -1 above; always +1 in the symmetric case
  int eps(int p) const { return kind_ == Kind::symmetric ? 1 : (2 * p <= d_ ? 1 : -1); }

  Rat entry(int p, int q) const;       // <b|pq>
  Rat dual_entry(int p, int q) const;  // <pq|b*>

 private:
  Kind kind_;
  int d_;
};

BilinearForm standard_form(BilinearForm::Kind kind, int d);

// The two mutually commuting generator sets realized as quadratic operators
// on the Fock space, with designated Cartan and raising subsets on each side.
struct DualPairRealization {
  PairType type = PairType::o_o;
  int d = 1;
  int k = 1;

  std::vector<QuadraticOperator> side_a, side_b;  // linearly independent bases
  std::vector<std::string> labels_a, labels_b;
  std::vector<QuadraticOperator> cartan_a, raising_a;
  std::vector<QuadraticOperator> cartan_b, raising_b;

  // union of both sides, for module generation
  std::vector<QuadraticOperator> all_generators() const;
};

// f_{tau,upsilon} = (1/2) sum_p [a^+_{p tau}, a_{p upsilon}], with the index
// range extended to negative kinds by a^+_{p,tau} = a_{p*,-tau}. These span
// the number non-conserving algebra o(2k) dual to the orthogonal group.
QuadraticOperator f_operator(int tau, int upsilon, int d, int k);

DualPairRealization build_pair(PairType type, int d, int k);

// An involution of the Fock space given by single field-operator images of
// the creation/annihilation operators plus an image of the vacuum.
class FockInvolution {
 public:
  struct Factor {
    FieldOp op;
    int sign = 1;
  };

  FockInvolution(std::string name, int d, int k, std::vector<Factor> creation_image,
                 std::vector<Factor> annihilation_image, SignedState vacuum_image);

  const std::string& name() const { return name_; }
  int d() const { return d_; }
  int k() const { return k_; }

  SignedState apply(const FockState& s) const;
  StateVector apply(const StateVector& v) const;
  // symbolic similarity map x -> u x u^{-1} on quadratic operators
  QuadraticOperator conjugate(const QuadraticOperator& x) const;
  SparseMatrix matrix(const std::vector<FockState>& basis) const;

 private:
  std::string name_;
  int d_, k_;
  std::vector<Factor> cimg_, aimg_;
  SignedState vac_;
};

// The reflection generating the non-rotation coset of O(d): negates the
// middle orbital for odd d, swaps orbitals d/2 and d/2+1 for even d.
FockInvolution reflection_r(int d, int k);

// The involution swapping creation and annihilation for kind 1
// (a^+_{p1} <-> a_{p*,1}), with sigma|0> = prod_p a^+_{p1}|0> taken with p
// increasing. Acts as a reflection of the dual algebra o(2k).
FockInvolution sigma(int d, int k);

// Joint highest-weight state of an O(d) group diagram with at most k columns:
// one particle per diagram cell, the cell in row rho and column kappa
// occupying mode (rho, kappa), created in reading order. With the canonical
// mode order the reading order is ascending, so the state carries sign +1.
FockState phi_hw(const OGroupDiagram& lam, int k);

}  // namespace fockdual

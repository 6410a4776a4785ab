#pragma once

#include <string>
#include <vector>

#include "fockdual/rational.hpp"

namespace fockdual {

// Young diagram with non-negative integer rows, stored stripped of trailing
// zeros (constructors accept and drop them).
class GLDiagram {
 public:
  GLDiagram() = default;
  explicit GLDiagram(std::vector<long long> rows);

  const std::vector<long long>& rows() const { return rows_; }
  long long row(size_t p) const { return p >= 1 && p <= rows_.size() ? rows_[p - 1] : 0; }
  size_t depth() const { return rows_.size(); }
  long long width() const { return rows_.empty() ? 0 : rows_.front(); }
  long long cells() const;
  std::vector<long long> padded(size_t n) const;
  // column depths, padded to n entries
  std::vector<long long> column_depths(size_t n) const;

  GLDiagram conjugate() const;

  friend auto operator<=>(const GLDiagram&, const GLDiagram&) = default;

 private:
  std::vector<long long> rows_;
};

std::string to_string(const GLDiagram& lam);

// Diagram labelling an O(d) group irrep: the depths of any two different
// columns must not exceed d.
struct OGroupDiagram {
  GLDiagram shape;
  int d = 1;

  bool valid() const;
  long long first_column() const { return static_cast<long long>(shape.depth()); }
  bool self_complementary() const { return 2 * first_column() == d; }

  friend auto operator<=>(const OGroupDiagram&, const OGroupDiagram&) = default;
};

// Complementary diagram: identical columns except the first-column depths of
// the pair sum to d. Involutive.
OGroupDiagram complementary(const OGroupDiagram& lam);

// Diagram labelling an orthogonal-algebra irrep: a fixed number of rows
// (floor(d/2) for o(d)), all integral or all half-odd-integral,
// non-increasing, with only the last row possibly negative.
class OAlgebraDiagram {
 public:
  OAlgebraDiagram() = default;
  explicit OAlgebraDiagram(std::vector<Rat> w);

  const std::vector<Rat>& w() const { return w_; }
  size_t size() const { return w_.size(); }
  bool spin() const;  // all rows half-odd-integral

  friend auto operator<=>(const OAlgebraDiagram&, const OAlgebraDiagram&) = default;

 private:
  std::vector<Rat> w_;
};

std::string to_string(const OAlgebraDiagram& w);

enum class PairType { gl_gl, sp_sp, o_o };
std::string to_string(PairType t);
PairType pair_type_from_string(const std::string& s);

// One predicted partner pair. When a marker is set, the stored diagram is the
// representative with positive last row and stands for the +/- pair.
struct PairingEntry {
  GLDiagram lambda;
  OAlgebraDiagram w;
  bool lambda_pm = false;
  bool w_pm = false;

  friend auto operator<=>(const PairingEntry&, const PairingEntry&) = default;
};

struct PairingTable {
  PairType type = PairType::o_o;
  int d = 1;
  int k = 1;
  std::vector<PairingEntry> entries;
};

// All diagrams fitting in a depth x width box, in lexicographic row order.
std::vector<GLDiagram> partitions_in_box(long long depth, long long width);

// Partner diagram under GL(d)-GL(k) duality: the conjugate for fermions, the
// diagram itself for bosons. Bounds: fermions need depth <= d and width <= k;
// bosons need depth <= min(d, k).
enum class Statistics { fermion, boson };
GLDiagram gl_pair(const GLDiagram& lam, int d, int k, Statistics stat);

// All (lambda, w) pairs filling a d/2 x k frame without overlap:
// w_tau = d/2 - conj(lambda)_{k+1-tau}. Orthogonal-orthogonal duality.
PairingTable frame_fill_pairs(int d, int k);

// Same frame rule for the symplectic-symplectic duality; d must be even and
// no +/- markers occur.
PairingTable helmers_pairs(int d, int k);

// Conjugate-pair table for GL(d)-GL(k) fermion duality over the d x k box.
PairingTable gl_conjugate_pairs(int d, int k);

// w_tau = d/2 - conj(lambda)_{k+1-tau} for an O(d) group diagram with at most
// k columns; the last row may come out negative.
OAlgebraDiagram rowe_w_from_lambda(const OGroupDiagram& lam, int k);

// Dual weights in the bosonic case, w_tau = -lambda_{k+1-tau} - d/2. Pure
// diagram arithmetic; there is no Fock-space realization here.
std::vector<Rat> boson_dual_weights(const GLDiagram& lam, int d, int k);

// Restriction of an O(d) group irrep to the algebra: one algebra diagram
// (shared with the complementary partner), or the +/- pair for a
// self-complementary diagram.
std::vector<OAlgebraDiagram> o_group_to_algebra(const OGroupDiagram& lam);

// ASCII rendering: one "[]" per cell, "|" for the half-width column of spin
// diagrams, a leading "-" on rows of negative length.
std::vector<std::string> render_diagram(const GLDiagram& lam);
std::vector<std::string> render_diagram(const OAlgebraDiagram& w);

}  // namespace fockdual

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockdual/diagram.hpp"
#include "fockdual/dual_pair.hpp"
#include "fockdual/fock.hpp"

namespace fockdual {

// Joint Cartan eigenvalue tuple: side A in cartan_a order, side B in
// cartan_b order. With the generator ordering of build_pair these tuples are
// literally the diagram row sequences on a highest-weight vector.
struct JointWeight {
  std::vector<Rat> a, b;
  friend auto operator<=>(const JointWeight&, const JointWeight&) = default;
};

// Partition of the full occupation basis by joint weight. Every Cartan
// operator is diagonal on that basis; anything else is a construction bug.
struct WeightTable {
  std::map<JointWeight, std::vector<uint64_t>> spaces;
  size_t total_states() const;
};

WeightTable joint_weights(const DualPairRealization& pair);

struct HighestWeightRecord {
  JointWeight weight;
  std::vector<Rat> lambda;  // side-A diagram rows
  std::vector<Rat> w;       // side-B diagram rows
  StateVector vector;       // first nonzero coefficient +1, canonical order
  long long module_dimension = 0;
  std::vector<JointWeight> module_weights;  // distinct joint weights met in the module
  std::optional<size_t> r_partner, sigma_partner;
  std::optional<Rat> r_eigen, sigma_eigen;
};

struct PredictionMismatch {
  std::string where;  // "predicted-only" | "observed-only"
  std::vector<Rat> lambda, w;
};

struct DecompositionReport {
  PairType type = PairType::o_o;
  int d = 1;
  int k = 1;
  std::vector<HighestWeightRecord> records;
  bool multiplicity_free = false;
  bool dimension_sum_ok = false;
  bool modules_disjoint = false;
  bool weights_valid = true;
  std::vector<PredictionMismatch> prediction_diff;
  std::vector<std::string> notes;

  long long fock_dimension() const { return 1LL << (d * k); }
  bool all_checks_pass() const {
    return multiplicity_free && dimension_sum_ok && modules_disjoint && weights_valid &&
           prediction_diff.empty();
  }
};

// Joint highest-weight vectors: within each joint weight space, the exact
// kernel of the stacked raising action of both sides. Module data is filled
// in by decompose().
std::vector<HighestWeightRecord> highest_weight_vectors(const DualPairRealization& pair);

// Smallest subspace containing the seed and closed under the given
// generators; returned as an echelon basis in canonical order.
std::vector<StateVector> generate_module(const StateVector& seed,
                                         const std::vector<QuadraticOperator>& generators);

// Signed prediction set for the pair type: the pairing-table entries with
// their +/- markers expanded into explicit diagram row tuples.
std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> predicted_signed_pairs(PairType type,
                                                                                  int d, int k);

// Full brute-force pipeline: build the pair, find the joint highest weights,
// grow each module, and check multiplicity-freeness, completeness,
// disjointness and agreement with the diagram-level prediction. For the
// orthogonal pair the reflection analysis is applied as well.
DecompositionReport decompose(PairType type, int d, int k);

// For each record, locate the image of its highest-weight vector under r and
// under sigma: either the partner record with the opposite sign of the last
// diagram row, or an exact +/-1 eigenvalue when the vector is fixed.
void reflection_analysis(DecompositionReport& report, const DualPairRealization& pair);

struct QuasispinModuleCheck {
  size_t record = 0;
  Rat S, Q, v;  // extracted from the module content
  bool ok = false;
};

struct QuasispinReport {
  int d = 2;
  bool algebra_ok = false;  // S and Q each close to sl(2), commute, span side B
  bool q0_identity_ok = false;  // Q_0 = (n - d)/2 as an operator identity
  std::vector<QuasispinModuleCheck> modules;
  bool pass() const;
};

// k = 2 only: identifies the commuting number-conserving / number
// non-conserving sl(2) split of side B and verifies the seniority relations
// v = d - 2Q = d - w_1 - w_2 and w_{1,2} = Q +/- S per module.
QuasispinReport quasispin_check(int d, const DecompositionReport& report);

}  // namespace fockdual

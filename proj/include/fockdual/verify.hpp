#pragma once

#include <string>
#include <vector>

#include "fockdual/decompose.hpp"

namespace fockdual {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_pass(const CheckList& checks);

// Canonical anticommutation relations by explicit double application, bracket
// antisymmetry and the Jacobi identity on pseudo-random quadratics, linearity,
// and the bracket-versus-matrix-commutator cross-check on generator pairs.
CheckList verify_car(int max_dk);

// r^2 = sigma^2 = 1 and sigma r = -r sigma on every basis state with
// d*k <= max_dk; r fixes each dual-side generator exactly and sigma maps the
// dual-side span into itself.
CheckList verify_involutions(int max_dk);

// Young-symmetrizer idempotence up to 5 cells, the row-length eigenvalue rule
// and highest-weight annihilation on chi_hw, tracelessness for the
// anti-diagonal form, and matching Cartan tuples on complementary diagrams.
CheckList verify_tensor();

// k = 2 quasispin identities for the listed orbital dimensions.
CheckList verify_quasispin(const std::vector<int>& ds);

// Cross brackets vanish and each side closes under the bracket, for every
// pair type buildable at d*k <= max_dk.
CheckList verify_commutant_closure(int max_dk);

// For every valid group diagram with at most k columns at d*k <= max_dk:
// dual-side raising operators annihilate the tableau state, the Cartan
// eigenvalues give the partner diagram, and the r / sigma eigenvalues follow
// the first-column rules.
CheckList verify_hw_states(int max_dk);

}  // namespace fockdual

#include <doctest.h>

#include <random>

#include "fockdual/fock.hpp"
#include "fockdual/json_io.hpp"

using namespace fockdual;

namespace {

FockState state_of(int d, int k, std::initializer_list<ModeIndex> modes) {
  FockState s = vacuum(d, k);
  for (const ModeIndex& m : modes) s.bits |= uint64_t(1) << mode_number(m, d, k);
  return s;
}

}  // namespace

TEST_CASE("vacuum construction") {
  CHECK(vacuum(1, 1).particle_count() == 0);
  CHECK(vacuum(1, 1).n_modes() == 1);
  CHECK(vacuum(2, 1).particle_count() == 0);
  CHECK(vacuum(13, 4).n_modes() == 52);
  CHECK(vacuum(13, 4).particle_count() == 0);
  CHECK_THROWS_AS(vacuum(0, 1), std::invalid_argument);
}

TEST_CASE("creation and annihilation signs follow the canonical mode order") {
  // canonical order: mode = (p-1)k + (tau-1); the sign counts occupied
  // modes preceding m
  FockState v21 = vacuum(2, 1);
  auto c1 = apply_creation(v21, {1, 1});
  REQUIRE(c1.has_value());
  CHECK(c1->sign == 1);
  CHECK(c1->state == state_of(2, 1, {{1, 1}}));

  CHECK(!apply_creation(c1->state, {1, 1}).has_value());  // Pauli exclusion

  auto c2 = apply_creation(c1->state, {2, 1});
  REQUIRE(c2.has_value());
  CHECK(c2->sign == -1);  // one occupied mode precedes (2,1)
  CHECK(c2->state == state_of(2, 1, {{1, 1}, {2, 1}}));

  CHECK(!apply_annihilation(v21, {1, 1}).has_value());
  auto a1 = apply_annihilation(c1->state, {1, 1});
  REQUIRE(a1.has_value());
  CHECK(a1->sign == 1);
  CHECK(a1->state == v21);

  auto a2 = apply_annihilation(state_of(2, 1, {{1, 1}, {2, 1}}), {2, 1});
  REQUIRE(a2.has_value());
  CHECK(a2->sign == -1);
  CHECK(a2->state == state_of(2, 1, {{1, 1}}));

  CHECK_THROWS_AS(apply_creation(v21, {3, 1}), std::out_of_range);
}

TEST_CASE("double application reproduces the anticommutator exactly") {
  for (auto [d, k] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    for (const FockState& s : full_basis(d, k))
      for (int m1 = 0; m1 < d * k; ++m1)
        for (int m2 = 0; m2 < d * k; ++m2) {
          ModeIndex a = mode_from_number(m1, d, k), c = mode_from_number(m2, d, k);
          Rat acc(0);
          if (auto x = apply_annihilation(s, a))
            if (auto y = apply_creation(x->state, c))
              if (y->state == s) acc += Rat(x->sign * y->sign);
          if (auto x = apply_creation(s, c))
            if (auto y = apply_annihilation(x->state, a))
              if (y->state == s) acc += Rat(x->sign * y->sign);
          CHECK(acc == Rat(m1 == m2 ? 1 : 0));
        }
  }
}

TEST_CASE("apply_quadratic on simple operators") {
  SUBCASE("number operator is diagonal with the particle count") {
    int d = 2, k = 1;
    QuadraticOperator number(d, k);
    for (int m = 0; m < d * k; ++m) number.add_ca(m, m, Rat(1));
    FockState one = state_of(d, k, {{1, 1}});
    CHECK(number.apply(one) == StateVector::unit(one));
  }
  SUBCASE("pair creator on the vacuum") {
    int d = 2, k = 1;
    QuadraticOperator pair(d, k);
    pair.add_cc(mode_number({1, 1}, d, k), mode_number({2, 1}, d, k), Rat(1));
    CHECK(pair.apply(vacuum(d, k)) ==
          StateVector::unit(state_of(d, k, {{1, 1}, {2, 1}})));
  }
  SUBCASE("d/2 minus the kind-number operator") {
    int d = 2, k = 1;
    QuadraticOperator f(d, k);
    f.add_scalar(Rat(1));
    for (int p = 1; p <= d; ++p) f.add_ca(mode_number({p, 1}, d, k), mode_number({p, 1}, d, k), Rat(-1));
    FockState full = state_of(d, k, {{1, 1}, {2, 1}});
    CHECK(f.apply(full) == StateVector::unit(full, Rat(-1)));
  }
}

TEST_CASE("bracket matches hand-evaluated commutators") {
  int d = 2, k = 1;
  int m0 = mode_number({1, 1}, d, k), m1 = mode_number({2, 1}, d, k);
  SUBCASE("[a+_1 a_2, a+_2 a_1] = n_1 - n_2") {
    QuadraticOperator A(d, k), B(d, k), expect(d, k);
    A.add_ca(m0, m1, Rat(1));
    B.add_ca(m1, m0, Rat(1));
    expect.add_ca(m0, m0, Rat(1));
    expect.add_ca(m1, m1, Rat(-1));
    CHECK(bracket(A, B) == expect);
  }
  SUBCASE("[N, a+a+] = 2 a+a+") {
    QuadraticOperator number(d, k), pair(d, k);
    for (int m = 0; m < d * k; ++m) number.add_ca(m, m, Rat(1));
    pair.add_cc(m0, m1, Rat(1));
    QuadraticOperator expect = pair;
    expect *= Rat(2);
    CHECK(bracket(number, pair) == expect);
  }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on random operators") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> mode(0, 5), coef(-3, 3), kind(0, 2);
  auto random_op = [&](int d, int k) {
    QuadraticOperator op(d, k);
    for (int t = 0; t < 4; ++t) {
      int m1 = mode(rng), m2 = mode(rng);
      switch (kind(rng)) {
        case 0: op.add_cc(m1, m2, Rat(coef(rng))); break;
        case 1: op.add_ca(m1, m2, Rat(coef(rng))); break;
        default: op.add_aa(m1, m2, Rat(coef(rng))); break;
      }
    }
    op.add_scalar(Rat(coef(rng)));
    return op;
  };
  for (int rep = 0; rep < 25; ++rep) {
    auto A = random_op(3, 2), B = random_op(3, 2), C = random_op(3, 2);
    CHECK((bracket(A, B) + bracket(B, A)).is_zero());
    QuadraticOperator jac = bracket(A, bracket(B, C));
    jac += bracket(B, bracket(C, A));
    jac += bracket(C, bracket(A, B));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("matrix_of on the full basis") {
  SUBCASE("number operator at d=1, k=1 is diag(0,1)") {
    QuadraticOperator number(1, 1);
    number.add_ca(0, 0, Rat(1));
    SparseMatrix m = matrix_of(number, full_basis(1, 1));
    CHECK(m.get(0, 0) == Rat(0));
    CHECK(m.get(1, 1) == Rat(1));
    CHECK(m.get(0, 1) == Rat(0));
    CHECK(m.get(1, 0) == Rat(0));
  }
  SUBCASE("zero operator gives the zero matrix") {
    CHECK(matrix_of(QuadraticOperator(2, 1), full_basis(2, 1)).is_zero());
  }
  SUBCASE("orbital imbalance operator is diag(0,1,-1,0) in canonical order") {
    int d = 2, k = 1;
    QuadraticOperator op(d, k);
    op.add_ca(mode_number({1, 1}, d, k), mode_number({1, 1}, d, k), Rat(1));
    op.add_ca(mode_number({2, 1}, d, k), mode_number({2, 1}, d, k), Rat(-1));
    SparseMatrix m = matrix_of(op, full_basis(d, k));
    CHECK(m.get(0, 0) == Rat(0));
    CHECK(m.get(1, 1) == Rat(1));
    CHECK(m.get(2, 2) == Rat(-1));
    CHECK(m.get(3, 3) == Rat(0));
  }
  SUBCASE("a non-invariant basis is rejected") {
    QuadraticOperator pair(2, 1);
    pair.add_cc(0, 1, Rat(1));
    std::vector<FockState> tiny{vacuum(2, 1)};
    CHECK_THROWS_AS(matrix_of(pair, tiny), std::invalid_argument);
  }
}

TEST_CASE("matrix_of is a Lie homomorphism on the full basis") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> mode(0, 3), coef(-2, 2);
  auto basis = full_basis(2, 2);
  for (int rep = 0; rep < 10; ++rep) {
    QuadraticOperator A(2, 2), B(2, 2);
    for (int t = 0; t < 3; ++t) {
      A.add_ca(mode(rng), mode(rng), Rat(coef(rng)));
      B.add_cc(mode(rng), mode(rng), Rat(coef(rng)));
      B.add_aa(mode(rng), mode(rng), Rat(coef(rng)));
    }
    CHECK(matrix_of(bracket(A, B), basis) ==
          matrix_of(A, basis).commutator(matrix_of(B, basis)));
  }
}

TEST_CASE("full basis guard") {
  int saved = max_full_basis_modes();
  set_max_full_basis_modes(8);
  CHECK_THROWS_AS(full_basis(3, 3), guard_error);
  CHECK(full_basis(2, 4).size() == 256);
  set_max_full_basis_modes(saved);
}

TEST_CASE("state vector and operator JSON round trip") {
  StateVector v(2, 2);
  v.add(state_of(2, 2, {{1, 1}, {2, 2}}), Rat(-3, 2));
  v.add(state_of(2, 2, {{1, 2}}), Rat(5));
  CHECK(state_vector_from_json(to_json(v)) == v);

  QuadraticOperator op(2, 2);
  op.add_cc(0, 3, Rat(1, 2));
  op.add_ca(1, 2, Rat(-7));
  op.add_aa(0, 1, Rat(2, 3));
  op.add_scalar(Rat(11, 2));
  CHECK(quadratic_from_json(to_json(op)) == op);
}

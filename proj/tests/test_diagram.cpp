#include <doctest.h>

#include "fockdual/diagram.hpp"
#include <set>

#include "fockdual/json_io.hpp"

using namespace fockdual;

namespace {

GLDiagram gl(std::initializer_list<long long> rows) { return GLDiagram(std::vector<long long>(rows)); }

std::vector<Rat> rats(std::initializer_list<Rat> v) { return std::vector<Rat>(v); }

const PairingEntry* find_entry(const PairingTable& t, const GLDiagram& lam) {
  for (const auto& e : t.entries)
    if (e.lambda == lam) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("conjugate transposes and is involutive") {
  CHECK(gl({3, 1}).conjugate() == gl({2, 1, 1}));
  CHECK(gl({}).conjugate() == gl({}));
  CHECK(gl({2, 2}).conjugate() == gl({2, 2}));
  for (const GLDiagram& lam : partitions_in_box(4, 4))
    CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("complementary adjusts the first column and is involutive") {
  CHECK(complementary({gl({1}), 3}).shape == gl({1, 1}));
  CHECK(complementary({gl({1, 1}), 4}).shape == gl({1, 1}));
  CHECK(complementary({gl({}), 2}).shape == gl({1, 1}));
  for (int d = 1; d <= 5; ++d)
    for (const GLDiagram& lam : partitions_in_box(d, 3)) {
      OGroupDiagram g{lam, d};
      if (!g.valid()) continue;
      OGroupDiagram comp = complementary(g);
      CHECK(comp.valid());
      CHECK(complementary(comp).shape == lam);
      // identical except the first column: self-complementary iff depth d/2
      CHECK((comp.shape == lam) == (2 * g.first_column() == d));
    }
}

TEST_CASE("two-column validity rule") {
  CHECK(OGroupDiagram{gl({1}), 1}.valid());
  CHECK(!OGroupDiagram{gl({2}), 1}.valid());
  CHECK(OGroupDiagram{gl({2, 1}), 3}.valid());
  CHECK(!OGroupDiagram{gl({2, 2}), 3}.valid());
  CHECK(OGroupDiagram{gl({1, 1, 1}), 4}.valid());
}

TEST_CASE("gl pairing") {
  CHECK(gl_pair(gl({2, 2, 1}), 3, 2, Statistics::fermion) == gl({3, 2}));
  CHECK(gl_pair(gl({4, 1}), 5, 2, Statistics::boson) == gl({4, 1}));
  CHECK_THROWS_AS(gl_pair(gl({3, 1}), 2, 2, Statistics::fermion), std::invalid_argument);
  CHECK_THROWS_AS(gl_pair(gl({1, 1, 1}), 5, 2, Statistics::boson), std::invalid_argument);
}

TEST_CASE("frame fill pairing tables") {
  SUBCASE("headline entry at d=13, k=4") {
    PairingTable t = frame_fill_pairs(13, 4);
    const PairingEntry* e = find_entry(t, gl({4, 3, 3, 2, 1, 0}));
    REQUIRE(e != nullptr);
    CHECK(e->w.w() == rats({Rat(11, 2), Rat(7, 2), Rat(5, 2), Rat(3, 2)}));
    CHECK(e->w_pm);
    CHECK(!e->lambda_pm);
    CHECK(e->w.spin());
  }
  SUBCASE("d=2, k=1 has exactly the two entries") {
    PairingTable t = frame_fill_pairs(2, 1);
    REQUIRE(t.entries.size() == 2);
    const PairingEntry* empty = find_entry(t, gl({}));
    const PairingEntry* one = find_entry(t, gl({1}));
    REQUIRE(empty != nullptr);
    REQUIRE(one != nullptr);
    CHECK(empty->w.w() == rats({Rat(1)}));
    CHECK(empty->w_pm);
    CHECK(!empty->lambda_pm);
    CHECK(one->w.w() == rats({Rat(0)}));
    CHECK(one->lambda_pm);
    CHECK(!one->w_pm);
  }
  SUBCASE("the empty diagram pairs with the full-width rows") {
    for (int d : {2, 4, 6})
      for (int k : {1, 2, 3}) {
        const PairingEntry* e = find_entry(frame_fill_pairs(d, k), gl({}));
        REQUIRE(e != nullptr);
        for (const Rat& w : e->w.w()) CHECK(w == Rat(d, 2));
      }
  }
  SUBCASE("frame relation and bijectivity") {
    for (auto [d, k] : {std::pair{3, 2}, {4, 2}, {5, 3}, {6, 2}, {13, 4}}) {
      PairingTable t = frame_fill_pairs(d, k);
      std::set<std::vector<long long>> lams;
      std::set<std::vector<Rat>> ws;
      for (const auto& e : t.entries) {
        auto cols = e.lambda.column_depths(size_t(k));
        for (int tau = 1; tau <= k; ++tau)
          CHECK(Rat(cols[size_t(k - tau)]) + e.w.w()[size_t(tau - 1)] == Rat(d, 2));
        CHECK(lams.insert(e.lambda.padded(size_t(d / 2))).second);
        CHECK(ws.insert(e.w.w()).second);
        if (d % 2 == 1) {
          CHECK(e.w.spin());
          CHECK(e.w_pm);
        }
      }
      CHECK(t.entries.size() == partitions_in_box(d / 2, k).size());
    }
  }
  SUBCASE("degenerate d=1 family") {
    PairingTable t = frame_fill_pairs(1, 3);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].lambda == gl({}));
    CHECK(t.entries[0].w.w() == rats({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
    CHECK(t.entries[0].w_pm);
  }
}

TEST_CASE("helmers pairing tables") {
  SUBCASE("d=2, k=1") {
    PairingTable t = helmers_pairs(2, 1);
    REQUIRE(t.entries.size() == 2);
    CHECK(find_entry(t, gl({}))->w.w() == rats({Rat(1)}));
    CHECK(find_entry(t, gl({1}))->w.w() == rats({Rat(0)}));
    for (const auto& e : t.entries) {
      CHECK(!e.lambda_pm);
      CHECK(!e.w_pm);
    }
  }
  SUBCASE("d=4, k=1 single-column family") {
    PairingTable t = helmers_pairs(4, 1);
    REQUIRE(t.entries.size() == 3);
    CHECK(find_entry(t, gl({}))->w.w() == rats({Rat(2)}));
    CHECK(find_entry(t, gl({1}))->w.w() == rats({Rat(1)}));
    CHECK(find_entry(t, gl({1, 1}))->w.w() == rats({Rat(0)}));
  }
  SUBCASE("the full rectangle pairs with zero") {
    const PairingEntry* e = find_entry(helmers_pairs(6, 2), gl({2, 2, 2}));
    REQUIRE(e != nullptr);
    CHECK(e->w.w() == rats({Rat(0), Rat(0)}));
  }
  CHECK_THROWS_AS(helmers_pairs(3, 1), std::invalid_argument);
}

TEST_CASE("dual rows from a group diagram") {
  SUBCASE("headline example") {
    OAlgebraDiagram w = rowe_w_from_lambda({gl({4, 3, 3, 2, 1, 1, 1, 1}), 13}, 4);
    CHECK(w.w() == rats({Rat(11, 2), Rat(7, 2), Rat(5, 2), Rat(-3, 2)}));
  }
  CHECK(rowe_w_from_lambda({gl({}), 4}, 2).w() == rats({Rat(2), Rat(2)}));
  CHECK(rowe_w_from_lambda({gl({1, 1}), 3}, 1).w() == rats({Rat(-1, 2)}));
  CHECK_THROWS_AS(rowe_w_from_lambda({gl({2}), 4}, 1), std::invalid_argument);

  SUBCASE("complementary partners flip the sign of the last row") {
    for (int d = 2; d <= 6; ++d)
      for (int k = 1; k <= 3; ++k)
        for (const GLDiagram& lam : partitions_in_box(d, k)) {
          OGroupDiagram g{lam, d};
          if (!g.valid() || g.self_complementary()) continue;
          OGroupDiagram comp = complementary(g);
          if (comp.shape.width() > k) continue;
          auto w1 = rowe_w_from_lambda(g, k).w();
          auto w2 = rowe_w_from_lambda(comp, k).w();
          REQUIRE(w1.size() == w2.size());
          for (size_t i = 0; i + 1 < w1.size(); ++i) CHECK(w1[i] == w2[i]);
          CHECK(w1.back() == -w2.back());
        }
  }
}

TEST_CASE("boson dual weights are pure arithmetic") {
  CHECK(boson_dual_weights(gl({3}), 4, 1) == rats({Rat(-5)}));  // -n - d/2
  CHECK(boson_dual_weights(gl({}), 3, 2) == rats({Rat(-3, 2), Rat(-3, 2)}));
  CHECK(boson_dual_weights(gl({2, 1}), 4, 2) == rats({Rat(-3), Rat(-4)}));
  CHECK_THROWS_AS(boson_dual_weights(gl({1, 1, 1}), 2, 4), std::invalid_argument);
}

TEST_CASE("group to algebra restriction") {
  CHECK(o_group_to_algebra({gl({1}), 3}) ==
        std::vector<OAlgebraDiagram>{OAlgebraDiagram(rats({Rat(1)}))});
  CHECK(o_group_to_algebra({gl({1, 1}), 4}) ==
        std::vector<OAlgebraDiagram>{OAlgebraDiagram(rats({Rat(1), Rat(1)})),
                                     OAlgebraDiagram(rats({Rat(1), Rat(-1)}))});
  // complementary partners carry the same single algebra diagram
  CHECK(o_group_to_algebra({gl({1, 1}), 3}) == o_group_to_algebra({gl({1}), 3}));
}

TEST_CASE("algebra diagram validity") {
  CHECK_NOTHROW(OAlgebraDiagram(rats({Rat(3), Rat(2), Rat(-2)})));
  CHECK_NOTHROW(OAlgebraDiagram(rats({Rat(-1, 2)})));
  CHECK_THROWS_AS(OAlgebraDiagram(rats({Rat(1), Rat(2)})), std::invalid_argument);
  CHECK_THROWS_AS(OAlgebraDiagram(rats({Rat(1), Rat(-2)})), std::invalid_argument);
  CHECK_THROWS_AS(OAlgebraDiagram(rats({Rat(3), Rat(-1), Rat(0)})), std::invalid_argument);
  CHECK_THROWS_AS(OAlgebraDiagram(rats({Rat(3, 2), Rat(1)})), std::invalid_argument);
  CHECK(OAlgebraDiagram(rats({Rat(9, 2), Rat(5, 2), Rat(-3, 2)})).spin());
  CHECK(!OAlgebraDiagram(rats({Rat(5), Rat(3), Rat(-2)})).spin());
}

TEST_CASE("ascii rendering") {
  CHECK(render_diagram(gl({3, 1})) == std::vector<std::string>{"[][][]", "[]"});
  CHECK(render_diagram(gl({})) == std::vector<std::string>{"(empty)"});
  CHECK(render_diagram(OAlgebraDiagram(rats({Rat(5), Rat(3), Rat(-2)}))) ==
        std::vector<std::string>{"[][][][][]", "[][][]", "-[][]"});
  CHECK(render_diagram(OAlgebraDiagram(rats({Rat(9, 2), Rat(5, 2), Rat(-3, 2)}))) ==
        std::vector<std::string>{"|[][][][]", "|[][]", "-|[]"});
}

TEST_CASE("pairing table JSON round trip") {
  for (const PairingTable& t :
       {frame_fill_pairs(13, 4), frame_fill_pairs(3, 2), helmers_pairs(4, 2),
        gl_conjugate_pairs(2, 3)}) {
    PairingTable back = pairing_table_from_json(to_json(t));
    CHECK(back.type == t.type);
    CHECK(back.d == t.d);
    CHECK(back.k == t.k);
    REQUIRE(back.entries.size() == t.entries.size());
    for (size_t i = 0; i < t.entries.size(); ++i) CHECK(back.entries[i] == t.entries[i]);
  }
}

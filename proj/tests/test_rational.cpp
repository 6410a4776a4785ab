#include <doctest.h>

#include "fockdual/rational.hpp"

using fockdual::Rat;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK((Rat(3, 2) * Rat(2, 3)) == Rat(1));
  CHECK((Rat(7, 3) / Rat(7, 3)) == Rat(1));
  CHECK(Rat(0, 5).is_zero());
  CHECK(Rat(5) < Rat(11, 2));
  CHECK(Rat(-3, 2) < Rat(-1, 2));
  CHECK(Rat(3, 2).is_half_odd_integer());
  CHECK(!Rat(3).is_half_odd_integer());
  CHECK(Rat(-7, 2).abs() == Rat(7, 2));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  for (const char* s : {"0", "5", "-3", "11/2", "-3/2", "7/3"}) {
    CHECK(Rat::parse(s).str() == s);
  }
  CHECK(Rat::parse("4/6") == Rat(2, 3));
}

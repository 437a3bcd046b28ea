#include <doctest.h>

#include "zinbiel/rational.hpp"

using namespace zinbiel;

TEST_CASE("rationals stay canonical") {
  const Rational q = rational_of(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK(rational_to_string(q) == "-2/3");
  CHECK(rational_to_string(rational_of(7)) == "7");
}

TEST_CASE("string round trip") {
  CHECK(rational_from_string("10/4") == rational_of(5, 2));
  CHECK(rational_from_string("-3") == rational_of(-3));
  CHECK(rational_to_string(rational_from_string("0/9")) == "0");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("modular residues") {
  const std::uint32_t p = 33554393;  // prime
  const auto r = residue_mod(rational_of(1, 2), p);
  REQUIRE(r.has_value());
  CHECK((2ull * *r) % p == 1);
  CHECK(!residue_mod(rational_of(1, p), p).has_value());
  CHECK(*residue_mod(rational_of(-1), p) == p - 1);
}

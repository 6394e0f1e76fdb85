#include "nlie/rational.hpp"

#include <doctest.h>

using nlie::ParseError;
using nlie::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));  // denominator forced positive
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(6, 3).is_integer());
  CHECK(Rat(6, 3).num() == 2);
  CHECK(Rat(6, 3).den() == 1);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  // no drift: (a+b)-b == a across awkward denominators
  const Rat samples[] = {Rat(1, 3), Rat(-7, 11), Rat(355, 113), Rat(0),
                         Rat(1000000007, 998244353)};
  for (const Rat& a : samples)
    for (const Rat& b : samples) {
      CHECK((a + b) - b == a);
      CHECK(a * b == b * a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
  Rat acc(1, 2);
  acc.submul(Rat(1, 3), Rat(3, 2));  // 1/2 - 1/2
  CHECK(acc.is_zero());
}

TEST_CASE("comparisons and signs") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(-5).sign() == -1);
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(-3, 7).abs() == Rat(3, 7));
}

TEST_CASE("parse accepts p, -p, p/q and nothing else") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-3/6") == Rat(-1, 2));
  CHECK(Rat::parse("+5") == Rat(5));
  CHECK(Rat::parse("7/1") == Rat(7));
  CHECK(Rat::parse("0") == Rat(0));
  for (const char* bad : {"", "1.5", "a", "1/", "/2", "1/0", "1 / 2", "2/-3",
                          "0x10", "1e3", "--1"})
    CHECK_THROWS_AS(Rat::parse(bad), ParseError);
}

TEST_CASE("string round trip is canonical") {
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(-1, 2).str() == "-1/2");
  CHECK(Rat(8, 4).str() == "2");
  CHECK(Rat(0).str() == "0");
  for (const char* s : {"3/4", "-12", "22/7"}) CHECK(Rat::parse(s).str() == s);
}

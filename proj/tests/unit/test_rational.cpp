#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "segopt/bound.hpp"
#include "segopt/rational.hpp"

using segopt::Bound;
using segopt::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(10, 5).is_integer());
  CHECK(Rational(3, 6) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("123456789012345678901234567890/10").to_string() == "12345678901234567890123456789");
  for (const char* bad : {"", "1/", "/2", "1/0", "x", "1.5", "--1", "1/2/3"}) {
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("arithmetic and order") {
  Rational a(1, 3);
  Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(Rational::midpoint(Rational(0), Rational(3)) == Rational(3, 2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  std::ostringstream out;
  out << Rational(-5, 10);
  CHECK(out.str() == "-1/2");
}

TEST_CASE("overflow promotes and results demote") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational y = x * x;
  CHECK_FALSE(y.is_small());
  CHECK(y / x == x);
  CHECK((y / x).is_small());
  CHECK(y > x);
  CHECK(Rational(std::numeric_limits<std::int64_t>::min()) - 1 < Rational(std::numeric_limits<std::int64_t>::min()));
}

TEST_CASE("agrees with GMP on random operations") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> wide(-(std::int64_t{1} << 62), std::int64_t{1} << 62);
  std::uniform_int_distribution<std::int64_t> narrow(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    Rational a(wide(rng), narrow(rng));
    Rational b(wide(rng), narrow(rng));
    mpq_class qa = a.to_mpq();
    mpq_class qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (b.sign() != 0) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a < b) == (qa < qb));
  }
}

TEST_CASE("bound comparisons are exact") {
  // 4 + sqrt(32)/4 = 5.41...
  Bound even{Rational(4), Rational(1, 4), Rational(32)};
  CHECK_FALSE(even.satisfied_by(5));
  CHECK(even.satisfied_by(6));
  CHECK(even.ceiling() == 6);
  CHECK(even.to_string() == "4+1/4*sqrt(32)");
  // sqrt(2) exactly: 1 + sqrt(1) reached with equality.
  Bound tight{Rational(1), Rational(1), Rational(1)};
  CHECK(tight.satisfied_by(2));
  CHECK_FALSE(tight.satisfied_by(Rational(199, 100)));
  CHECK(Bound::rational(Rational(9, 2)).to_string() == "9/2");
  CHECK(Bound::rational(Rational(9, 2)).ceiling() == 5);
}

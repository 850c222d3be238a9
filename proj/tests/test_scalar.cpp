#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "twistfock/scalar.hpp"

using namespace twistfock;

namespace {
// independent numeric oracle: evaluate at zeta = e^{i pi/12} in floating point
std::complex<double> zeta_num(int k) {
  constexpr double pi = 3.14159265358979323846;
  return std::exp(std::complex<double>(0.0, pi * k / 12.0));
}

Scalar random_scalar(std::mt19937_64& rng) {
  Scalar s = Scalar::rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 9));
  if (rng() % 3 == 0) s *= Scalar::zeta_power(static_cast<long>(rng() % 24));
  if (rng() % 4 == 0)
    s += Scalar::rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 9)) *
         Scalar::zeta_power(static_cast<long>(rng() % 24));
  return s;
}
}  // namespace

TEST_CASE("field constants and identities") {
  CHECK(Scalar::zero() + Scalar::sqrt2() == Scalar::sqrt2());

  Scalar w = Scalar::omega();
  CHECK(w * w * w == Scalar::one());
  CHECK((Scalar::one() + w + w * w).is_zero());
  CHECK(w == Scalar::zeta_power(8));
  CHECK(w.inverse() == w * w);

  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar::integer(2));
  CHECK(Scalar::sqrt3() * Scalar::sqrt3() == Scalar::integer(3));
  CHECK(Scalar::imag_unit() * Scalar::imag_unit() == Scalar::integer(-1));

  CHECK(Scalar::one().inverse() == Scalar::one());
  CHECK(Scalar::sqrt2().inverse() == Scalar::sqrt2() * Scalar::rational(1, 2));

  // the reduction rule is the minimal polynomial: z^8 = z^4 - 1
  CHECK(Scalar::zeta_power(8) == Scalar::zeta_power(4) - Scalar::one());
  Scalar z = Scalar::zeta_power(1);
  Scalar z8 = Scalar::one();
  for (int i = 0; i < 8; ++i) z8 *= z;
  CHECK(z8 == Scalar::zeta_power(8));
}

TEST_CASE("sqrt2 expansion against the numeric oracle") {
  // sqrt2 = z^3 + z^21; its square must expand and reduce to 2 exactly,
  // and the embedding must match the numeric value
  auto sq = (Scalar::zeta_power(3) + Scalar::zeta_power(21));
  CHECK(sq * sq == Scalar::integer(2));
  auto numeric = zeta_num(3) + zeta_num(21);
  CHECK(std::abs(sq.embed() - numeric) < 1e-12);
  CHECK(std::abs(sq.embed().real() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs((Scalar::sqrt3() * Scalar::sqrt3()).embed().real() - 3.0) < 1e-12);
}

TEST_CASE("canonical representation") {
  // equality is coordinate equality; different routes to the same value agree
  Scalar a = Scalar::rational(2, 4);
  Scalar b = Scalar::rational(1, 2);
  CHECK(a == b);
  Scalar c = Scalar::sqrt2() * Scalar::sqrt3();
  Scalar d = Scalar::sqrt3() * Scalar::sqrt2();
  CHECK(c == d);
  CHECK_FALSE(c.is_rational());
  CHECK((c * c) == Scalar::integer(6));
}

TEST_CASE("ring axioms and inversion on random samples") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 1000; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar::one());
  }
  CHECK_THROWS_AS(Scalar::zero().inverse(), std::domain_error);
}

TEST_CASE("complex-embedding homomorphism") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 300; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-9);
    CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
  }
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    Scalar a = random_scalar(rng);
    auto strs = a.coord_strings();
    REQUIRE(strs.size() == 8);
    CHECK(Scalar::from_coord_strings(strs) == a);
  }
  auto one = Scalar::one().coord_strings();
  CHECK(one[0] == "1/1");
  CHECK(one[3] == "0/1");
}

TEST_CASE("arbitrary precision promotion") {
  // drive coordinates far beyond the inline range and back
  Scalar big = Scalar::rational(2147483647L, 3);
  Scalar acc = Scalar::one();
  for (int i = 0; i < 5; ++i) acc = acc * big + Scalar::sqrt2();
  CHECK(acc * acc.inverse() == Scalar::one());
  CHECK(Scalar::from_coord_strings(acc.coord_strings()) == acc);
  Scalar diff = acc - acc;
  CHECK(diff.is_zero());
}

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "charkit/cyclotomic.hpp"
#include "charkit/errors.hpp"

using namespace charkit;

namespace {

using Z = Cyclotomic;

std::complex<double> exact_root(long e, long k) {
  const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(e);
  return {std::cos(t), std::sin(t)};
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

// Random element sum c_k z(n)^k with small rational coefficients, together
// with its value computed directly in floating point.
std::pair<Z, std::complex<double>> random_element(std::mt19937_64& rng, long n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<long> exp(0, n - 1);
  Z value;
  std::complex<double> approx = 0;
  for (int t = 0; t < 3; ++t) {
    Rational q(coef(rng), den(rng));
    q.canonicalize();
    const long k = exp(rng);
    value += Z::root_of_unity(n, k) * q;
    approx += q.get_d() * exact_root(n, k);
  }
  return {value, approx};
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("roots of unity") {
    CHECK(Z::root_of_unity(1, 0) == Z(1));
    CHECK(Z::root_of_unity(4, 2) == Z(-1));
    CHECK(Z::root_of_unity(12, 4) == Z::root_of_unity(3, 1));
    CHECK(Z::root_of_unity(12, 4).conductor() == 3);
    CHECK(Z::root_of_unity(6, 1).conductor() == 3);
    CHECK(Z::root_of_unity(8, 3).conductor() == 8);
    CHECK(Z::root_of_unity(5, -1) == Z::root_of_unity(5, 4));
    CHECK_THROWS_AS(Z::root_of_unity(0, 1), DomainError);
  }

  TEST_CASE("worked values") {
    const Z i = Z::root_of_unity(4, 1);
    CHECK(i * i == Z(-1));
    CHECK(Z::root_of_unity(3, 1) + Z::root_of_unity(3, 2) == Z(-1));
    CHECK(Z::root_of_unity(5, 1).conj() == Z::root_of_unity(5, 4));
    CHECK(Z::root_of_unity(6, 1) + Z::root_of_unity(6, 5) == Z(1));
    CHECK_FALSE(Z::root_of_unity(8, 1).as_rational().has_value());
    CHECK(Z(0).is_zero());
    CHECK(Z(0).as_rational() == Rational(0));
    CHECK(Z(0).to_string() == "0");
  }

  TEST_CASE("rational detection") {
    // sqrt(2) = z8 + z8^7 is irrational, its square is 2.
    const Z r2 = Z::root_of_unity(8, 1) + Z::root_of_unity(8, 7);
    CHECK_FALSE(r2.as_rational());
    CHECK((r2 * r2).as_rational() == Rational(2));
    CHECK((r2 * r2).conductor() == 1);
    // Sum of all primitive 15th roots is mu(15) = 1.
    Z sum;
    for (long k = 1; k < 15; ++k) {
      if (std::gcd(k, 15L) == 1) sum += Z::root_of_unity(15, k);
    }
    CHECK(sum == Z(1));
  }

  TEST_CASE("canonical form is unique and stable") {
    // The same value reached through different conductors.
    const Z a = Z::root_of_unity(20, 5) * Z::root_of_unity(20, 5);
    CHECK(a == Z(-1));
    const Z b = Z::root_of_unity(9, 3);
    CHECK(b.conductor() == 3);
    // Re-canonicalizing through from_cyclic at a multiple conductor is a
    // fixed point.
    for (long e : {3L, 4L, 5L, 7L, 8L, 9L, 12L, 15L, 20L, 24L}) {
      for (long k = 0; k < e; ++k) {
        const Z z = Z::root_of_unity(e, k) + Z::root_of_unity(e, 2 * k + 1);
        std::vector<Rational> cyclic(z.conductor(), Rational(0));
        auto coeffs = z.coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j) cyclic[j] = coeffs[j];
        CHECK(Z::from_cyclic(z.conductor(), cyclic) == z);
        CHECK(z.conductor() % 4 != 2);
      }
    }
  }

  TEST_CASE("floating-point embedding agrees") {
    for (long e : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 12L, 15L, 16L, 20L, 21L, 24L}) {
      for (long k = 0; k < e; ++k) {
        CHECK(close(Z::root_of_unity(e, k).to_complex(), exact_root(e, k)));
      }
    }
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (long n : {3L, 4L, 5L, 8L, 9L, 12L, 15L, 20L, 24L}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto [a, fa] = random_element(rng, n);
        auto [b, fb] = random_element(rng, n);
        auto [c, fc] = random_element(rng, 2 * n);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + Z(0) == a);
        CHECK(a * Z(1) == a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * a.conj()).conj() == a * a.conj());
        CHECK(close((a * b).to_complex(), fa * fb));
        CHECK(close((a + c).to_complex(), fa + fc));
        CHECK(close(a.conj().to_complex(), std::conj(fa)));
      }
    }
  }

  TEST_CASE("galois automorphisms") {
    const Z z = Z::root_of_unity(7, 1);
    CHECK(z.galois(3) == Z::root_of_unity(7, 3));
    CHECK(z.galois(-1) == z.conj());
    const Z r5 = Z::root_of_unity(5, 1) + Z::root_of_unity(5, 4);
    CHECK(r5.galois(4) == r5);
    CHECK(r5.galois(2) != r5);
  }

  TEST_CASE("accumulator matches direct sums") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      auto [a, fa] = random_element(rng, 12);
      auto [b, fb] = random_element(rng, 8);
      auto [c, fc] = random_element(rng, 5);
      CyclotomicAccumulator acc(4);
      acc.add(a, Rational(2));
      acc.add_product(b, c, Rational(1, 3));
      acc.add_product(a, b, Rational(1), true);
      const Z expected = a * Rational(2) + b * c * Rational(1, 3) + a * b.conj();
      CHECK(acc.result() == expected);
    }
    CHECK(CyclotomicAccumulator(6).result().is_zero());
  }

  TEST_CASE("rendering") {
    CHECK(Z(3).to_string() == "3");
    CHECK(Z(Rational(-1, 2)).to_string() == "-1/2");
    CHECK(Z::root_of_unity(3, 1).to_string().find("z(3)") != std::string::npos);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
  }
}

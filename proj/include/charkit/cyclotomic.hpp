#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charkit {

using Rational = mpq_class;

/// Exact element of a cyclotomic field Q(z(e)).
///
/// Values are stored in canonical form: at the smallest conductor e whose
/// field contains the value, with coefficients on the power basis
/// 1, z, ..., z^(phi(e)-1) of Q(z(e)) (reduction modulo the e-th cyclotomic
/// polynomial). Two values are equal iff conductor and coefficients agree.
/// The minimal conductor is never congruent to 2 mod 4.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(Rational value);

  /// z(e)^k, reduced to its minimal conductor. Throws DomainError if e < 1.
  static Cyclotomic root_of_unity(long e, long k);

  /// Canonicalizes sum_k coeffs[k] * z(n)^k for k in [0, n).
  static Cyclotomic from_cyclic(std::uint32_t n, std::span<const Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  /// Canonical power-basis coefficients; size phi(conductor()).
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// The exact rational value, or nullopt if the value is irrational.
  std::optional<Rational> as_rational() const;

  Cyclotomic conj() const;
  /// Galois automorphism z -> z^k on the value's own field; k must be a unit.
  Cyclotomic galois(long k) const;

  std::complex<double> to_complex() const;

  /// `a0 + a1*z(e)^1 + ...`; "0" for zero.
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scale);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend class CyclotomicAccumulator;

  std::uint32_t conductor_ = 1;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Sums of (scaled, optionally conjugated) products in the group ring
/// Q[x]/(x^n - 1), canonicalized once at the end. Used for inner products
/// and induction where canonicalizing every partial sum would dominate.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(std::uint32_t n = 1);

  void add(const Cyclotomic& a, const Rational& scale = Rational(1));
  /// Adds scale * a * b, or scale * a * conj(b) when conj_b is set.
  void add_product(const Cyclotomic& a, const Cyclotomic& b, const Rational& scale,
                   bool conj_b = false);

  Cyclotomic result() const;

 private:
  void widen(std::uint32_t conductor);

  std::uint32_t n_;
  std::vector<Rational> cyclic_;
};

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t n);

}  // namespace charkit

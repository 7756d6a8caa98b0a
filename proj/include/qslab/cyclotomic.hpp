#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qslab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Integer coefficients of the n-th cyclotomic polynomial, constant term
/// first. Results are memoised.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n);

/// Euler's totient.
unsigned totient(unsigned n);

/// Exact element of Q(zeta_e), stored in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1) reduced modulo Phi_e. Rational values are
/// always stored with conductor 1, so equal rationals compare equal
/// structurally; mixed conductors are lifted to their lcm.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(std::int64_t v) : Cyclotomic(Rational(v)) {}  // NOLINT(implicit)
  Cyclotomic(Rational v);                                   // NOLINT(implicit)

  /// zeta_e^power.
  static Cyclotomic root_of_unity(unsigned conductor, std::uint64_t power);
  /// Builds sum_i coefficients[i] * zeta_e^i (any length; reduced here).
  static Cyclotomic from_powers(unsigned conductor, std::vector<Rational> coefficients);

  unsigned conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const noexcept { return conductor_ == 1; }
  bool is_integer() const;
  Rational to_rational() const;       // throws std::domain_error
  std::int64_t to_integer() const;    // throws std::domain_error

  Cyclotomic conj() const;
  /// Same value expressed over Q(zeta_target); target must be a multiple of
  /// the conductor.
  Cyclotomic lifted(unsigned target) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order: conductor first, then coefficients lexicographically.
  /// On rationals this is the numeric order.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// "3", "-1/2", or "1+2*E(4)^1"-style sums (GAP's E(n) notation).
  std::string to_string() const;

 private:
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs);
  void normalize();

  unsigned conductor_ = 1;
  std::vector<Rational> coeffs_;
};

}  // namespace qslab

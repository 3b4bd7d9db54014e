#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficient k multiplies z^k. The representation is canonical: no
/// trailing zero coefficients, and the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);
  /// c * z^k
  static IntPolynomial monomial(BigInt c, int k);
  /// (1 + z)^n
  static IntPolynomial one_plus_z_pow(int n);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Zero beyond the degree.
  BigInt coefficient(int k) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);
  /// Multiply by z^k.
  IntPolynomial shifted(int k) const;
  IntPolynomial pow(int e) const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(IntPolynomial a);

  bool operator==(const IntPolynomial&) const = default;

  /// "1 + 4z + 3z^2 + z^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// gcd of the coefficients, with the sign of the leading coefficient.
BigInt content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Greatest common divisor (primitive, positive leading coefficient).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Exact division; throws std::domain_error if b does not divide a over Z.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

std::complex<double> evaluate(const IntPolynomial& p, std::complex<double> z);
std::complex<long double> evaluate(const IntPolynomial& p, std::complex<long double> z);
Rational evaluate(const IntPolynomial& p, const Rational& z);
BigInt evaluate(const IntPolynomial& p, const BigInt& z);

}  // namespace indpoly

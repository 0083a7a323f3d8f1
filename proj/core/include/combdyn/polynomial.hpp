#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace combdyn {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major. Adjacency matrices use entries 0/1.
using IntMatrix = std::vector<std::vector<int>>;

/// Polynomial with arbitrary-precision integer coefficients in one variable.
/// coefficients()[k] is the coefficient of l^k. The representation is kept
/// canonical: no trailing zeros, and the zero polynomial is stored as {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }
  static IntPolynomial monomial(int degree, BigInt c = 1);

  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of l^k; zero past the degree.
  BigInt coefficient(int k) const;
  const BigInt& leading() const noexcept { return coeffs_.back(); }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Returns q with p == d * q when such an integer polynomial exists.
/// Throws Error(DivisorZero) if d is zero.
std::optional<IntPolynomial> divides_exactly(const IntPolynomial& d, const IntPolynomial& p);

/// l^n - 1. Throws Error(OutOfRange) for n < 1.
IntPolynomial cyclotomic_like(int n);

/// det(l*I - m), computed by fraction-free (Bareiss) elimination over Z[l].
/// A 0x0 matrix gives the constant 1. Throws Error(NotSquare).
IntPolynomial charpoly(const IntMatrix& m);

/// Descending powers, e.g. "l^3 - l^2 - l + 1".
std::string to_string(const IntPolynomial& p, std::string_view variable = "l");

/// {"coeffs": ["c0", "c1", ...], "display": "λ^3 - ..."} with decimal strings.
std::string to_json(const IntPolynomial& p);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace combdyn

#include "combdyn/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "combdyn/error.hpp"
#include "json.hpp"

namespace combdyn {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt c) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, BigInt{0});
  coeffs.back() = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt{0});
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt{0});
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

std::optional<IntPolynomial> divides_exactly(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw Error(ErrorCode::DivisorZero, "division by the zero polynomial");
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < d.degree()) return std::nullopt;

  // Schoolbook long division. If p = d*q over Z then each leading quotient
  // coefficient is an exact integer, so a nonzero remainder on any step
  // means no integer quotient exists.
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  const auto dc = d.coefficients();
  const std::size_t dn = dc.size();
  std::vector<BigInt> q(rem.size() - dn + 1, BigInt{0});
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    BigInt r;
    BigInt factor;
    boost::multiprecision::divide_qr(top, dc.back(), factor, r);
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= factor * dc[j];
    q[k] = std::move(factor);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial cyclotomic_like(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "l^n - 1 needs n >= 1");
  return IntPolynomial::monomial(n) - IntPolynomial{1};
}

namespace {

IntPolynomial exact_quotient(const IntPolynomial& p, const IntPolynomial& d) {
  auto q = divides_exactly(d, p);
  if (!q) throw std::logic_error("Bareiss step produced an inexact division");
  return std::move(*q);
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& m) {
  const std::size_t dim = m.size();
  for (const auto& row : m) {
    if (row.size() != dim) {
      throw Error(ErrorCode::NotSquare, "matrix has " + std::to_string(dim) + " rows but a row of length " +
                                            std::to_string(row.size()));
    }
  }
  if (dim == 0) return IntPolynomial{1};

  std::vector<std::vector<IntPolynomial>> a(dim, std::vector<IntPolynomial>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a[i][j] = IntPolynomial::constant(-m[i][j]);
      if (i == j) a[i][j] += IntPolynomial::monomial(1);
    }
  }

  int sign = 1;
  IntPolynomial prev{1};
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < dim && a[r][k].is_zero()) ++r;
      if (r == dim) return IntPolynomial{};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    const IntPolynomial& pivot = a[k][k];
    for (std::size_t i = k + 1; i < dim; ++i) {
      const IntPolynomial& lead = a[i][k];
      const bool lead_zero = lead.is_zero();
      for (std::size_t j = k + 1; j < dim; ++j) {
        IntPolynomial next = pivot * a[i][j];
        if (!lead_zero) next -= lead * a[k][j];
        a[i][j] = exact_quotient(next, prev);
      }
      a[i][k] = IntPolynomial{};
    }
    prev = pivot;
  }
  IntPolynomial det = a[dim - 1][dim - 1];
  return sign > 0 ? det : -det;
}

std::string to_string(const IntPolynomial& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.str();
    if (k >= 1) out += variable;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_json(const IntPolynomial& p) {
  nlohmann::ordered_json j;
  auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  j["display"] = to_string(p, "λ");
  return j.dump();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

}  // namespace combdyn

#pragma once

// Exact integer polynomials in z, truncated power series, and bivariate
// polynomials P(z, t) stored as polynomials in t with coefficients in Z[z].

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thuelab {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  BigInt content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  /// Largest k with z^k dividing the polynomial.
  std::size_t low_order() const;
  IntPolynomial shift_down(std::size_t k) const;

  double evaluate(double z) const;
  /// Sign of p(num / 2^exp), computed exactly.
  int sign_at_dyadic(const BigInt& num, unsigned exp) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact quotient a / b in Z[z]; throws std::domain_error if b does not divide a.
  friend IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// True iff a and b are nonzero rational multiples of one another.
bool proportional(const IntPolynomial& a, const IntPolynomial& b);

class PowerSeries {
 public:
  /// Coefficients of z^0..z^order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  PowerSeries(std::vector<BigInt> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return coeffs_.at(k); }
  BigInt& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// 1 / (1 - s) for a series with zero constant term.
PowerSeries geometric(const PowerSeries& s);
PowerSeries to_series(const IntPolynomial& p, std::size_t order);

/// P(z, t) = sum_k by_t[k](z) * t^k.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  explicit BiPolynomial(std::vector<IntPolynomial> by_t);

  long degree_t() const noexcept { return static_cast<long>(by_t_.size()) - 1; }
  const IntPolynomial& coeff_t(std::size_t k) const { return by_t_.at(k); }
  const std::vector<IntPolynomial>& by_t() const noexcept { return by_t_; }

  BiPolynomial derivative_t() const;
  /// P(z, s(z)) truncated to the order of s.
  PowerSeries substitute(const PowerSeries& s) const;

  std::string to_string() const;
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

 private:
  std::vector<IntPolynomial> by_t_;
};

}  // namespace thuelab

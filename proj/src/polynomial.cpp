#include "thuelab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace thuelab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * k);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

std::size_t IntPolynomial::low_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

IntPolynomial IntPolynomial::shift_down(std::size_t k) const {
  if (k > low_order() && !is_zero()) throw std::domain_error("shift_down removes nonzero terms");
  if (k >= coeffs_.size()) return {};
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                           coeffs_.end()));
}

double IntPolynomial::evaluate(double z) const {
  double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k].convert_to<double>();
  return acc;
}

int IntPolynomial::sign_at_dyadic(const BigInt& num, unsigned exp) const {
  // 2^(exp * deg) * p(num / 2^exp) = sum_k c_k num^k 2^(exp (deg - k)), by Horner.
  if (is_zero()) return 0;
  const std::size_t deg = coeffs_.size() - 1;
  BigInt acc = coeffs_[deg];
  for (std::size_t k = deg; k-- > 0;) {
    acc = acc * num + coeffs_[k] * (BigInt(1) << (exp * (deg - k)));
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<BigInt> out(a.coeffs_);
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  std::vector<BigInt> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top % b.leading() != 0) throw std::domain_error("inexact polynomial division");
    const BigInt q = top / b.leading();
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw std::domain_error("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag;
    if (k > 0) {
      if (mag != 1) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

bool proportional(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.degree() != b.degree()) return false;
  // a * lc(b) == b * lc(a)
  return b.leading() * a == a.leading() * b;
}

// ---------------------------------------------------------------------------
// Power series

PowerSeries::PowerSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<BigInt> out(order + 1);
  for (std::size_t k = 0; k <= order && k < coeffs_.size(); ++k) out[k] = coeffs_[k];
  return PowerSeries(std::move(out));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) out[k] = a[k] + b[k];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries geometric(const PowerSeries& s) {
  if (s[0] != 0) throw std::domain_error("geometric series needs a zero constant term");
  // g = 1 + s g, solved coefficient by coefficient.
  PowerSeries g(s.order());
  g[0] = 1;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * g[k - i];
    g[k] = acc;
  }
  return g;
}

PowerSeries to_series(const IntPolynomial& p, std::size_t order) {
  PowerSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) out[k] = p.coeff(k);
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate

BiPolynomial::BiPolynomial(std::vector<IntPolynomial> by_t) : by_t_(std::move(by_t)) {
  while (!by_t_.empty() && by_t_.back().is_zero()) by_t_.pop_back();
}

BiPolynomial BiPolynomial::derivative_t() const {
  std::vector<IntPolynomial> out;
  for (std::size_t k = 1; k < by_t_.size(); ++k) {
    out.push_back(BigInt(k) * by_t_[k]);
  }
  return BiPolynomial(std::move(out));
}

PowerSeries BiPolynomial::substitute(const PowerSeries& s) const {
  const std::size_t order = s.order();
  PowerSeries acc(order);
  PowerSeries power(order);
  power[0] = 1;
  for (std::size_t k = 0; k < by_t_.size(); ++k) {
    acc = acc + to_series(by_t_[k], order) * power;
    power = power * s;
  }
  return acc;
}

std::string BiPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < by_t_.size(); ++k) {
    if (by_t_[k].is_zero()) continue;
    if (!first) out << " + ";
    out << '(' << by_t_[k].to_string('z') << ')';
    if (k > 0) out << "*t";
    if (k > 1) out << '^' << k;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace thuelab

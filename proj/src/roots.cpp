#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>

#include "thuelab/walks.hpp"

namespace thuelab {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rational>;  // ascending degree, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rational(const IntPolynomial& p) {
  RatPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * k);
  trim(out);
  return out;
}

// Quotient and remainder of a / b.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

Rational to_rational(const Dyadic& d) { return Rational(d.num, BigInt(1) << d.exp); }

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

std::size_t sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const Rational v = evaluate(p, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_in(const std::vector<RatPoly>& seq, const Dyadic& a, const Dyadic& b) {
  const std::size_t va = sign_variations(seq, to_rational(a));
  const std::size_t vb = sign_variations(seq, to_rational(b));
  return va >= vb ? va - vb : 0;
}

// Same point, expressed with a larger exponent.
Dyadic rescale(const Dyadic& d, unsigned exp) { return {d.num << (exp - d.exp), exp}; }

bool vanishes_at(const RatPoly& p, const Dyadic& x) { return evaluate(p, to_rational(x)) == 0; }

constexpr double kTargetWidth = 1e-10;
constexpr unsigned kGridExp = 10;

}  // namespace

double Dyadic::to_double() const {
  return std::ldexp(num.convert_to<double>(), -static_cast<int>(exp));
}

std::string Dyadic::to_string() const {
  std::ostringstream out;
  out << num << "/2^" << exp;
  return out.str();
}

std::size_t sturm_count(const IntPolynomial& p, const Dyadic& a, const Dyadic& b) {
  if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
  return count_in(sturm_sequence(to_rational(p)), a, b);
}

std::vector<RootBracket> positive_roots_in_unit_interval(const IntPolynomial& p_in) {
  if (p_in.is_zero()) throw std::domain_error("zero polynomial has no isolated roots");
  const IntPolynomial p = p_in.shift_down(p_in.low_order());  // roots at 0 are outside (0, 1]
  const RatPoly rp = to_rational(p);
  const RatPoly g = gcd(rp, derivative(rp));
  const RatPoly squarefree = g.size() > 1 ? divmod(rp, g).first : rp;
  const auto seq = sturm_sequence(squarefree);
  const auto repeated = g.size() > 1 ? sturm_sequence(g) : std::vector<RatPoly>{};

  std::vector<RootBracket> out;
  // Work list of cells (lo, hi] with their root counts, in increasing order.
  struct Cell {
    Dyadic lo, hi;
  };
  std::vector<Cell> cells;
  const BigInt grid = BigInt(1) << kGridExp;
  for (BigInt k = 0; k < grid; ++k) cells.push_back({{k, kGridExp}, {k + 1, kGridExp}});

  for (std::size_t i = 0; i < cells.size(); ++i) {
    Cell cell = cells[i];
    const std::size_t count = count_in(seq, cell.lo, cell.hi);
    if (count == 0) continue;
    if (count > 1) {
      // Split and process the halves next, keeping ascending order.
      const unsigned e = cell.lo.exp + 1;
      const Dyadic lo = rescale(cell.lo, e);
      const Dyadic mid{lo.num + 1, e};
      const Dyadic hi = rescale(cell.hi, e);
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, {{lo, mid}, {mid, hi}});
      continue;
    }
    RootBracket root;
    if (vanishes_at(squarefree, cell.hi)) {
      root.lo = root.hi = cell.hi;
    } else {
      Dyadic lo = cell.lo;
      Dyadic hi = cell.hi;
      while (hi.to_double() - lo.to_double() > kTargetWidth) {
        const unsigned e = lo.exp + 1;
        lo = rescale(lo, e);
        hi = rescale(hi, e);
        const Dyadic mid{lo.num + 1, e};
        if (vanishes_at(squarefree, mid)) {
          lo = hi = mid;
          break;
        }
        if (count_in(seq, lo, mid) == 1) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      root.lo = lo;
      root.hi = hi;
    }
    root.value = (root.lo.to_double() + root.hi.to_double()) / 2;
    if (!repeated.empty()) {
      const bool point = root.lo.num == root.hi.num && root.lo.exp == root.hi.exp;
      root.multiplicity_suspect = point ? vanishes_at(g, root.hi)
                                        : count_in(repeated, root.lo, root.hi) > 0;
    }
    out.push_back(root);
  }
  return out;
}

}  // namespace thuelab

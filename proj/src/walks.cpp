#include "thuelab/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "thuelab/errors.hpp"

namespace thuelab {

std::string to_string(StepSystem sys) {
  switch (sys) {
    case StepSystem::alg1: return "alg1";
    case StepSystem::erase: return "erase";
    case StepSystem::search: return "search";
  }
  return "?";
}

StepSystem parse_step_system(std::string_view name) {
  if (name == "alg1") return StepSystem::alg1;
  if (name == "erase") return StepSystem::erase;
  if (name == "search") return StepSystem::search;
  throw DomainError("unknown step system '" + std::string(name) + "'");
}

unsigned step_weight(StepSystem sys, int d) {
  if (d == 1) return 1;
  switch (sys) {
    case StepSystem::alg1: return d <= 1 ? 1 : 0;
    case StepSystem::erase: return d <= -3 ? 1 : 0;
    case StepSystem::search: return d == -1 ? 1 : (d <= -2 ? 4 : 0);
  }
  return 0;
}

namespace {

// One DP row: next[h] for h >= 1 given row[] indexed by height, using suffix
// sums for the unbounded downward steps. Works for BigInt and double.
template <class T>
void walk_step(StepSystem sys, const std::vector<T>& row, std::vector<T>& next,
               std::vector<T>& suffix, std::size_t top) {
  // suffix[h] = sum_{x >= h} row[x]; zero above top, up to index top + 4.
  suffix.assign(top + 5, T(0));
  for (std::size_t h = top + 1; h-- > 0;) suffix[h] = suffix[h + 1] + row[h];
  next.assign(row.size(), T(0));
  for (std::size_t h = 1; h <= top + 1 && h < next.size(); ++h) {
    T v = row[h - 1];
    switch (sys) {
      case StepSystem::alg1:
        v += suffix[h];
        break;
      case StepSystem::erase:
        v += suffix[h + 3];
        break;
      case StepSystem::search:
        v += (h + 1 <= top ? row[h + 1] : T(0));
        v += suffix[h + 2] * 4;
        break;
    }
    next[h] = v;
  }
}

}  // namespace

std::vector<BigInt> count_walks(StepSystem sys, std::size_t m_max) {
  std::vector<BigInt> counts(m_max + 1);
  std::vector<BigInt> row(m_max + 2), next, suffix;
  row[0] = 1;
  for (std::size_t k = 1; k <= m_max; ++k) {
    walk_step(sys, row, next, suffix, k - 1);
    row.swap(next);
    counts[k] = row[1];
  }
  return counts;
}

std::vector<double> log_count_walks(StepSystem sys, std::size_t m_max) {
  std::vector<double> logs(m_max + 1, -std::numeric_limits<double>::infinity());
  std::vector<double> row(m_max + 2, 0.0), next, suffix;
  row[0] = 1.0;
  double scale = 0;  // row holds T / exp(scale)
  for (std::size_t k = 1; k <= m_max; ++k) {
    walk_step(sys, row, next, suffix, k - 1);
    row.swap(next);
    const double peak = *std::max_element(row.begin(), row.end());
    for (double& x : row) x /= peak;
    scale += std::log(peak);
    if (row[1] > 0) logs[k] = scale + std::log(row[1]);
  }
  return logs;
}

PowerSeries series_from_equation(StepSystem sys, std::size_t order) {
  if (order == 0) throw DomainError("series order must be >= 1");
  PowerSeries t(0);
  for (std::size_t k = 1; k <= order; ++k) {
    // z * Phi(t) at order k only needs Phi, and hence t, to order k - 1.
    const PowerSeries u = t.truncated(k - 1);
    PowerSeries one(k - 1);
    one[0] = 1;
    PowerSeries phi(k - 1);
    switch (sys) {
      case StepSystem::alg1:
        phi = geometric(u);
        break;
      case StepSystem::erase: {
        const PowerSeries u2 = u * u;
        phi = one + (u2 * u2) * geometric(u);
        break;
      }
      case StepSystem::search: {
        const PowerSeries u2 = u * u;
        PowerSeries four(k - 1);
        four[0] = 4;
        phi = one + u2 + four * (u2 * u) * geometric(u);
        break;
      }
    }
    PowerSeries next(k);
    for (std::size_t j = 0; j < k; ++j) next[j + 1] = phi[j];
    t = std::move(next);
  }
  return t;
}

BiPolynomial defining_polynomial(StepSystem sys) {
  switch (sys) {
    case StepSystem::alg1:
      return BiPolynomial({IntPolynomial{0, 1}, IntPolynomial{-1}, IntPolynomial{1}});
    case StepSystem::erase:
      return BiPolynomial({IntPolynomial{0, 1}, IntPolynomial{-1, -1}, IntPolynomial{1},
                           IntPolynomial{}, IntPolynomial{0, 1}});
    case StepSystem::search:
      return BiPolynomial(
          {IntPolynomial{0, 1}, IntPolynomial{-1, -1}, IntPolynomial{1, 1}, IntPolynomial{0, 3}});
  }
  throw DomainError("unknown step system");
}

bool check_defining_polynomial(const BiPolynomial& p, const PowerSeries& s, std::size_t order) {
  if (order > s.order()) throw DomainError("check order exceeds the series order");
  const PowerSeries value = p.substitute(s.truncated(order));
  for (std::size_t k = 0; k <= order; ++k) {
    if (value[k] != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Resultants

IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  IntPolynomial prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return {};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = IntPolynomial{};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPolynomial resultant_t(const BiPolynomial& p, const BiPolynomial& q) {
  const long dp = p.degree_t();
  const long dq = q.degree_t();
  if (dp < 0 || dq < 0) return {};
  const std::size_t size = static_cast<std::size_t>(dp + dq);
  if (size == 0) return IntPolynomial{1};
  std::vector<std::vector<IntPolynomial>> m(size, std::vector<IntPolynomial>(size));
  // dq rows of p's coefficients (highest degree first), then dp rows of q's.
  for (long i = 0; i < dq; ++i) {
    for (long k = 0; k <= dp; ++k) m[i][i + k] = p.coeff_t(static_cast<std::size_t>(dp - k));
  }
  for (long i = 0; i < dp; ++i) {
    for (long k = 0; k <= dq; ++k) m[dq + i][i + k] = q.coeff_t(static_cast<std::size_t>(dq - k));
  }
  return determinant(std::move(m));
}

Discriminant discriminant_wrt_t(const BiPolynomial& p) {
  const long n = p.degree_t();
  if (n < 1) throw std::domain_error("polynomial is constant in t");
  Discriminant d;
  d.resultant = resultant_t(p, p.derivative_t());
  IntPolynomial disc = exact_divide(d.resultant, p.coeff_t(static_cast<std::size_t>(n)));
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  d.discriminant = disc;
  d.normalized = disc.is_zero() ? disc : disc.shift_down(disc.low_order()).primitive_part();
  return d;
}

// ---------------------------------------------------------------------------
// Growth

GrowthReport growth_report(StepSystem sys, std::size_t m_max) {
  if (m_max < 100) throw DomainError("growth report needs m_max >= 100");
  GrowthReport report;
  report.sys = sys;
  report.discriminant = discriminant_wrt_t(defining_polynomial(sys)).normalized;
  const auto roots = positive_roots_in_unit_interval(report.discriminant);
  if (roots.empty()) throw std::runtime_error("discriminant has no root in (0, 1]");
  report.root = roots.front();
  report.rho = report.root.value;

  const std::vector<double> logs = log_count_walks(sys, m_max + 1);
  for (std::size_t m : {m_max / 4, m_max / 2, m_max}) {
    if (std::isfinite(logs[m]) && std::isfinite(logs[m + 1])) {
      report.ratios.emplace_back(m, std::exp(logs[m + 1] - logs[m]));
    }
  }
  const std::size_t exact_upto = std::min<std::size_t>(300, m_max);
  const auto exact = count_walks(sys, exact_upto);
  for (std::size_t m = 1; m <= exact_upto; ++m) {
    if (exact[m] == 0) continue;
    const double exact_log = std::log(static_cast<long double>(exact[m].convert_to<long double>()));
    report.max_log_error = std::max(report.max_log_error, std::abs(exact_log - logs[m]));
  }

  const double lo = report.root.lo.to_double();
  const double hi = report.root.hi.to_double();
  switch (sys) {
    case StepSystem::alg1:
      report.comparison = "rho = 1/4";
      report.threshold = 0.25;
      report.holds = lo <= 0.25 && 0.25 <= hi;
      break;
    case StepSystem::erase:
      report.comparison = "rho > 5^(-1/2)";
      report.threshold = 1.0 / std::sqrt(5.0);
      report.holds = lo > report.threshold;
      break;
    case StepSystem::search:
      report.comparison = "rho > 1/4";
      report.threshold = 0.25;
      report.holds = lo > report.threshold;
      break;
  }
  return report;
}

double bound_lhs_log2(StepSystem scenario, std::size_t alphabet, std::size_t m) {
  const double c = static_cast<double>(alphabet);
  switch (scenario) {
    case StepSystem::alg1: return static_cast<double>(m) * std::log2(c);
    case StepSystem::erase: return static_cast<double>(m) * std::log2(c - 3);
    case StepSystem::search: return static_cast<double>(m) * std::log2(c - 2);
  }
  return 0;
}

namespace {

std::size_t walk_index(StepSystem scenario, std::size_t m) {
  switch (scenario) {
    case StepSystem::alg1: return m;
    case StepSystem::erase: return 2 * m + 3;
    case StepSystem::search: return m + 1;
  }
  return m;
}

}  // namespace

double bound_rhs_log2(StepSystem scenario, std::size_t alphabet, std::size_t n, std::size_t m,
                      const std::vector<double>& log_t) {
  const double log2_t = log_t.at(walk_index(scenario, m)) / std::log(2.0);
  double rhs = std::log2(static_cast<double>(n)) + log2_t +
               static_cast<double>(n) * std::log2(static_cast<double>(alphabet));
  if (scenario == StepSystem::erase) rhs += std::log2(2.0 * static_cast<double>(m));
  return rhs;
}

BoundReport counting_bound_report(StepSystem scenario, std::size_t alphabet, std::size_t n,
                                  std::size_t sweep_max) {
  const std::size_t min_alphabet =
      scenario == StepSystem::alg1 ? 2 : (scenario == StepSystem::erase ? 4 : 3);
  if (alphabet < min_alphabet) throw DomainError("alphabet too small for this scenario");
  if (n == 0 || sweep_max == 0) throw DomainError("n and the sweep bound must be positive");

  BoundReport report;
  report.scenario = scenario;
  report.alphabet = alphabet;
  report.n = n;
  report.sweep_max = sweep_max;
  const auto log_t = log_count_walks(scenario, walk_index(scenario, sweep_max));

  for (std::size_t m = sweep_max; m >= 1; --m) {
    const double lhs = bound_lhs_log2(scenario, alphabet, m);
    const double rhs = bound_rhs_log2(scenario, alphabet, n, m, log_t);
    if (!(lhs > rhs)) break;
    report.crossover = m;
    report.lhs_log2 = lhs;
    report.rhs_log2 = rhs;
  }
  return report;
}

}  // namespace thuelab

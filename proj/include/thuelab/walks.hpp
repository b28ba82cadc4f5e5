#pragma once

// Walk enumeration for the three difference-sequence families, their
// generating functions, discriminants and growth rates, and the counting
// inequalities that the walk counts feed into.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuelab/polynomial.hpp"

namespace thuelab {

/// Step sets (weights in parentheses), all walks start with +1:
///   alg1:   every d <= 1 (1)
///   erase:  +1 (1), every d <= -3 (1)
///   search: +1 (1), -1 (1), every d <= -2 (4)
enum class StepSystem { alg1, erase, search };

std::string to_string(StepSystem sys);
StepSystem parse_step_system(std::string_view name);

/// Weight of a single step d in the system (0 when d is not allowed).
unsigned step_weight(StepSystem sys, int d);

/// T_0..T_{m_max}: weighted walks of length m, prefix sums >= 1, total 1.
/// T_0 is 0.
std::vector<BigInt> count_walks(StepSystem sys, std::size_t m_max);

/// Natural logarithms of T_0..T_{m_max} from a rescaled floating DP;
/// -infinity where T_m = 0.
std::vector<double> log_count_walks(StepSystem sys, std::size_t m_max);

/// t = z * Phi(t) iterated to a fixed point, coefficients z^0..z^order.
PowerSeries series_from_equation(StepSystem sys, std::size_t order);

/// zt^4 + t^2 - (1+z)t + z for erase, -t + t^2 + z - tz + t^2 z + 3t^3 z for
/// search, t^2 - t + z for alg1.
BiPolynomial defining_polynomial(StepSystem sys);

/// True iff P(z, s(z)) vanishes through z^order.
bool check_defining_polynomial(const BiPolynomial& p, const PowerSeries& s, std::size_t order);

/// Determinant of an integer-polynomial matrix (fraction-free elimination).
IntPolynomial determinant(std::vector<std::vector<IntPolynomial>> m);

/// Sylvester resultant with respect to t.
IntPolynomial resultant_t(const BiPolynomial& p, const BiPolynomial& q);

struct Discriminant {
  IntPolynomial resultant;     // Res_t(P, dP/dt)
  IntPolynomial discriminant;  // (-1)^(n(n-1)/2) Res / lc_t(P)
  IntPolynomial normalized;    // primitive, positive leading coefficient, z^k factor removed
};

/// Throws std::domain_error for P constant in t.
Discriminant discriminant_wrt_t(const BiPolynomial& p);

// ---------------------------------------------------------------------------
// Roots

/// num / 2^exp
struct Dyadic {
  BigInt num;
  unsigned exp = 0;

  double to_double() const;
  std::string to_string() const;
};

struct RootBracket {
  Dyadic lo;
  Dyadic hi;
  double value = 0;  // midpoint
  bool multiplicity_suspect = false;

  double width() const { return hi.to_double() - lo.to_double(); }
};

/// Number of distinct real roots of p in (a, b], a < b, by a Sturm sequence.
std::size_t sturm_count(const IntPolynomial& p, const Dyadic& a, const Dyadic& b);

/// Certified roots in (0, 1]: grid sign changes on the square-free part,
/// checked against a Sturm count, then bisection to width <= 1e-10.
/// Brackets [x, x] mark exact dyadic roots. Repeated roots are flagged.
std::vector<RootBracket> positive_roots_in_unit_interval(const IntPolynomial& p);

// ---------------------------------------------------------------------------
// Growth and counting bounds

struct GrowthReport {
  StepSystem sys = StepSystem::alg1;
  IntPolynomial discriminant;
  RootBracket root;
  double rho = 0;
  std::vector<std::pair<std::size_t, double>> ratios;  // (m, T_{m+1} / T_m)
  double max_log_error = 0;  // |log T_m (float DP) - log T_m (exact)| for m <= 300
  std::string comparison;    // e.g. "rho > 5^(-1/2)"
  double threshold = 0;
  bool holds = false;
};

/// Pre: m_max >= 100.
GrowthReport growth_report(StepSystem sys, std::size_t m_max);

struct BoundReport {
  StepSystem scenario = StepSystem::alg1;
  std::size_t alphabet = 0;
  std::size_t n = 0;
  std::size_t sweep_max = 0;
  /// Smallest M such that lhs > rhs for every M' in [M, sweep_max].
  std::optional<std::size_t> crossover;
  double lhs_log2 = 0;  // at the crossover
  double rhs_log2 = 0;
};

/// Both sides in log2:
///   alg1:   C^M       <= n T_M C^n
///   erase:  (C-3)^M   <= 2M n T_{2M+3} C^n
///   search: (C-2)^M   <= n T_{M+1} C^n
double bound_lhs_log2(StepSystem scenario, std::size_t alphabet, std::size_t m);
double bound_rhs_log2(StepSystem scenario, std::size_t alphabet, std::size_t n, std::size_t m,
                      const std::vector<double>& log_t);

BoundReport counting_bound_report(StepSystem scenario, std::size_t alphabet, std::size_t n,
                                  std::size_t sweep_max = 2000);

}  // namespace thuelab

#pragma once

// Brute-force references shared by the unit tests and the acceptance runner.
// Nothing here calls the detectors or DP code under test.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thuelab/words.hpp"

namespace oracle {

using thuelab::Symbol;
using BigInt = boost::multiprecision::cpp_int;

inline bool square_at(const std::vector<Symbol>& w, std::size_t end, std::size_t h) {
  for (std::size_t k = 0; k < h; ++k) {
    if (w[end - 2 * h + k] != w[end - h + k]) return false;
  }
  return true;
}

/// Halves of every square ending at the last position, ascending.
inline std::vector<std::size_t> suffix_halves(const std::vector<Symbol>& w) {
  std::vector<std::size_t> out;
  for (std::size_t h = 1; 2 * h <= w.size(); ++h) {
    if (square_at(w, w.size(), h)) out.push_back(h);
  }
  return out;
}

inline bool has_square(const std::vector<Symbol>& w, std::size_t h_min = 1) {
  for (std::size_t end = 2 * h_min; end <= w.size(); ++end) {
    for (std::size_t h = h_min; 2 * h <= end; ++h) {
      if (square_at(w, end, h)) return true;
    }
  }
  return false;
}

/// Ann's erase-game options, written from the rule: not among the last three symbols.
inline std::vector<Symbol> erase_options(const std::vector<Symbol>& w, std::size_t c) {
  std::vector<Symbol> out;
  for (std::size_t s = 0; s < c; ++s) {
    bool seen = false;
    for (std::size_t k = w.size() >= 3 ? w.size() - 3 : 0; k < w.size(); ++k) seen |= w[k] == s;
    if (!seen) out.push_back(static_cast<Symbol>(s));
  }
  return out;
}

/// Ann's nonrepetitive-game options from rules (i)-(iii), 1-based as written:
/// m = |w| + 1 and s_k = w[k - 1].
inline std::vector<Symbol> nonrep_options(const std::vector<Symbol>& w, std::size_t c) {
  const std::size_t m = w.size() + 1;
  auto s = [&](std::size_t k) { return w[k - 1]; };
  std::vector<bool> ex(c, false);
  if (m >= 3) ex[s(m - 2)] = true;
  if (m >= 5 && s(m - 1) == s(m - 4)) ex[s(m - 3)] = true;
  std::size_t count = 0;
  for (bool e : ex) count += e;
  if (count <= 1 && m >= 5) ex[s(m - 4)] = true;
  std::vector<Symbol> out;
  for (std::size_t k = 0; k < c; ++k) {
    if (!ex[k]) out.push_back(static_cast<Symbol>(k));
  }
  return out;
}

struct TreeReport {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t violations = 0;
};

/// Every play of the nonrepetitive game with `moves` moves, Ann choosing any
/// allowed symbol and Ben any symbol. Enumerating Ben's symbol at every node
/// covers every deterministic Ben table. A violation is a square of half 2..4
/// (or any half >= 2 when `any_half` is set) appearing after some move.
inline TreeReport nonrep_tree(std::size_t c, std::size_t moves, bool any_half = false) {
  TreeReport report;
  std::vector<Symbol> w;
  std::function<void()> visit = [&]() {
    ++report.nodes;
    if (w.size() == moves) {
      ++report.leaves;
      return;
    }
    const bool ann = w.size() % 2 == 0;
    std::vector<Symbol> options;
    if (ann) {
      options = nonrep_options(w, c);
    } else {
      for (std::size_t s = 0; s < c; ++s) options.push_back(static_cast<Symbol>(s));
    }
    for (Symbol s : options) {
      w.push_back(s);
      bool bad = false;
      for (std::size_t h : suffix_halves(w)) bad |= h >= 2 && (any_half || h <= 4);
      if (bad) {
        ++report.violations;
      } else {
        visit();
      }
      w.pop_back();
    }
  };
  visit();
  return report;
}

/// Every play of the erase game with `moves` moves (Ann on odd moves).
/// A violation is an erasure of half 2 or 3, or a held word with a square.
inline TreeReport erase_tree(std::size_t c, std::size_t moves) {
  TreeReport report;
  std::vector<Symbol> w;
  std::function<void(std::size_t)> visit = [&](std::size_t move) {
    ++report.nodes;
    if (move == moves) {
      ++report.leaves;
      return;
    }
    std::vector<Symbol> options;
    if (move % 2 == 0) {
      options = erase_options(w, c);
    } else {
      for (std::size_t s = 0; s < c; ++s) options.push_back(static_cast<Symbol>(s));
    }
    for (Symbol s : options) {
      const std::vector<Symbol> saved = w;
      w.push_back(s);
      const auto halves = suffix_halves(w);
      if (!halves.empty()) {
        const std::size_t h = halves.front();
        if (h == 2 || h == 3) ++report.violations;
        w.resize(w.size() - h);
      }
      if (has_square(w)) ++report.violations;
      visit(move + 1);
      w = saved;
    }
  };
  visit(0);
  return report;
}

/// Weighted walks of length m with prefix sums >= 1 and total 1, by listing
/// every step sequence. weight(d) == 0 means d is not allowed.
inline BigInt brute_walks(std::size_t m, const std::function<unsigned(int)>& weight) {
  BigInt total = 0;
  std::vector<int> steps;
  std::function<void(long, BigInt)> go = [&](long height, BigInt w) {
    if (steps.size() == m) {
      if (height == 1) total += w;
      return;
    }
    // Any step below -height would break the prefix condition.
    for (int d = 1; d >= -static_cast<int>(height); --d) {
      const unsigned wd = weight(d);
      if (wd == 0 || height + d < 1) continue;
      steps.push_back(d);
      go(height + d, w * wd);
      steps.pop_back();
    }
  };
  // The first step must be +1 to reach height 1 from 0.
  if (m == 0) return 0;
  if (weight(1) == 0) return 0;
  steps.push_back(1);
  go(1, weight(1));
  return total;
}

inline BigInt catalan(unsigned k) {
  BigInt c = 1;
  for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace oracle

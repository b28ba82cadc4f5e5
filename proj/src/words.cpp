#include "thuelab/words.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "thuelab/errors.hpp"

namespace thuelab {

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0 || size > kMaxAlphabet) {
    throw DomainError("alphabet size must be in 1.." + std::to_string(kMaxAlphabet));
  }
}

bool Word::fits(const Alphabet& alphabet) const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](Symbol s) { return alphabet.contains(s); });
}

// ---------------------------------------------------------------------------
// Display

Notation notation_for(std::size_t alphabet_size) noexcept {
  return alphabet_size <= 9 ? Notation::digits : Notation::letters;
}

std::string symbol_to_string(Symbol s, Notation notation) {
  if (notation == Notation::digits) {
    if (s >= 9) throw DomainError("symbol " + std::to_string(s) + " has no digit rendering");
    return std::string(1, static_cast<char>('1' + s));
  }
  if (s >= 26) throw DomainError("symbol " + std::to_string(s) + " has no letter rendering");
  return std::string(1, static_cast<char>('a' + s));
}

std::string to_string(std::span<const Symbol> w, Notation notation) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out += symbol_to_string(s, notation);
  return out;
}

std::string to_string(std::span<const Symbol> w) {
  const bool small = std::all_of(w.begin(), w.end(), [](Symbol s) { return s < 9; });
  return to_string(w, small ? Notation::digits : Notation::letters);
}

Word parse_word(std::string_view text, Notation notation) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (notation == Notation::digits && c >= '1' && c <= '9') {
      symbols.push_back(static_cast<Symbol>(c - '1'));
    } else if (notation == Notation::letters && c >= 'a' && c <= 'z') {
      symbols.push_back(static_cast<Symbol>(c - 'a'));
    } else {
      throw DomainError(std::string("invalid symbol character '") + c + "'");
    }
  }
  return Word(std::move(symbols));
}

Word parse_word(std::string_view text) {
  if (text.empty()) return Word{};
  const char c = text.front();
  return parse_word(text, (c >= '1' && c <= '9') ? Notation::digits : Notation::letters);
}

// ---------------------------------------------------------------------------
// Squares

namespace {

bool blocks_equal(std::span<const Symbol> w, std::size_t first, std::size_t second,
                  std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    if (w[first + k] != w[second + k]) return false;
  }
  return true;
}

}  // namespace

std::optional<Repetition> min_square_at_least(std::span<const Symbol> w, std::size_t h_min) {
  if (h_min == 0) throw DomainError("h_min must be >= 1");
  for (std::size_t end = 2 * h_min; end <= w.size(); ++end) {
    for (std::size_t h = h_min; 2 * h <= end; ++h) {
      if (blocks_equal(w, end - 2 * h, end - h, h)) return Repetition{end, h};
    }
  }
  return std::nullopt;
}

bool is_nonrepetitive(std::span<const Symbol> w) { return !min_square_at_least(w, 1); }

std::optional<Repetition> min_square_at_least_fast(std::span<const Symbol> w,
                                                   std::size_t h_min) {
  if (h_min == 0) throw DomainError("h_min must be >= 1");
  const std::size_t n = w.size();
  std::optional<Repetition> best;
  for (std::size_t h = h_min; 2 * h <= n; ++h) {
    // A square of half h ending at end (1-based) needs w[i] == w[i+h] for the
    // h indices i = end-2h .. end-h-1; stop at the first full run.
    const std::size_t limit = best ? std::min(n, best->end) : n;
    std::size_t run = 0;
    for (std::size_t i = 0; i + h < limit; ++i) {
      run = (w[i] == w[i + h]) ? run + 1 : 0;
      if (run == h) {
        const std::size_t end = i + h + 1;
        if (!best || end < best->end) best = Repetition{end, h};
        break;
      }
    }
  }
  return best;
}

bool is_square_free(std::span<const Symbol> w, std::size_t h_min) {
  const std::size_t n = w.size();
  for (std::size_t h = h_min; 2 * h <= n; ++h) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + h < n; ++i) {
      run = (w[i] == w[i + h]) ? run + 1 : 0;
      if (run == h) return false;
    }
  }
  return true;
}

std::optional<Repetition> shortest_suffix_square(std::span<const Symbol> w,
                                                 std::size_t h_min) {
  if (h_min == 0) throw DomainError("h_min must be >= 1");
  const std::size_t n = w.size();
  if (n < 2 * h_min) return std::nullopt;
  const Symbol* p = w.data();
  const Symbol last = p[n - 1];
  if (h_min == 1 && p[n - 2] == last) return Repetition{n, 1};

  // Candidates for h >= 2 must match the last two symbols; test 64 halves at
  // a time with a branch-free mask and only compare full blocks on hits.
  const Symbol prev = p[n - 2];
  const std::size_t h_max = n / 2;
  for (std::size_t h = std::max<std::size_t>(h_min, 2); h <= h_max;) {
    const std::size_t stop = std::min(h_max, h + 63);
    std::uint64_t mask = 0;
    for (std::size_t k = h; k <= stop; ++k) {
      mask |= static_cast<std::uint64_t>((p[n - 1 - k] == last) & (p[n - 2 - k] == prev))
              << (k - h);
    }
    while (mask != 0) {
      const std::size_t half = h + static_cast<std::size_t>(__builtin_ctzll(mask));
      if (std::memcmp(p + n - 2 * half, p + n - half, half - 2) == 0) {
        return Repetition{n, half};
      }
      mask &= mask - 1;
    }
    h = stop + 1;
  }
  return std::nullopt;
}

std::vector<std::size_t> suffix_square_halves(std::span<const Symbol> w, std::size_t h_min) {
  std::vector<std::size_t> halves;
  const std::size_t n = w.size();
  for (std::size_t h = std::max<std::size_t>(h_min, 1); 2 * h <= n; ++h) {
    if (blocks_equal(w, n - 2 * h, n - h, h)) halves.push_back(h);
  }
  return halves;
}

// ---------------------------------------------------------------------------
// Thue substitution

namespace {

const std::array<std::vector<Symbol>, 3>& thue_images() {
  static const std::array<std::vector<Symbol>, 3> images = {
      std::vector<Symbol>{0, 1, 2, 0, 1},        // 1 -> 12312
      std::vector<Symbol>{0, 2, 0, 1, 2, 1},     // 2 -> 131232
      std::vector<Symbol>{0, 2, 1, 2, 0, 2, 1},  // 3 -> 1323132
  };
  return images;
}

}  // namespace

Word thue_substitute(std::span<const Symbol> w) {
  const auto& images = thue_images();
  std::vector<Symbol> out;
  out.reserve(w.size() * 7);
  for (Symbol s : w) {
    if (s > 2) throw DomainError("thue_substitute expects symbols in {1,2,3}");
    out.insert(out.end(), images[s].begin(), images[s].end());
  }
  return Word(std::move(out));
}

Word thue_word(std::size_t target_len) {
  if (target_len == 0) throw DomainError("thue_word target length must be >= 1");
  Word w{0};
  while (w.size() < target_len) w = thue_substitute(w);
  w.truncate(target_len);
  return w;
}

}  // namespace thuelab

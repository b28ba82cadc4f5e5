#pragma once

// Words over small alphabets, square (repetition) detection and the Thue
// substitution generator.
//
// Symbols are dense integers 0..C-1. Positions reported in Repetition are
// 1-based; indexing into a Word is 0-based like any container.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thuelab {

using Symbol = std::uint8_t;

inline constexpr std::size_t kMaxAlphabet = 256;

class Alphabet {
 public:
  explicit Alphabet(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool contains(std::size_t symbol) const noexcept { return symbol < size_; }

 private:
  std::size_t size_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  std::span<const Symbol> view() const noexcept { return symbols_; }
  operator std::span<const Symbol>() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  void pop_back() { symbols_.pop_back(); }
  void truncate(std::size_t length) { symbols_.resize(length); }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  bool fits(const Alphabet& alphabet) const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// A square xx ending at 1-based position `end`, with |x| = half.
struct Repetition {
  std::size_t end = 0;
  std::size_t half = 0;

  std::size_t start() const noexcept { return end - 2 * half + 1; }
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

// ---------------------------------------------------------------------------
// Display

/// digits renders symbol k as '1'+k (k < 9); letters renders 'a'+k (k < 26).
enum class Notation { digits, letters };

Notation notation_for(std::size_t alphabet_size) noexcept;
std::string to_string(std::span<const Symbol> w, Notation notation);
std::string to_string(std::span<const Symbol> w);
std::string symbol_to_string(Symbol s, Notation notation);

Word parse_word(std::string_view text, Notation notation);
/// Detects the notation from the first character; "" parses to the empty word.
Word parse_word(std::string_view text);

// ---------------------------------------------------------------------------
// Squares

/// Trusted oracle: direct scan over every (end, half) pair.
bool is_nonrepetitive(std::span<const Symbol> w);

/// Oracle: smallest end, then smallest half, among squares with half >= h_min.
std::optional<Repetition> min_square_at_least(std::span<const Symbol> w, std::size_t h_min);

/// O(n^2) detector: for each half h, a run of h positions with w[i] == w[i+h]
/// marks a square. Must agree with the oracle versions above.
bool is_square_free(std::span<const Symbol> w, std::size_t h_min = 1);
std::optional<Repetition> min_square_at_least_fast(std::span<const Symbol> w,
                                                   std::size_t h_min);

/// Square ending at the last position with the smallest half >= h_min.
std::optional<Repetition> shortest_suffix_square(std::span<const Symbol> w,
                                                 std::size_t h_min);

/// Every half >= h_min of a square ending at the last position, ascending.
std::vector<std::size_t> suffix_square_halves(std::span<const Symbol> w, std::size_t h_min);

// ---------------------------------------------------------------------------
// Thue substitution 1 -> 12312, 2 -> 131232, 3 -> 1323132 (over symbols 0,1,2)

Word thue_substitute(std::span<const Symbol> w);
Word thue_word(std::size_t target_len);

}  // namespace thuelab

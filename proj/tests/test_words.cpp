#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thuelab/errors.hpp"
#include "thuelab/words.hpp"

using namespace thuelab;

namespace {

// Independent reference: list every (end, half) square by direct comparison.
std::vector<Repetition> all_squares(const std::vector<Symbol>& w) {
  std::vector<Repetition> out;
  for (std::size_t end = 1; end <= w.size(); ++end) {
    for (std::size_t h = 1; 2 * h <= end; ++h) {
      bool eq = true;
      for (std::size_t k = 0; k < h && eq; ++k) eq = w[end - 2 * h + k] == w[end - h + k];
      if (eq) out.push_back({end, h});
    }
  }
  return out;
}

// Every word of the given length over {0..c-1}, odometer order.
template <class F>
void for_each_word(std::size_t c, std::size_t len, F&& f) {
  std::vector<Symbol> w(len, 0);
  while (true) {
    f(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] + 1u == c) w[--i] = 0;
    if (i == 0) return;
    ++w[i - 1];
  }
}

Word random_word(std::mt19937_64& rng, std::size_t c, std::size_t len) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(c) - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Symbol>(d(rng)));
  return w;
}

}  // namespace

TEST_CASE("display and parsing") {
  CHECK(parse_word("123") == Word{0, 1, 2});
  CHECK(parse_word("abc") == Word{0, 1, 2});
  CHECK(parse_word("").empty());
  CHECK(to_string(Word{0, 1, 2}, Notation::digits) == "123");
  CHECK(to_string(Word{0, 1, 2}, Notation::letters) == "abc");
  CHECK(notation_for(6) == Notation::digits);
  CHECK(notation_for(12) == Notation::letters);
  CHECK_THROWS_AS(parse_word("12a"), DomainError);
  CHECK_THROWS_AS(Alphabet(0), DomainError);
  CHECK_THROWS_AS(Alphabet(257), DomainError);
  CHECK(Word{0, 2}.fits(Alphabet(3)));
  CHECK_FALSE(Word{0, 3}.fits(Alphabet(3)));
}

TEST_CASE("worked examples") {
  CHECK_FALSE(is_nonrepetitive(parse_word("1232312")));
  CHECK(is_nonrepetitive(parse_word("123132123")));
  CHECK(is_nonrepetitive(Word{}));
  CHECK(is_nonrepetitive(parse_word("1")));
  CHECK_FALSE(is_nonrepetitive(parse_word("1212")));

  // "2323" occupies positions 2..5.
  const auto r = min_square_at_least(parse_word("1232312"), 1);
  REQUIRE(r);
  CHECK(r->end == 5);
  CHECK(r->half == 2);
  CHECK(r->start() == 2);
  CHECK(min_square_at_least(parse_word("1212"), 2) == Repetition{4, 2});
  CHECK_FALSE(min_square_at_least(parse_word("1133"), 2));

  CHECK(shortest_suffix_square(parse_word("12323"), 1)->half == 2);
  CHECK(shortest_suffix_square(parse_word("11"), 1)->half == 1);
  CHECK_FALSE(shortest_suffix_square(parse_word("123132"), 1));
}

TEST_CASE("every binary word of length 4 has a square") {
  std::size_t count = 0;
  for_each_word(2, 4, [&](const std::vector<Symbol>& w) {
    ++count;
    CHECK_FALSE(is_nonrepetitive(w));
    CHECK_FALSE(is_square_free(w));
  });
  CHECK(count == 16);
}

TEST_CASE("ternary square-free counts agree across detectors") {
  // Known sequence (OEIS A006156) for lengths 1..12.
  const std::vector<std::size_t> expected{3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264};
  for (std::size_t len = 1; len <= 12; ++len) {
    std::size_t oracle = 0, scan = 0, fast = 0, reference = 0;
    for_each_word(3, len, [&](const std::vector<Symbol>& w) {
      oracle += is_nonrepetitive(w);
      scan += !min_square_at_least(w, 1).has_value();
      fast += is_square_free(w);
      reference += all_squares(w).empty();
    });
    CHECK(oracle == expected[len - 1]);
    CHECK(scan == oracle);
    CHECK(fast == oracle);
    CHECK(reference == oracle);
  }
}

TEST_CASE("detectors agree with the reference on all small words") {
  for (std::size_t c : {2u, 3u}) {
    const std::size_t max_len = c == 2 ? 20 : 12;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for_each_word(c, len, [&](const std::vector<Symbol>& w) {
        const auto squares = all_squares(w);
        for (std::size_t h_min : {1u, 2u, 3u}) {
          std::optional<Repetition> first;
          for (const auto& r : squares) {
            if (r.half >= h_min && (!first || r.end < first->end)) first = r;
          }
          REQUIRE(min_square_at_least(w, h_min) == first);
          REQUIRE(min_square_at_least_fast(w, h_min) == first);
          REQUIRE(is_square_free(w, h_min) == !first.has_value());

          std::vector<std::size_t> suffix;
          for (const auto& r : squares) {
            if (r.end == w.size() && r.half >= h_min) suffix.push_back(r.half);
          }
          REQUIRE(suffix_square_halves(w, h_min) == suffix);
          const auto s = shortest_suffix_square(w, h_min);
          REQUIRE(s.has_value() == !suffix.empty());
          if (s) REQUIRE(s->half == suffix.front());
        }
      });
    }
  }
}

TEST_CASE("detectors agree on random longer words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t c = 2 + trial % 3;
    const std::size_t len = 20 + trial % 60;
    const Word w = random_word(rng, c, len);
    const bool free = all_squares(w.symbols()).empty();
    REQUIRE(is_nonrepetitive(w) == free);
    REQUIRE(is_square_free(w) == free);
    REQUIRE(min_square_at_least_fast(w, 1) == min_square_at_least(w, 1));
    // Square-free iff no prefix ends in a square.
    bool prefix_free = true;
    for (std::size_t k = 1; k <= w.size() && prefix_free; ++k) {
      prefix_free = !shortest_suffix_square(std::span(w.symbols().data(), k), 1).has_value();
    }
    REQUIRE(prefix_free == free);
  }
}

TEST_CASE("long suffix squares beyond the 64-wide scan window") {
  std::mt19937_64 rng(5);
  for (std::size_t h : {63u, 64u, 65u, 130u, 300u}) {
    Word x = random_word(rng, 4, h);
    Word w = x;
    for (Symbol s : x) w.push_back(s);
    const auto halves = suffix_square_halves(w, 1);
    CHECK(std::find(halves.begin(), halves.end(), h) != halves.end());
    const auto s = shortest_suffix_square(w, 1);
    REQUIRE(s);
    CHECK(s->half == halves.front());
  }
}

TEST_CASE("appending one symbol can only create squares at the end") {
  for (std::size_t c : {3u, 4u}) {
    const std::size_t max_len = c == 3 ? 14 : 9;
    for (std::size_t h_min : {1u, 2u}) {
      // Grow square-free (w.r.t. h_min) words depth-first.
      std::vector<std::vector<Symbol>> stack{{}};
      while (!stack.empty()) {
        const auto w = std::move(stack.back());
        stack.pop_back();
        if (w.size() == max_len) continue;
        for (Symbol s = 0; s < c; ++s) {
          auto next = w;
          next.push_back(s);
          bool clean = true;
          for (const auto& r : all_squares(next)) {
            if (r.half < h_min) continue;
            REQUIRE(r.end == next.size());
            clean = false;
          }
          if (clean) stack.push_back(std::move(next));
        }
      }
    }
  }
}

TEST_CASE("thue substitution") {
  CHECK(to_string(thue_substitute(parse_word("1"))) == "12312");
  CHECK(thue_substitute(Word{}).empty());
  CHECK(to_string(thue_substitute(parse_word("12"))) == "12312131232");
  CHECK(to_string(thue_substitute(parse_word("3"))) == "1323132");
  CHECK_THROWS_AS(thue_substitute(Word{3}), DomainError);

  CHECK(to_string(thue_word(5)) == "12312");
  CHECK(to_string(thue_word(1)) == "1");
  CHECK_THROWS_AS(thue_word(0), DomainError);
  const Word w = thue_word(1000);
  CHECK(w.size() == 1000);
  CHECK(is_nonrepetitive(w));
  CHECK(is_square_free(w));
}

TEST_CASE("substitution keeps random square-free words square-free") {
  std::mt19937_64 rng(3);
  std::size_t tested = 0;
  while (tested < 200) {
    // Random square-free word by extension with restarts.
    const std::size_t len = 1 + rng() % 50;
    Word w;
    std::size_t attempts = 0;
    while (w.size() < len && attempts < 1000) {
      ++attempts;
      w.push_back(static_cast<Symbol>(rng() % 3));
      if (shortest_suffix_square(w, 1)) w.pop_back();
    }
    if (w.size() < len) continue;
    REQUIRE(is_nonrepetitive(w));
    CHECK(is_nonrepetitive(thue_substitute(w)));
    ++tested;
  }
}

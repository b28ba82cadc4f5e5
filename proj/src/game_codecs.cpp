#include "thuelab/game_codecs.hpp"

#include <numeric>
#include <string>

#include "thuelab/errors.hpp"
#include "thuelab/list_chooser.hpp"

namespace thuelab {

namespace {

// Undo one append-and-erase of a copied half-block: restores the second half
// of a square of half h (h == 0 for a plain append) and pops the introduced symbol.
Symbol undo_step(std::vector<Symbol>& s, std::size_t h) {
  if (h > 0) {
    const std::size_t len = s.size();
    if (h > len) throw MalformedLog("erased block longer than the held word");
    for (std::size_t k = len - h; k < len; ++k) s.push_back(s[k]);
  }
  if (s.empty()) throw MalformedLog("log asks for a symbol of an empty word");
  const Symbol x = s.back();
  s.pop_back();
  return x;
}

std::string at_step(std::size_t j) { return " at step " + std::to_string(j + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// Reduced game logs

void validate(const ReducedGameLog& log) {
  if (log.d.size() > 2 * log.m) throw MalformedLog("more good moves than 2M");
  long long sum = 0;
  for (std::size_t j = 0; j < log.d.size(); ++j) {
    const int d = log.d[j];
    if (d != 1 && d > -3) throw MalformedLog("difference " + std::to_string(d) + at_step(j));
    sum += d;
    if (sum < 1) throw MalformedLog("prefix sum below 1" + at_step(j));
  }
  if (static_cast<long long>(log.s.size()) != sum) {
    throw MalformedLog("final word length does not match the difference sum");
  }
}

ReducedGameLog encode_erase_log(const GameTrace& trace) {
  ReducedGameLog log;
  for (const GameMove& move : trace.moves) {
    if (move.erased == 1) continue;  // bad move: a half-1 square, zero difference
    log.d.push_back(move.erased == 0 ? 1 : 1 - static_cast<int>(move.erased));
  }
  log.s = trace.final_word;
  log.m = trace.ann_moves();
  return log;
}

std::vector<Symbol> decode_erase_log(const ReducedGameLog& log, const BenStrategy& ben,
                                     std::size_t alphabet_size) {
  validate(log);

  // Good symbols x_1..x_m, recovered back to front.
  std::vector<Symbol> good(log.d.size());
  std::vector<Symbol> s(log.s.begin(), log.s.end());
  for (std::size_t j = log.d.size(); j-- > 0;) {
    const std::size_t h = log.d[j] == 1 ? 0 : static_cast<std::size_t>(-log.d[j]) + 1;
    good[j] = undo_step(s, h);
  }

  // Replay, inserting Ben's bad moves where his strategy creates a half-1 square.
  EraseGame game(alphabet_size);
  std::vector<Symbol> ann;
  long long expected = 0;
  for (std::size_t j = 0; j < good.size();) {
    if (game.to_move() == Mover::ben) {
      const Symbol b = ben(game.word());
      if (!game.word().empty() && b == game.word().back()) {
        game.play(b);
        continue;
      }
      if (b != good[j]) {
        throw InconsistentLog("Ben's strategy plays " + std::to_string(b) + at_step(j) +
                              " but the log holds " + std::to_string(good[j]));
      }
    } else {
      ann.push_back(good[j]);
    }
    const GameMove& move = game.play(good[j]);
    expected += log.d[j];
    if (static_cast<long long>(move.length) != expected) {
      throw InconsistentLog("replayed length disagrees with the log" + at_step(j));
    }
    ++j;
  }
  if (ann.size() != log.m) throw InconsistentLog("replay yields a different number of Ann moves");
  return ann;
}

// ---------------------------------------------------------------------------
// Typed search logs

void validate(const TypedSearchLog& log) {
  if (log.d.empty()) {
    if (!log.s.empty() || !log.types.empty()) throw MalformedLog("empty log with data");
    return;
  }
  validate_difference_sequence(log.d);
  for (std::size_t j = 0; j < log.d.size(); ++j) {
    const bool typed = log.types.count(j + 1) > 0;
    if (typed != (log.d[j] <= -2)) {
      throw MalformedLog("type must be present exactly when d <= -2" + at_step(j));
    }
    if (typed) {
      const int t = log.types.at(j + 1);
      if (t < 1 || t > 4) throw MalformedLog("type " + std::to_string(t) + at_step(j));
    }
  }
  for (const auto& [j, t] : log.types) {
    if (j == 0 || j > log.d.size()) throw MalformedLog("type index outside the log");
  }
}

TypedSearchLog encode_search_log(const SearchTrace& trace) {
  TypedSearchLog log;
  std::vector<std::size_t> ann_heights;
  std::size_t last_ann = 0;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (trace.steps[k].mover == Mover::ann) {
      ann_heights.push_back(trace.steps[k].height);
      last_ann = k;
    }
  }
  if (ann_heights.empty()) return log;

  const auto segments = ann_segments(trace);
  log.d.push_back(1);
  for (std::size_t j = 1; j < ann_heights.size(); ++j) {
    const long long diff = static_cast<long long>(ann_heights[j]) -
                           static_cast<long long>(ann_heights[j - 1]);
    const int d = static_cast<int>(diff / 2);
    log.d.push_back(d);
    if (d <= -2) {
      auto c = classify_segment(segments[j - 1]);
      if (!c || *c == SegmentCase::clean) {
        throw std::logic_error("search trace segment matches no case");
      }
      log.types[j + 1] = static_cast<int>(*c);
    }
  }

  for (std::size_t k = 0; k <= last_ann; ++k) {
    const SearchStep& step = trace.steps[k];
    log.s.push_back(step.symbol);
    log.s.truncate(log.s.size() - step.backtrack);
  }
  return log;
}

std::vector<std::size_t> expand_segment(std::size_t from, std::size_t to,
                                        std::optional<int> type) {
  const long long a = static_cast<long long>(from);
  const long long b = static_cast<long long>(to);
  if (a % 2 != 0 || b % 2 != 0) throw MalformedLog("Ann heights must be even");
  auto require = [](bool ok, const char* what) {
    if (!ok) throw MalformedLog(what);
  };
  if (b == a + 2) {
    require(!type, "typed upward step");
    return {from, from + 1};
  }
  if (b == a - 2) {
    require(!type, "typed step of -1");
    return {from, from + 1, to - 1};  // Ben: square of half 5, then a clean move
  }
  require(b <= a - 4, "impossible height change between Ann moves");
  require(type.has_value(), "missing type for a drop of at least 4");
  switch (*type) {
    case 1: {  // Ann, odd half >= 5, moves again
      const long long h = a + 1 - b;
      require(h % 2 == 1 && h >= 5, "type 1 needs an odd half >= 5");
      return {from};
    }
    case 2: {  // Ann, even half >= 6, then Ben clean
      const long long h = a + 2 - b;
      require(h % 2 == 0 && h >= 6, "type 2 needs an even half >= 6");
      return {from, to - 1};
    }
    case 3: {  // Ann clean, Ben even half >= 6
      const long long h = a + 2 - b;
      require(h % 2 == 0 && h >= 6, "type 3 needs an even half >= 6");
      return {from, from + 1};
    }
    case 4: {  // Ann clean, Ben odd half >= 5, Ben clean
      const long long h = a + 3 - b;
      require(h % 2 == 1 && h >= 5, "type 4 needs an odd half >= 5");
      return {from, from + 1, to - 1};
    }
    default:
      throw MalformedLog("type outside 1..4");
  }
}

HeightSequence reconstruct_heights(const TypedSearchLog& log) {
  validate(log);
  HeightSequence seq;
  if (log.d.empty()) return seq;

  long long ann_height = 0;
  for (std::size_t j = 1; j < log.d.size(); ++j) {
    const long long next = ann_height + 2LL * log.d[j];
    std::optional<int> type;
    if (auto it = log.types.find(j + 1); it != log.types.end()) type = it->second;
    const auto part = expand_segment(static_cast<std::size_t>(ann_height),
                                     static_cast<std::size_t>(next), type);
    seq.heights.insert(seq.heights.end(), part.begin(), part.end());
    ann_height = next;
  }
  // Ann's final step, then the final word.
  const long long last = static_cast<long long>(log.s.size());
  const long long h = ann_height + 1 - last;
  if (h != 0 && h < 2) throw MalformedLog("final word does not follow Ann's last step");
  seq.heights.push_back(static_cast<std::size_t>(ann_height));
  seq.heights.push_back(log.s.size());
  for (std::size_t height : seq.heights) {
    seq.movers.push_back(height % 2 == 0 ? Mover::ann : Mover::ben);
  }
  return seq;
}

std::vector<Symbol> decode_search_log(const TypedSearchLog& log, const BenStrategy& ben,
                                      std::size_t alphabet_size) {
  const HeightSequence seq = reconstruct_heights(log);
  if (seq.heights.empty()) return {};
  const std::size_t steps = seq.heights.size() - 1;
  const auto& h = seq.heights;

  std::vector<Symbol> xs(steps);
  std::vector<Symbol> s(log.s.begin(), log.s.end());
  for (std::size_t i = steps; i-- > 0;) {
    if (s.size() != h[i + 1]) throw MalformedLog("height sequence disagrees with the word");
    const std::size_t erased = h[i + 1] == h[i] + 1 ? 0 : h[i] + 1 - h[i + 1];
    xs[i] = undo_step(s, erased);
  }

  Word w;
  std::vector<Symbol> ann;
  for (std::size_t i = 0; i < steps; ++i) {
    if (w.size() % 2 == 0) {
      if (xs[i] >= alphabet_size) throw MalformedLog("symbol outside the alphabet");
      ann.push_back(xs[i]);
    } else {
      const Symbol b = ben(w);
      if (b != xs[i]) {
        throw InconsistentLog("Ben's strategy plays " + std::to_string(b) + at_step(i) +
                              " but the log holds " + std::to_string(xs[i]));
      }
    }
    w.push_back(xs[i]);
    if (auto sq = shortest_suffix_square(w, 2)) w.truncate(w.size() - sq->half);
    if (w.size() != h[i + 1]) throw InconsistentLog("replayed height disagrees" + at_step(i));
  }
  if (ann.size() != log.m()) throw InconsistentLog("replay yields a different number of Ann moves");
  return ann;
}

}  // namespace thuelab

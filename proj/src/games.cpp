#include "thuelab/games.hpp"

#include <algorithm>
#include <array>

#include "thuelab/errors.hpp"

namespace thuelab {

std::string to_string(Mover m) { return m == Mover::ann ? "ann" : "ben"; }

Mover parse_mover(std::string_view text) {
  if (text == "ann") return Mover::ann;
  if (text == "ben") return Mover::ben;
  throw DomainError("unknown mover '" + std::string(text) + "'");
}

BenStrategy::BenStrategy(std::string name, std::size_t alphabet_size, Fn fn)
    : name_(std::move(name)), alphabet_size_(Alphabet(alphabet_size).size()), fn_(std::move(fn)) {}

Symbol BenStrategy::operator()(std::span<const Symbol> visible) const {
  const Symbol s = fn_(visible);
  if (s >= alphabet_size_) {
    throw DomainError("Ben strategy '" + name_ + "' played symbol " + std::to_string(s) +
                      " outside the alphabet");
  }
  return s;
}

namespace {

Symbol cycle_symbol(std::span<const Symbol> w, std::size_t offset, std::size_t c) {
  return static_cast<Symbol>((w.size() + offset) % c);
}

// Symbol that completes the longest square of half >= 2 when appended.
std::optional<Symbol> longest_threat(std::span<const Symbol> w) {
  const std::size_t len = w.size() + 1;
  for (std::size_t h = len / 2; h >= 2; --h) {
    // New word x = w + b; need x[len-2h+k] == x[len-h+k] for k < h-1, b = x[len-h-1].
    const std::size_t first = len - 2 * h;
    const std::size_t second = len - h;
    if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(first),
                   w.begin() + static_cast<std::ptrdiff_t>(first + h - 1),
                   w.begin() + static_cast<std::ptrdiff_t>(second))) {
      return w[second - 1];
    }
  }
  return std::nullopt;
}

}  // namespace

BenStrategy make_ben(std::string_view name, std::size_t alphabet_size, const BenParams& params) {
  const std::size_t c = Alphabet(alphabet_size).size();
  if (name == "mimic") {
    return BenStrategy("mimic", c, [](std::span<const Symbol> w) {
      return w.empty() ? Symbol{0} : w.back();
    });
  }
  if (name == "constant") {
    if (params.constant >= c) throw DomainError("constant Ben symbol outside the alphabet");
    return BenStrategy("constant", c, [k = params.constant](std::span<const Symbol>) { return k; });
  }
  if (name == "cycle") {
    return BenStrategy("cycle", c, [offset = params.offset, c](std::span<const Symbol> w) {
      return cycle_symbol(w, offset, c);
    });
  }
  if (name == "greedy-threat") {
    return BenStrategy("greedy-threat", c, [offset = params.offset, c](std::span<const Symbol> w) {
      if (auto s = longest_threat(w)) return *s;
      return cycle_symbol(w, offset, c);
    });
  }
  if (name == "scripted-table") {
    if (params.table_default >= c) throw DomainError("scripted-table default outside the alphabet");
    for (const auto& [word, s] : params.table) {
      if (s >= c) throw DomainError("scripted-table entry for '" + word + "' outside the alphabet");
    }
    const Notation notation = notation_for(c);
    return BenStrategy("scripted-table", c,
                       [table = params.table, fallback = params.table_default,
                        notation](std::span<const Symbol> w) {
                         auto it = table.find(to_string(w, notation));
                         return it == table.end() ? fallback : it->second;
                       });
  }
  throw DomainError("unknown Ben strategy '" + std::string(name) + "'");
}

const std::vector<std::string>& builtin_ben_names() {
  static const std::vector<std::string> names = {"mimic", "constant", "cycle", "greedy-threat"};
  return names;
}

// ---------------------------------------------------------------------------
// Ann

namespace {

std::vector<Symbol> complement(const std::vector<bool>& excluded) {
  std::vector<Symbol> allowed;
  for (std::size_t s = 0; s < excluded.size(); ++s) {
    if (!excluded[s]) allowed.push_back(static_cast<Symbol>(s));
  }
  return allowed;
}

Symbol pick(const std::vector<Symbol>& allowed, Rng& rng) {
  if (allowed.empty()) throw DomainError("Ann has no allowed symbol");
  std::uniform_int_distribution<std::size_t> dist(0, allowed.size() - 1);
  return allowed[dist(rng)];
}

}  // namespace

std::vector<Symbol> ann_erase_allowed(std::span<const Symbol> w, std::size_t alphabet_size) {
  std::vector<bool> excluded(Alphabet(alphabet_size).size(), false);
  const std::size_t tail = std::min<std::size_t>(3, w.size());
  for (std::size_t k = w.size() - tail; k < w.size(); ++k) {
    if (w[k] < alphabet_size) excluded[w[k]] = true;
  }
  return complement(excluded);
}

Symbol ann_erase_move(std::span<const Symbol> w, std::size_t alphabet_size, Rng& rng) {
  return pick(ann_erase_allowed(w, alphabet_size), rng);
}

std::vector<Symbol> ann_nonrep_allowed(std::span<const Symbol> w, std::size_t alphabet_size) {
  std::vector<bool> excluded(Alphabet(alphabet_size).size(), false);
  std::size_t count = 0;
  auto exclude = [&](Symbol s) {
    if (s < excluded.size() && !excluded[s]) {
      excluded[s] = true;
      ++count;
    }
  };
  // With L = |w| and m = L + 1, s_{m-k} is w[L-k] (0-based).
  const std::size_t len = w.size();
  if (len >= 2) exclude(w[len - 2]);
  if (len >= 4 && w[len - 1] == w[len - 4]) exclude(w[len - 3]);
  if (count <= 1 && len >= 4) exclude(w[len - 4]);
  return complement(excluded);
}

Symbol ann_nonrep_move(std::span<const Symbol> w, std::size_t alphabet_size, Rng& rng) {
  return pick(ann_nonrep_allowed(w, alphabet_size), rng);
}

// ---------------------------------------------------------------------------
// Erase game

EraseGame::EraseGame(std::size_t alphabet_size) : alphabet_size_(Alphabet(alphabet_size).size()) {}

const GameMove& EraseGame::play(Symbol s) {
  if (s >= alphabet_size_) throw DomainError("symbol outside the alphabet");
  GameMove move;
  move.mover = to_move();
  move.symbol = s;
  Word& w = trace_.final_word;
  w.push_back(s);
  if (suffix_square_halves(w, 1).size() > 1) ++trace_.multi_square_events;
  if (auto sq = shortest_suffix_square(w, 1)) {
    move.erased = sq->half;
    w.truncate(w.size() - sq->half);
  }
  move.length = w.size();
  if (move.mover == Mover::ann) trace_.ann_choices.push_back(s);
  trace_.moves.push_back(move);
  return trace_.moves.back();
}

EraseGameResult play_erase_game(std::size_t alphabet_size, Rng& ann_rng, const BenStrategy& ben,
                                std::size_t target_n, std::size_t move_budget) {
  EraseGame game(alphabet_size);
  while (game.word().size() < target_n && game.trace().moves.size() < move_budget) {
    const Symbol s = game.to_move() == Mover::ann
                         ? ann_erase_move(game.word(), alphabet_size, ann_rng)
                         : ben(game.word());
    game.play(s);
  }
  EraseGameResult result;
  result.outcome = game.word().size() >= target_n ? EraseOutcome::ann_reached_n
                                                   : EraseOutcome::budget_exhausted;
  result.trace = game.trace();
  return result;
}

// ---------------------------------------------------------------------------
// Nonrepetitive game

NonrepGame::NonrepGame(std::size_t alphabet_size)
    : alphabet_size_(Alphabet(alphabet_size).size()) {}

const GameMove& NonrepGame::play(Symbol s) {
  if (over()) throw DomainError("the game is over");
  if (s >= alphabet_size_) throw DomainError("symbol outside the alphabet");
  GameMove move;
  move.mover = to_move();
  move.symbol = s;
  word_.push_back(s);
  move.length = word_.size();
  if (move.mover == Mover::ann) ann_choices_.push_back(s);
  repetition_ = shortest_suffix_square(word_, 2);
  moves_.push_back(move);
  return moves_.back();
}

NonrepGameResult play_nonrep_game(std::size_t alphabet_size, Rng& ann_rng, const BenStrategy& ben,
                                  std::size_t target_n) {
  NonrepGame game(alphabet_size);
  while (!game.over() && game.word().size() < target_n) {
    const Symbol s = game.to_move() == Mover::ann
                         ? ann_nonrep_move(game.word(), alphabet_size, ann_rng)
                         : ben(game.word());
    game.play(s);
  }
  NonrepGameResult result;
  result.outcome = game.over() ? NonrepOutcome::ben_wins : NonrepOutcome::ann_wins;
  result.word = game.word();
  result.repetition = game.repetition();
  result.moves = game.moves();
  result.ann_choices = game.ann_choices();
  return result;
}

// ---------------------------------------------------------------------------
// Search simulation

SearchResult run_search_simulation(std::size_t alphabet_size, Rng& ann_rng,
                                   const BenStrategy& ben, std::size_t target_n,
                                   std::size_t ann_move_budget) {
  static_cast<void>(Alphabet{alphabet_size});
  SearchResult result;
  SearchTrace& trace = result.trace;
  Word& w = trace.final_word;
  while (w.size() < target_n && trace.weight < ann_move_budget) {
    SearchStep step;
    step.height = w.size();
    step.mover = w.size() % 2 == 0 ? Mover::ann : Mover::ben;
    step.symbol = step.mover == Mover::ann ? ann_nonrep_move(w, alphabet_size, ann_rng) : ben(w);
    w.push_back(step.symbol);
    if (suffix_square_halves(w, 2).size() > 1) ++trace.multi_square_events;
    if (auto sq = shortest_suffix_square(w, 2)) {
      step.backtrack = sq->half;
      w.truncate(w.size() - sq->half);
    }
    if (step.mover == Mover::ann) ++trace.weight;
    trace.steps.push_back(step);
  }
  result.outcome = w.size() >= target_n ? SearchOutcome::reached_n : SearchOutcome::weight_exhausted;
  return result;
}

std::optional<SegmentCase> classify_segment(std::span<const SearchStep> seg) {
  if (seg.empty() || seg[0].mover != Mover::ann) return std::nullopt;
  for (std::size_t k = 1; k < seg.size(); ++k) {
    if (seg[k].mover != Mover::ben) return std::nullopt;
  }
  const auto odd = [](std::size_t h) { return h % 2 == 1 && h >= 5; };
  const auto even = [](std::size_t h) { return h > 0 && h % 2 == 0 && h >= 6; };
  const std::size_t a = seg[0].backtrack;
  if (seg.size() == 1) {
    if (odd(a)) return SegmentCase::ann_odd;
    return std::nullopt;
  }
  if (seg.size() == 2) {
    const std::size_t b = seg[1].backtrack;
    if (a == 0 && b == 0) return SegmentCase::clean;
    if (even(a) && b == 0) return SegmentCase::ann_even;
    if (a == 0 && even(b)) return SegmentCase::ben_even;
    return std::nullopt;
  }
  if (seg.size() == 3 && a == 0 && odd(seg[1].backtrack) && seg[2].backtrack == 0) {
    return SegmentCase::ben_odd;
  }
  return std::nullopt;
}

std::vector<std::span<const SearchStep>> ann_segments(const SearchTrace& trace) {
  std::vector<std::span<const SearchStep>> out;
  const auto& steps = trace.steps;
  std::optional<std::size_t> start;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k].mover != Mover::ann) continue;
    if (start) out.emplace_back(steps.data() + *start, k - *start);
    start = k;
  }
  return out;
}

}  // namespace thuelab

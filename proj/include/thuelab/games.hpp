#pragma once

// The erase-repetition game, the nonrepetitive game and the backtracking
// search simulation used to analyse the latter. Ann is the randomized engine;
// Ben is any pure function of the visible word.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thuelab/rng.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

enum class Mover { ann, ben };

std::string to_string(Mover m);
Mover parse_mover(std::string_view text);

class BenStrategy {
 public:
  using Fn = std::function<Symbol(std::span<const Symbol>)>;

  BenStrategy(std::string name, std::size_t alphabet_size, Fn fn);

  /// Throws DomainError if the strategy answers with a symbol >= C.
  Symbol operator()(std::span<const Symbol> visible) const;

  const std::string& name() const noexcept { return name_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

 private:
  std::string name_;
  std::size_t alphabet_size_;
  Fn fn_;
};

struct BenParams {
  Symbol constant = 0;     // constant
  std::size_t offset = 0;  // cycle, and greedy-threat's fallback
  std::map<std::string, Symbol> table;  // scripted-table: display word -> symbol
  Symbol table_default = 0;
};

/// name in {mimic, constant, cycle, greedy-threat, scripted-table}.
BenStrategy make_ben(std::string_view name, std::size_t alphabet_size,
                     const BenParams& params = {});

/// The adversaries that need no table.
const std::vector<std::string>& builtin_ben_names();

// ---------------------------------------------------------------------------
// Ann's strategies

/// Alphabet minus the symbols in the last min(3, |w|) positions.
std::vector<Symbol> ann_erase_allowed(std::span<const Symbol> w, std::size_t alphabet_size);
Symbol ann_erase_move(std::span<const Symbol> w, std::size_t alphabet_size, Rng& rng);

/// Exclusion rules for the nonrepetitive game with m = |w| + 1:
/// (i) s_{m-2}; (ii) s_{m-3} if s_{m-1} = s_{m-4}; (iii) s_{m-4} if at most
/// one symbol is excluded so far. Rules whose positions do not exist are skipped.
std::vector<Symbol> ann_nonrep_allowed(std::span<const Symbol> w, std::size_t alphabet_size);
Symbol ann_nonrep_move(std::span<const Symbol> w, std::size_t alphabet_size, Rng& rng);

// ---------------------------------------------------------------------------
// Erase-repetition game

struct GameMove {
  Mover mover = Mover::ann;
  Symbol symbol = 0;
  std::size_t erased = 0;  // half of the erased square, 0 if none
  std::size_t length = 0;  // word length after the move and its erasure

  friend bool operator==(const GameMove&, const GameMove&) = default;
};

struct GameTrace {
  std::vector<GameMove> moves;
  std::vector<Symbol> ann_choices;
  Word final_word;
  std::size_t multi_square_events = 0;

  std::size_t ann_moves() const noexcept { return ann_choices.size(); }
};

/// Move-by-move erase game; Ann moves on odd move numbers.
class EraseGame {
 public:
  explicit EraseGame(std::size_t alphabet_size);

  Mover to_move() const noexcept { return trace_.moves.size() % 2 == 0 ? Mover::ann : Mover::ben; }
  const Word& word() const noexcept { return trace_.final_word; }
  const GameTrace& trace() const noexcept { return trace_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  /// Appends for the player to move, erasing the shortest suffix square.
  const GameMove& play(Symbol s);

 private:
  std::size_t alphabet_size_;
  GameTrace trace_;
};

enum class EraseOutcome { ann_reached_n, budget_exhausted };

struct EraseGameResult {
  EraseOutcome outcome = EraseOutcome::budget_exhausted;
  GameTrace trace;
};

EraseGameResult play_erase_game(std::size_t alphabet_size, Rng& ann_rng, const BenStrategy& ben,
                                std::size_t target_n, std::size_t move_budget);

// ---------------------------------------------------------------------------
// Nonrepetitive game (repetitions of half 1 are ignored)

class NonrepGame {
 public:
  explicit NonrepGame(std::size_t alphabet_size);

  Mover to_move() const noexcept { return word_.size() % 2 == 0 ? Mover::ann : Mover::ben; }
  const Word& word() const noexcept { return word_; }
  const std::vector<GameMove>& moves() const noexcept { return moves_; }
  const std::vector<Symbol>& ann_choices() const noexcept { return ann_choices_; }
  const std::optional<Repetition>& repetition() const noexcept { return repetition_; }
  bool over() const noexcept { return repetition_.has_value(); }

  /// Appends; a square of half >= 2 ending at the new position ends the game.
  const GameMove& play(Symbol s);

 private:
  std::size_t alphabet_size_;
  Word word_;
  std::vector<GameMove> moves_;
  std::vector<Symbol> ann_choices_;
  std::optional<Repetition> repetition_;
};

enum class NonrepOutcome { ann_wins, ben_wins };

struct NonrepGameResult {
  NonrepOutcome outcome = NonrepOutcome::ann_wins;
  Word word;
  std::optional<Repetition> repetition;
  std::vector<GameMove> moves;
  std::vector<Symbol> ann_choices;
};

NonrepGameResult play_nonrep_game(std::size_t alphabet_size, Rng& ann_rng, const BenStrategy& ben,
                                  std::size_t target_n);

// ---------------------------------------------------------------------------
// Backtracking search simulation

struct SearchStep {
  Mover mover = Mover::ann;
  Symbol symbol = 0;
  std::size_t backtrack = 0;  // half of the erased square, 0 if none
  std::size_t height = 0;     // word length before the step

  friend bool operator==(const SearchStep&, const SearchStep&) = default;
};

struct SearchTrace {
  std::vector<SearchStep> steps;
  std::size_t weight = 0;  // number of Ann steps
  Word final_word;
  std::size_t multi_square_events = 0;
};

enum class SearchOutcome { reached_n, weight_exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::weight_exhausted;
  SearchTrace trace;
};

/// Plays the nonrepetitive game but, on a square of half h >= 2, erases the
/// second half and continues from the shorter word. Even length means Ann
/// moves. Stops once the word reaches target_n, or right after Ann's
/// `ann_move_budget`-th move.
SearchResult run_search_simulation(std::size_t alphabet_size, Rng& ann_rng,
                                   const BenStrategy& ben, std::size_t target_n,
                                   std::size_t ann_move_budget);

/// The five ways a search can proceed from one Ann step to the next.
///   clean:    Ann and Ben both append without repetition
///   ann_odd:  Ann completes an odd square (>= 5) and moves again
///   ann_even: Ann completes an even square (>= 6), Ben appends cleanly
///   ben_even: Ann appends cleanly, Ben completes an even square (>= 6)
///   ben_odd:  Ann appends cleanly, Ben completes an odd square (>= 5), then
///             appends cleanly
enum class SegmentCase { clean = 0, ann_odd = 1, ann_even = 2, ben_even = 3, ben_odd = 4 };

/// Classifies the steps from one Ann step up to (excluding) the next one;
/// nullopt if they match none of the five cases.
std::optional<SegmentCase> classify_segment(std::span<const SearchStep> segment);

/// Splits the trace at Ann steps: result[j] covers Ann's (j+1)-th step up to
/// the next Ann step. The final segment (after the last Ann step) is dropped.
std::vector<std::span<const SearchStep>> ann_segments(const SearchTrace& trace);

}  // namespace thuelab

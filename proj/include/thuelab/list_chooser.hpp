#pragma once

// Choosing a square-free word from a system of lists by random choice with
// erase-on-repetition, together with its lossless (differences, word) log.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thuelab/rng.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

class ListSystem {
 public:
  /// Each list must be nonempty with distinct symbols; order is significant.
  explicit ListSystem(std::vector<std::vector<Symbol>> lists);

  /// n copies of the list (0, 1, ..., size-1).
  static ListSystem identical(std::size_t n, std::size_t size);

  std::size_t size() const noexcept { return lists_.size(); }
  /// 1-based, like the positions of the word being built.
  const std::vector<Symbol>& list(std::size_t index) const { return lists_.at(index - 1); }
  /// 1-based position of `s` in list `index`, if present.
  std::optional<std::size_t> position_of(std::size_t index, Symbol s) const;
  /// Largest symbol + 1 over all lists.
  std::size_t alphabet_size() const noexcept;

  friend bool operator==(const ListSystem&, const ListSystem&) = default;

 private:
  std::vector<std::vector<Symbol>> lists_;
};

/// Source of 1-based list positions.
class ChoiceSource {
 public:
  virtual ~ChoiceSource() = default;
  virtual std::size_t next(std::size_t list_size) = 0;
};

class UniformChoices final : public ChoiceSource {
 public:
  explicit UniformChoices(std::uint64_t seed) : rng_(seed) {}
  explicit UniformChoices(Rng rng) : rng_(std::move(rng)) {}
  std::size_t next(std::size_t list_size) override;

 private:
  Rng rng_;
};

/// Replays a fixed stream; running past its end is a DomainError.
class ScriptedChoices final : public ChoiceSource {
 public:
  explicit ScriptedChoices(std::vector<std::size_t> positions)
      : positions_(std::move(positions)) {}
  std::size_t next(std::size_t list_size) override;

 private:
  std::vector<std::size_t> positions_;
  std::size_t cursor_ = 0;
};

struct ChoiceTrace {
  std::vector<std::size_t> r;
  friend bool operator==(const ChoiceTrace&, const ChoiceTrace&) = default;
};

/// d_1 = 1, d_j <= 1, every prefix sum >= 1.
void validate_difference_sequence(const std::vector<int>& d);

struct Alg1Log {
  std::vector<int> d;
  Word s;

  std::size_t m() const noexcept { return d.size(); }
  friend bool operator==(const Alg1Log&, const Alg1Log&) = default;
};

struct Alg1Step {
  std::size_t position = 0;    // r_j, 1-based into the consulted list
  std::size_t list_index = 0;  // i at the time of the step
  Symbol symbol = 0;
  std::size_t erased = 0;      // half of the erased square, 0 if none

  int difference() const noexcept { return 1 - static_cast<int>(erased); }
};

enum class Alg1Status { completed, budget_exhausted };

struct Alg1Run {
  Alg1Status status = Alg1Status::budget_exhausted;
  Word word;
  std::vector<Alg1Step> steps;
  /// Steps after which more than one square ended at the appended position.
  std::size_t multi_square_events = 0;

  std::size_t steps_used() const noexcept { return steps.size(); }
  ChoiceTrace trace() const;
};

struct Alg1Options {
  /// Run the O(n^3) oracle on the held prefix after every step.
  bool check_every_step = false;
  /// Count steps with more than one suffix square (costs an extra O(n^2) scan).
  bool count_multiplicity = false;
};

Alg1Run run_alg1(const ListSystem& lists, ChoiceSource& choices, std::size_t step_budget,
                 Alg1Options options = {});

/// Log after all recorded steps of the run.
Alg1Log encode_alg1_log(const Alg1Run& run);
/// Log after the first `m` steps of the run.
Alg1Log encode_alg1_log(const Alg1Run& run, std::size_t m);

/// Inverts a log back to the positions r_1..r_M; throws MalformedLog.
ChoiceTrace decode_alg1_log(const Alg1Log& log, const ListSystem& lists);

// ---------------------------------------------------------------------------
// Runtime statistics

enum class ListGenerator { identical, random_disjoint_pool };

std::string to_string(ListGenerator g);
ListGenerator parse_list_generator(const std::string& name);

/// Lists of `list_size` symbols; random_disjoint_pool draws each list as a
/// uniform subset of a pool of 3 * list_size symbols.
ListSystem generate_lists(ListGenerator g, std::size_t n, std::size_t list_size, Rng& rng);

struct StatsConfig {
  std::size_t list_size = 4;
  std::vector<std::size_t> ns;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  ListGenerator generator = ListGenerator::identical;
  std::size_t budget_factor = 100;
};

struct StatsRow {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_steps = 0;
  std::size_t max_steps = 0;
  std::size_t completed = 0;

  double completion_rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(completed) / static_cast<double>(trials);
  }
};

std::vector<StatsRow> alg1_stats(const StatsConfig& config);

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);

}  // namespace thuelab

#include "thuelab/list_chooser.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "thuelab/errors.hpp"

namespace thuelab {

ListSystem::ListSystem(std::vector<std::vector<Symbol>> lists) : lists_(std::move(lists)) {
  for (std::size_t i = 0; i < lists_.size(); ++i) {
    const auto& list = lists_[i];
    if (list.empty()) throw DomainError("list " + std::to_string(i + 1) + " is empty");
    std::set<Symbol> seen(list.begin(), list.end());
    if (seen.size() != list.size()) {
      throw DomainError("list " + std::to_string(i + 1) + " has repeated symbols");
    }
  }
}

ListSystem ListSystem::identical(std::size_t n, std::size_t size) {
  if (size == 0 || size > kMaxAlphabet) throw DomainError("invalid list size");
  std::vector<Symbol> list(size);
  std::iota(list.begin(), list.end(), Symbol{0});
  return ListSystem(std::vector<std::vector<Symbol>>(n, list));
}

std::optional<std::size_t> ListSystem::position_of(std::size_t index, Symbol s) const {
  if (index == 0 || index > lists_.size()) return std::nullopt;
  const auto& l = lists_[index - 1];
  auto it = std::find(l.begin(), l.end(), s);
  if (it == l.end()) return std::nullopt;
  return static_cast<std::size_t>(it - l.begin()) + 1;
}

std::size_t ListSystem::alphabet_size() const noexcept {
  std::size_t c = 0;
  for (const auto& l : lists_) {
    for (Symbol s : l) c = std::max<std::size_t>(c, std::size_t{s} + 1);
  }
  return c;
}

std::size_t UniformChoices::next(std::size_t list_size) {
  std::uniform_int_distribution<std::size_t> dist(1, list_size);
  return dist(rng_);
}

std::size_t ScriptedChoices::next(std::size_t list_size) {
  if (cursor_ >= positions_.size()) throw DomainError("scripted choice stream exhausted");
  const std::size_t r = positions_[cursor_++];
  if (r == 0 || r > list_size) {
    throw DomainError("choice position " + std::to_string(r) + " outside list of size " +
                      std::to_string(list_size));
  }
  return r;
}

ChoiceTrace Alg1Run::trace() const {
  ChoiceTrace t;
  t.r.reserve(steps.size());
  for (const auto& s : steps) t.r.push_back(s.position);
  return t;
}

void validate_difference_sequence(const std::vector<int>& d) {
  if (d.empty()) return;
  if (d.front() != 1) throw MalformedLog("difference sequence must start with 1");
  long long sum = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] > 1) throw MalformedLog("difference d_" + std::to_string(j + 1) + " exceeds 1");
    sum += d[j];
    if (sum < 1) {
      throw MalformedLog("prefix sum drops below 1 at step " + std::to_string(j + 1));
    }
  }
}

Alg1Run run_alg1(const ListSystem& lists, ChoiceSource& choices, std::size_t step_budget,
                 Alg1Options options) {
  const std::size_t n = lists.size();
  Alg1Run run;
  run.word.reserve(n + 1);
  while (run.word.size() < n) {
    if (run.steps.size() >= step_budget) {
      run.status = Alg1Status::budget_exhausted;
      return run;
    }
    const std::size_t i = run.word.size() + 1;
    const auto& list = lists.list(i);
    const std::size_t r = choices.next(list.size());
    if (r == 0 || r > list.size()) throw DomainError("choice position out of range");

    Alg1Step step{r, i, list[r - 1], 0};
    run.word.push_back(step.symbol);
    if (options.count_multiplicity && suffix_square_halves(run.word, 1).size() > 1) {
      ++run.multi_square_events;
    }
    if (auto sq = shortest_suffix_square(run.word, 1)) {
      step.erased = sq->half;
      run.word.truncate(run.word.size() - sq->half);
    }
    run.steps.push_back(step);
    if (options.check_every_step && !is_nonrepetitive(run.word)) {
      throw std::logic_error("held prefix is not square-free after step " +
                             std::to_string(run.steps.size()));
    }
  }
  run.status = Alg1Status::completed;
  return run;
}

Alg1Log encode_alg1_log(const Alg1Run& run, std::size_t m) {
  if (m > run.steps.size()) throw DomainError("log length exceeds the recorded steps");
  Alg1Log log;
  log.d.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& step = run.steps[j];
    log.d.push_back(step.difference());
    log.s.push_back(step.symbol);
    if (step.erased > 0) log.s.truncate(log.s.size() - step.erased);
  }
  return log;
}

Alg1Log encode_alg1_log(const Alg1Run& run) { return encode_alg1_log(run, run.steps.size()); }

ChoiceTrace decode_alg1_log(const Alg1Log& log, const ListSystem& lists) {
  validate_difference_sequence(log.d);
  const long long total = std::accumulate(log.d.begin(), log.d.end(), 0LL);
  if (static_cast<long long>(log.s.size()) != total) {
    throw MalformedLog("final word length does not match the difference sum");
  }

  ChoiceTrace trace;
  trace.r.resize(log.d.size());
  std::vector<Symbol> s(log.s.begin(), log.s.end());
  for (std::size_t j = log.d.size(); j-- > 0;) {
    const int d = log.d[j];
    if (d <= 0) {
      // Restore the erased second half by copying the last h symbols.
      const std::size_t h = static_cast<std::size_t>(-d) + 1;
      const std::size_t len = s.size();
      if (h > len) throw MalformedLog("erased block longer than the held word");
      for (std::size_t k = len - h; k < len; ++k) s.push_back(s[k]);
    }
    const std::size_t index = s.size();
    if (index == 0 || index > lists.size()) {
      throw MalformedLog("step " + std::to_string(j + 1) + " consults a list outside the system");
    }
    auto pos = lists.position_of(index, s.back());
    if (!pos) {
      throw MalformedLog("symbol at step " + std::to_string(j + 1) + " is not in list " +
                         std::to_string(index));
    }
    trace.r[j] = *pos;
    s.pop_back();
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Statistics

std::string to_string(ListGenerator g) {
  return g == ListGenerator::identical ? "identical" : "random-disjoint-pool";
}

ListGenerator parse_list_generator(const std::string& name) {
  if (name == "identical") return ListGenerator::identical;
  if (name == "random-disjoint-pool") return ListGenerator::random_disjoint_pool;
  throw DomainError("unknown list generator '" + name + "'");
}

ListSystem generate_lists(ListGenerator g, std::size_t n, std::size_t list_size, Rng& rng) {
  if (g == ListGenerator::identical) return ListSystem::identical(n, list_size);
  const std::size_t pool = 3 * list_size;
  if (pool > kMaxAlphabet) throw DomainError("list size too large for the symbol pool");
  std::vector<Symbol> symbols(pool);
  std::iota(symbols.begin(), symbols.end(), Symbol{0});
  std::vector<std::vector<Symbol>> lists(n);
  for (auto& list : lists) {
    std::shuffle(symbols.begin(), symbols.end(), rng);
    list.assign(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(list_size));
  }
  return ListSystem(std::move(lists));
}

std::vector<StatsRow> alg1_stats(const StatsConfig& config) {
  if (config.list_size == 0) throw DomainError("list size must be positive");
  std::vector<StatsRow> rows;
  for (std::size_t n : config.ns) {
    StatsRow row;
    row.n = n;
    row.trials = config.trials;
    double total = 0;
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      Rng rng = make_rng(config.seed, {n, trial});
      const ListSystem lists = generate_lists(config.generator, n, config.list_size, rng);
      UniformChoices choices(rng());
      const Alg1Run run = run_alg1(lists, choices, config.budget_factor * n);
      total += static_cast<double>(run.steps_used());
      row.max_steps = std::max(row.max_steps, run.steps_used());
      if (run.status == Alg1Status::completed) {
        ++row.completed;
        if (!is_square_free(run.word)) throw std::logic_error("completed word has a square");
      }
    }
    row.mean_steps = config.trials == 0 ? 0.0 : total / static_cast<double>(config.trials);
    rows.push_back(row);
  }
  return rows;
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "n,trials,mean_steps,max_steps,completed\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.trials << ',' << r.mean_steps << ',' << r.max_steps << ','
        << r.completed << '\n';
  }
}

}  // namespace thuelab

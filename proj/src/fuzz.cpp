#include "thuelab/fuzz.hpp"

#include <exception>

#include "thuelab/errors.hpp"
#include "thuelab/game_codecs.hpp"
#include "thuelab/games.hpp"
#include "thuelab/list_chooser.hpp"
#include "thuelab/rng.hpp"

namespace thuelab {

std::string to_string(CodecKind k) {
  switch (k) {
    case CodecKind::alg1: return "alg1";
    case CodecKind::erase: return "erase";
    case CodecKind::search: return "search";
  }
  return "?";
}

CodecKind parse_codec_kind(std::string_view text) {
  if (text == "alg1") return CodecKind::alg1;
  if (text == "erase") return CodecKind::erase;
  if (text == "search") return CodecKind::search;
  throw DomainError("unknown codec '" + std::string(text) + "'");
}

std::size_t default_alphabet(CodecKind k) {
  switch (k) {
    case CodecKind::alg1: return 4;
    case CodecKind::erase: return 8;
    case CodecKind::search: return 6;
  }
  return 0;
}

namespace {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Returns an empty string on success, otherwise what went wrong.
std::string alg1_trial(Rng& rng, std::size_t list_size) {
  const std::size_t n = draw(rng, 5, 60);
  const auto gen = rng() % 2 == 0 ? ListGenerator::identical : ListGenerator::random_disjoint_pool;
  const ListSystem lists = generate_lists(gen, n, list_size, rng);
  UniformChoices choices(rng());
  const Alg1Run run = run_alg1(lists, choices, 100 * n);
  const ChoiceTrace trace = run.trace();
  if (decode_alg1_log(encode_alg1_log(run), lists) != trace) return "full log mismatch";
  // A log cut after m steps recovers the first m choices.
  const std::size_t m = draw(rng, 0, run.steps_used());
  ChoiceTrace prefix{{trace.r.begin(), trace.r.begin() + static_cast<std::ptrdiff_t>(m)}};
  if (decode_alg1_log(encode_alg1_log(run, m), lists) != prefix) {
    return "prefix log mismatch at m=" + std::to_string(m);
  }
  return {};
}

std::string erase_trial(Rng& rng, std::size_t c, const BenStrategy& ben) {
  const std::size_t n = draw(rng, 4, 40);
  const EraseGameResult result = play_erase_game(c, rng, ben, n, 100 * n);
  const ReducedGameLog log = encode_erase_log(result.trace);
  if (decode_erase_log(log, ben, c) != result.trace.ann_choices) return "ann choices mismatch";
  return {};
}

std::string search_trial(Rng& rng, std::size_t c, const BenStrategy& ben) {
  const std::size_t n = draw(rng, 6, 40);
  const std::size_t budget = draw(rng, 1, 80);
  const SearchResult result = run_search_simulation(c, rng, ben, n, budget);
  std::vector<Symbol> ann;
  for (const auto& s : result.trace.steps) {
    if (s.mover == Mover::ann) ann.push_back(s.symbol);
  }
  const TypedSearchLog log = encode_search_log(result.trace);
  if (decode_search_log(log, ben, c) != ann) return "ann choices mismatch";
  return {};
}

}  // namespace

FuzzReport fuzz_codec(CodecKind kind, std::size_t trials, std::uint64_t seed,
                      std::size_t alphabet_size) {
  const std::size_t c = alphabet_size == 0 ? default_alphabet(kind) : alphabet_size;
  std::vector<BenStrategy> bens;
  if (kind != CodecKind::alg1) {
    for (const auto& name : builtin_ben_names()) bens.push_back(make_ben(name, c));
  }
  FuzzReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, {t});
    std::string failure;
    try {
      switch (kind) {
        case CodecKind::alg1: failure = alg1_trial(rng, c); break;
        case CodecKind::erase: failure = erase_trial(rng, c, bens[t % bens.size()]); break;
        case CodecKind::search: failure = search_trial(rng, c, bens[t % bens.size()]); break;
      }
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      ++report.ok;
    } else if (report.failures.size() < 5) {
      std::string who = bens.empty() ? "" : " ben=" + bens[t % bens.size()].name();
      report.failures.push_back("trial " + std::to_string(t) + who + ": " + failure);
    }
  }
  return report;
}

}  // namespace thuelab

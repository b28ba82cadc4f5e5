#include "thuelab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "thuelab/errors.hpp"
#include "thuelab/fuzz.hpp"
#include "thuelab/game_codecs.hpp"
#include "thuelab/games.hpp"
#include "thuelab/io.hpp"
#include "thuelab/list_chooser.hpp"
#include "thuelab/server.hpp"
#include "thuelab/walks.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_seed() {
  const char* v = std::getenv("THUELAB_SEED");
  if (v == nullptr || *v == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long s = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument("trailing characters");
    return s;
  } catch (const std::exception&) {
    throw UsageError(std::string("THUELAB_SEED is not an unsigned integer: ") + v);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string square_text(const Word& w, const Repetition& r) {
  const std::span<const Symbol> block(w.symbols().data() + r.start() - 1, 2 * r.half);
  return to_string(block);
}

// ---------------------------------------------------------------------------

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;

  std::string word;
  std::size_t h_min = 1;
  std::size_t length = 0;

  std::string lists_file;
  std::size_t budget = 0;
  bool stats = false;
  std::size_t list_size = 4;
  std::vector<std::size_t> ns{100, 1000};
  std::size_t trials = 50;
  std::string generator = "identical";

  std::size_t c = 8;
  std::string ben = "mimic";
  std::size_t n = 50;
  unsigned constant = 0;
  std::size_t offset = 0;
  std::string table_file;
  std::string trace_out;

  std::string which = "alg1";

  std::string sys = "alg1";
  std::size_t m = 20;
  std::size_t order = 50;
  std::size_t sweep = 2000;

  int port = 8080;
};

BenStrategy ben_from(const Options& o) {
  BenParams params;
  if (!o.table_file.empty()) params = io::scripted_table_from_json(read_json_file(o.table_file));
  if (o.constant >= o.c) throw UsageError("--constant must be below --c");
  params.constant = static_cast<Symbol>(o.constant);
  params.offset = o.offset;
  if (o.ben == "scripted-table" && o.table_file.empty()) {
    throw UsageError("--ben scripted-table needs --table FILE");
  }
  return make_ben(o.ben, o.c, params);
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  const Word w = parse_word(o.word);
  const auto r = min_square_at_least_fast(w, o.h_min);
  if (o.format == "json") {
    json j{{"word", o.word}, {"square_free", !r}};
    if (r) j["square"] = {{"block", square_text(w, *r)}, {"end", r->end}, {"h", r->half}};
    out << j.dump() << '\n';
  } else if (r) {
    out << "square \"" << square_text(w, *r) << "\" at end=" << r->end << ", h=" << r->half << '\n';
  } else {
    out << "square-free\n";
  }
  return r ? 1 : 0;
}

int cmd_thue(const Options& o, std::ostream& out) {
  const Word w = thue_word(o.length);
  out << to_string(w, Notation::digits) << '\n';
  return 0;
}

int cmd_choose_stats(const Options& o, std::ostream& out) {
  StatsConfig config;
  config.list_size = o.list_size;
  config.ns = o.ns;
  config.trials = o.trials;
  config.seed = o.seed;
  config.generator = parse_list_generator(o.generator);
  const auto rows = alg1_stats(config);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"trials", r.trials},
                   {"mean_steps", r.mean_steps},
                   {"max_steps", r.max_steps},
                   {"completed", r.completed}});
    }
    out << j.dump() << '\n';
  } else if (o.format == "csv") {
    write_stats_csv(out, rows);
  } else {
    for (const auto& r : rows) {
      out << "n=" << r.n << " trials=" << r.trials << " completed=" << r.completed
          << " mean_steps=" << std::fixed << std::setprecision(2) << r.mean_steps
          << " steps/n=" << std::setprecision(4) << r.mean_steps / static_cast<double>(r.n)
          << " max_steps=" << r.max_steps << '\n';
    }
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.completed == r.trials;
  return ok ? 0 : 1;
}

int cmd_choose(const Options& o, std::ostream& out) {
  if (o.stats) return cmd_choose_stats(o, out);
  if (o.lists_file.empty()) throw UsageError("choose needs --lists FILE (or --stats)");
  std::ifstream in(o.lists_file);
  if (!in) throw UsageError("cannot open " + o.lists_file);
  const ListSystem lists = io::read_list_system(in);
  const std::size_t budget = o.budget == 0 ? 100 * lists.size() : o.budget;
  UniformChoices choices(make_rng(o.seed));
  const Alg1Run run = run_alg1(lists, choices, budget);
  const Alg1Log log = encode_alg1_log(run);
  const bool roundtrip = decode_alg1_log(log, lists) == run.trace();
  const bool completed = run.status == Alg1Status::completed;
  const Notation notation = notation_for(lists.alphabet_size());
  if (o.format == "json") {
    out << json{{"status", completed ? "completed" : "budget_exhausted"},
                {"word", to_string(run.word, notation)},
                {"steps", run.steps_used()},
                {"log", io::to_json(log, notation)},
                {"log_roundtrip", roundtrip}}
               .dump()
        << '\n';
  } else {
    out << "status: " << (completed ? "completed" : "budget_exhausted") << '\n'
        << "word: " << to_string(run.word, notation) << '\n'
        << "steps: " << run.steps_used() << " (n=" << lists.size() << ", budget " << budget
        << ")\n"
        << "log roundtrip: " << (roundtrip ? "ok" : "FAILED") << '\n';
  }
  return roundtrip ? 0 : 1;
}

int cmd_erase_game(const Options& o, std::ostream& out) {
  const BenStrategy ben = ben_from(o);
  if (o.c < 4) throw UsageError("the erase game needs --c >= 4");
  Rng rng = make_rng(o.seed);
  const std::size_t budget = o.budget == 0 ? 100 * o.n : o.budget;
  const EraseGameResult result = play_erase_game(o.c, rng, ben, o.n, budget);
  const ReducedGameLog log = encode_erase_log(result.trace);
  const bool roundtrip = decode_erase_log(log, ben, o.c) == result.trace.ann_choices;
  const char* outcome =
      result.outcome == EraseOutcome::ann_reached_n ? "ann_reached_n" : "budget_exhausted";
  const Notation notation = notation_for(o.c);
  json trace = io::to_json(result.trace);
  trace["outcome"] = outcome;
  trace["log"] = io::to_json(log, notation);
  if (!o.trace_out.empty()) write_json_file(o.trace_out, trace);

  std::size_t max_h = 0;
  std::size_t bad = 0;
  for (const auto& m : result.trace.moves) {
    max_h = std::max(max_h, m.erased);
    if (m.erased == 1) ++bad;
  }
  if (o.format == "json") {
    trace["log_roundtrip"] = roundtrip;
    out << trace.dump() << '\n';
  } else {
    out << "outcome: " << outcome << '\n'
        << "word: " << to_string(result.trace.final_word, notation) << '\n'
        << "length: " << result.trace.final_word.size() << " / " << o.n << '\n'
        << "moves: " << result.trace.moves.size() << " (ann " << result.trace.ann_moves()
        << ", half-1 erasures " << bad << ", largest erasure " << max_h << ")\n"
        << "log roundtrip: " << (roundtrip ? "ok" : "FAILED") << '\n';
  }
  return roundtrip ? 0 : 1;
}

int cmd_nonrep_game(const Options& o, std::ostream& out) {
  const BenStrategy ben = ben_from(o);
  if (o.c < 3) throw UsageError("the nonrepetitive game needs --c >= 3");
  Rng rng = make_rng(o.seed);
  const NonrepGameResult result = play_nonrep_game(o.c, rng, ben, o.n);
  const bool ann_wins = result.outcome == NonrepOutcome::ann_wins;
  const Notation notation = notation_for(o.c);
  json trace{{"outcome", ann_wins ? "ann_wins" : "ben_wins"},
             {"moves", io::moves_to_json(result.moves)},
             {"ann_choices", result.ann_choices},
             {"final", result.word.symbols()}};
  if (result.repetition) {
    trace["repetition"] = {{"end", result.repetition->end}, {"half", result.repetition->half}};
  }
  if (!o.trace_out.empty()) write_json_file(o.trace_out, trace);
  if (o.format == "json") {
    out << trace.dump() << '\n';
  } else {
    out << "outcome: " << (ann_wins ? "ann_wins" : "ben_wins") << '\n'
        << "word: " << to_string(result.word, notation) << '\n'
        << "length: " << result.word.size() << " / " << o.n << '\n';
    if (result.repetition) {
      out << "repetition: \"" << square_text(result.word, *result.repetition)
          << "\" at end=" << result.repetition->end << ", h=" << result.repetition->half << '\n';
    }
  }
  return 0;
}

int cmd_search_sim(const Options& o, std::ostream& out) {
  const BenStrategy ben = ben_from(o);
  if (o.c < 3) throw UsageError("the search simulation needs --c >= 3");
  Rng rng = make_rng(o.seed);
  const std::size_t budget = o.budget == 0 ? 100 * o.n : o.budget;
  const SearchResult result = run_search_simulation(o.c, rng, ben, o.n, budget);
  const TypedSearchLog log = encode_search_log(result.trace);
  std::vector<Symbol> ann;
  std::size_t backtracks = 0;
  std::size_t max_h = 0;
  for (const auto& s : result.trace.steps) {
    if (s.mover == Mover::ann) ann.push_back(s.symbol);
    if (s.backtrack > 0) ++backtracks;
    max_h = std::max(max_h, s.backtrack);
  }
  const bool roundtrip = decode_search_log(log, ben, o.c) == ann;
  const char* outcome =
      result.outcome == SearchOutcome::reached_n ? "reached_n" : "weight_exhausted";
  const Notation notation = notation_for(o.c);
  json trace = io::to_json(result.trace);
  trace["outcome"] = outcome;
  trace["log"] = io::to_json(log, notation);
  if (!o.trace_out.empty()) write_json_file(o.trace_out, trace);
  if (o.format == "json") {
    trace["log_roundtrip"] = roundtrip;
    out << trace.dump() << '\n';
  } else {
    out << "outcome: " << outcome << '\n'
        << "word: " << to_string(result.trace.final_word, notation) << '\n'
        << "length: " << result.trace.final_word.size() << " / " << o.n << '\n'
        << "steps: " << result.trace.steps.size() << " (weight " << result.trace.weight
        << ", backtracks " << backtracks << ", largest " << max_h << ")\n"
        << "log roundtrip: " << (roundtrip ? "ok" : "FAILED") << '\n';
  }
  return roundtrip ? 0 : 1;
}

int cmd_codec_fuzz(const Options& o, std::ostream& out) {
  const CodecKind kind = parse_codec_kind(o.which);
  const FuzzReport report = fuzz_codec(kind, o.trials, o.seed, o.c);
  out << report.ok << '/' << report.trials << " roundtrips ok\n";
  for (const auto& f : report.failures) out << "  " << f << '\n';
  return report.all_ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_walks_count(const Options& o, std::ostream& out) {
  const auto counts = count_walks(parse_step_system(o.sys), o.m);
  if (o.format == "json") {
    json j = json::array();
    for (std::size_t k = 1; k < counts.size(); ++k) j.push_back(counts[k].str());
    out << json{{"sys", o.sys}, {"T", j}}.dump() << '\n';
  } else if (o.format == "csv") {
    io::write_counts_csv(out, counts);
  } else {
    for (std::size_t k = 1; k < counts.size(); ++k) out << "T_" << k << " = " << counts[k] << '\n';
  }
  return 0;
}

int cmd_walks_series(const Options& o, std::ostream& out) {
  const StepSystem sys = parse_step_system(o.sys);
  const PowerSeries s = series_from_equation(sys, o.order);
  const BiPolynomial p = defining_polynomial(sys);
  const bool ok = check_defining_polynomial(p, s, o.order);
  const auto counts = count_walks(sys, o.order);
  bool match = true;
  for (std::size_t k = 1; k <= o.order; ++k) match = match && counts[k] == s[k];
  if (o.format == "json") {
    json coeffs = json::array();
    for (std::size_t k = 0; k <= o.order; ++k) coeffs.push_back(s[k].str());
    out << json{{"sys", o.sys},
                {"series", coeffs},
                {"polynomial", p.to_string()},
                {"vanishes", ok},
                {"matches_counts", match}}
               .dump()
        << '\n';
  } else {
    out << "t(z) = ";
    for (std::size_t k = 1; k <= std::min<std::size_t>(o.order, 10); ++k) {
      out << (k > 1 ? " + " : "") << s[k] << " z^" << k;
    }
    out << (o.order > 10 ? " + ..." : "") << '\n'
        << "P(z,t) = " << p.to_string() << '\n'
        << "P(z, t(z)) = O(z^" << o.order + 1 << "): " << (ok ? "yes" : "NO") << '\n'
        << "coefficients match walk counts: " << (match ? "yes" : "NO") << '\n';
  }
  return ok && match ? 0 : 1;
}

int cmd_walks_disc(const Options& o, std::ostream& out) {
  const Discriminant d = discriminant_wrt_t(defining_polynomial(parse_step_system(o.sys)));
  if (o.format == "json") {
    out << json{{"sys", o.sys},
                {"resultant", io::to_json(d.resultant)},
                {"discriminant", io::to_json(d.discriminant)},
                {"normalized", io::to_json(d.normalized)}}
               .dump()
        << '\n';
  } else {
    out << "resultant: " << d.resultant.to_string('z') << '\n'
        << "discriminant: " << d.discriminant.to_string('z') << '\n'
        << "normalized: " << d.normalized.to_string('z') << '\n';
  }
  return 0;
}

int cmd_walks_roots(const Options& o, std::ostream& out) {
  const Discriminant d = discriminant_wrt_t(defining_polynomial(parse_step_system(o.sys)));
  const auto roots = positive_roots_in_unit_interval(d.normalized);
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : roots) {
      j.push_back({{"lo", r.lo.to_string()},
                   {"hi", r.hi.to_string()},
                   {"value", r.value},
                   {"width", r.width()},
                   {"repeated", r.multiplicity_suspect}});
    }
    out << json{{"sys", o.sys}, {"polynomial", d.normalized.to_string('z')}, {"roots", j}}.dump()
        << '\n';
  } else {
    out << "roots of " << d.normalized.to_string('z') << " in (0, 1]: " << roots.size() << '\n';
    for (const auto& r : roots) {
      out << std::setprecision(15) << "  " << r.value << "  [" << r.lo.to_string() << ", "
          << r.hi.to_string() << "]  width " << std::setprecision(3) << r.width()
          << (r.multiplicity_suspect ? "  (repeated)" : "") << '\n';
    }
  }
  return 0;
}

int cmd_walks_growth(const Options& o, std::ostream& out) {
  const GrowthReport g = growth_report(parse_step_system(o.sys), o.m);
  if (o.format == "json") {
    json ratios = json::array();
    for (const auto& [m, r] : g.ratios) ratios.push_back({{"m", m}, {"ratio", r}});
    out << json{{"sys", o.sys},
                {"rho", g.rho},
                {"inverse_rho", 1.0 / g.rho},
                {"ratios", ratios},
                {"max_log_error", g.max_log_error},
                {"comparison", g.comparison},
                {"holds", g.holds}}
               .dump()
        << '\n';
  } else {
    out << std::setprecision(12) << "rho = " << g.rho << "  (1/rho = " << 1.0 / g.rho << ")\n";
    for (const auto& [m, r] : g.ratios) {
      out << "  T_" << m + 1 << "/T_" << m << " = " << r << "  (" << std::setprecision(3)
          << 100.0 * (r * g.rho - 1.0) << "% from 1/rho)" << std::setprecision(12) << '\n';
    }
    out << "log-space DP error vs exact: " << std::setprecision(3) << g.max_log_error << '\n'
        << g.comparison << ": " << (g.holds ? "holds" : "FAILS") << '\n';
  }
  return g.holds ? 0 : 1;
}

int cmd_walks_bound(const Options& o, std::ostream& out) {
  const BoundReport b = counting_bound_report(parse_step_system(o.sys), o.c, o.n, o.sweep);
  if (o.format == "json") {
    json j{{"sys", o.sys}, {"c", b.alphabet}, {"n", b.n}, {"sweep_max", b.sweep_max}};
    if (b.crossover) {
      j["crossover"] = *b.crossover;
      j["lhs_log2"] = b.lhs_log2;
      j["rhs_log2"] = b.rhs_log2;
    } else {
      j["crossover"] = nullptr;
    }
    out << j.dump() << '\n';
  } else if (b.crossover) {
    out << "crossover M* = " << *b.crossover << " (C=" << b.alphabet << ", n=" << b.n
        << "): log2 lhs " << std::fixed << std::setprecision(2) << b.lhs_log2 << " > log2 rhs "
        << b.rhs_log2 << " for every M in [M*, " << b.sweep_max << "]\n";
  } else {
    out << "no crossover up to M = " << b.sweep_max << '\n';
  }
  return b.crossover ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Square-free words, repetition games and their counting machinery", "thuelab"};
  app.require_subcommand(1);
  std::uint64_t default_seed = 0;
  try {
    default_seed = env_seed();
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  }
  o.seed = default_seed;

  const auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (default $THUELAB_SEED or 0)");
  };

  auto* check = app.add_subcommand("check", "Find the first square in a word");
  check->add_option("word", o.word, "Word over 1..9 or a..z")->required();
  check->add_option("--h-min", o.h_min, "Smallest half that counts")->check(CLI::PositiveNumber);
  add_format(check, {"text", "json"});

  auto* thue = app.add_subcommand("thue", "Print a square-free ternary word");
  thue->add_option("length", o.length, "Word length")->required()->check(CLI::PositiveNumber);

  auto* choose = app.add_subcommand("choose", "Run the list-choosing algorithm");
  choose->add_option("--lists", o.lists_file, "List system file");
  add_seed(choose);
  choose->add_option("--budget", o.budget, "Step budget (default 100 n)");
  choose->add_flag("--stats", o.stats, "Run the step-count statistics instead");
  choose->add_option("--list-size", o.list_size, "List size for --stats")
      ->check(CLI::PositiveNumber);
  choose->add_option("--ns", o.ns, "Word lengths for --stats")->delimiter(',');
  choose->add_option("--trials", o.trials, "Trials per n for --stats");
  choose->add_option("--generator", o.generator, "List generator for --stats")
      ->check(CLI::IsMember({"identical", "random-disjoint-pool"}));
  add_format(choose, {"text", "json", "csv"});

  std::vector<CLI::App*> game_cmds;
  for (const char* name : {"erase-game", "nonrep-game", "search-sim"}) {
    auto* g = app.add_subcommand(name, std::string(name) == "search-sim"   ? "Run the backtracking search simulation"
                                       : std::string(name) == "erase-game" ? "Play the erase game"
                                                                           : "Play the nonrepetitive game");
    g->add_option("--c", o.c, "Alphabet size")->check(CLI::Range(3, 256));
    g->add_option("--ben", o.ben, "Ben's strategy")
        ->check(CLI::IsMember({"mimic", "constant", "cycle", "greedy-threat", "scripted-table"}));
    g->add_option("--n", o.n, "Target length")->check(CLI::PositiveNumber);
    add_seed(g);
    if (std::string(name) != "nonrep-game") {
      g->add_option("--budget", o.budget,
                    std::string(name) == "search-sim" ? "Ann move budget M (default 100 n)"
                                                      : "Move budget (default 100 n)");
    }
    g->add_option("--constant", o.constant, "Symbol for --ben constant (0-based)");
    g->add_option("--offset", o.offset, "Offset for --ben cycle");
    g->add_option("--table", o.table_file, "JSON table for --ben scripted-table");
    g->add_option("--trace-out", o.trace_out, "Write the JSON trace here");
    add_format(g, {"text", "json"});
    game_cmds.push_back(g);
  }

  auto* codec = app.add_subcommand("codec", "Log codec tools");
  codec->require_subcommand(1);
  auto* fuzz = codec->add_subcommand("fuzz", "Seeded encode/decode roundtrips");
  fuzz->add_option("--which", o.which, "Codec")
      ->required()
      ->check(CLI::IsMember({"alg1", "erase", "search"}));
  fuzz->add_option("--trials", o.trials, "Number of roundtrips");
  add_seed(fuzz);
  fuzz->add_option("--c", o.c, "Alphabet (list size for alg1)");

  auto* walks = app.add_subcommand("walks", "Walk counts and analytic constants");
  walks->require_subcommand(1);
  std::map<std::string, CLI::App*> walk_cmds;
  for (const char* name : {"count", "series", "disc", "roots", "growth", "bound"}) {
    auto* w = walks->add_subcommand(name);
    w->add_option("--sys", o.sys, "Step system")
        ->required()
        ->check(CLI::IsMember({"alg1", "erase", "search"}));
    add_format(w, std::string(name) == "count" ? std::vector<std::string>{"text", "json", "csv"}
                                               : std::vector<std::string>{"text", "json"});
    walk_cmds[name] = w;
  }
  walk_cmds["count"]->description("Exact walk counts T_1..T_m");
  walk_cmds["count"]->add_option("--m", o.m, "Largest length");
  walk_cmds["series"]->description("Generating function by fixed-point iteration");
  walk_cmds["series"]->add_option("--order", o.order, "Series order")->check(CLI::PositiveNumber);
  walk_cmds["disc"]->description("Discriminant of the defining polynomial");
  walk_cmds["roots"]->description("Certified discriminant roots in (0, 1]");
  walk_cmds["growth"]->description("Radius of convergence and T-ratio estimates");
  walk_cmds["growth"]->add_option("--m", o.m, "Length for the ratio estimate");
  walk_cmds["bound"]->description("Counting-inequality crossover");
  walk_cmds["bound"]->add_option("--c", o.c, "Alphabet size")->required();
  walk_cmds["bound"]->add_option("--n", o.n, "Word length")->required();
  walk_cmds["bound"]->add_option("--sweep", o.sweep, "Largest M examined");

  auto* serve = app.add_subcommand("serve", "Serve the game-session HTTP API on localhost");
  serve->add_option("--port", o.port, "TCP port")->check(CLI::Range(1, 65535));
  add_seed(serve);

  std::vector<std::string> argv_storage{"thuelab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  // Subcommand defaults that differ from the shared ones.
  if (walk_cmds["growth"]->parsed() && walk_cmds["growth"]->count("--m") == 0) o.m = 2000;
  if (fuzz->parsed()) {
    if (fuzz->count("--trials") == 0) o.trials = 1000;
    if (fuzz->count("--c") == 0) o.c = 0;
  }
  if (game_cmds[1]->parsed() || game_cmds[2]->parsed()) {
    auto* g = game_cmds[1]->parsed() ? game_cmds[1] : game_cmds[2];
    if (g->count("--c") == 0) o.c = 6;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (thue->parsed()) return cmd_thue(o, out);
    if (choose->parsed()) return cmd_choose(o, out);
    if (game_cmds[0]->parsed()) return cmd_erase_game(o, out);
    if (game_cmds[1]->parsed()) return cmd_nonrep_game(o, out);
    if (game_cmds[2]->parsed()) return cmd_search_sim(o, out);
    if (fuzz->parsed()) return cmd_codec_fuzz(o, out);
    if (walk_cmds["count"]->parsed()) return cmd_walks_count(o, out);
    if (walk_cmds["series"]->parsed()) return cmd_walks_series(o, out);
    if (walk_cmds["disc"]->parsed()) return cmd_walks_disc(o, out);
    if (walk_cmds["roots"]->parsed()) return cmd_walks_roots(o, out);
    if (walk_cmds["growth"]->parsed()) return cmd_walks_growth(o, out);
    if (walk_cmds["bound"]->parsed()) return cmd_walks_bound(o, out);
    if (serve->parsed()) return run_server(o.port, o.seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedLog& e) {
    err << "malformed log: " << e.what() << '\n';
    return 1;
  } catch (const InconsistentLog& e) {
    err << "inconsistent log: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace thuelab

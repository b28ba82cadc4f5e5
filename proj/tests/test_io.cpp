#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "thuelab/errors.hpp"
#include "thuelab/io.hpp"

using namespace thuelab;
using nlohmann::json;

TEST_CASE("word files") {
  std::istringstream in("123\n\n  abc \n1\n");
  const auto words = io::read_words(in);
  REQUIRE(words.size() == 3);
  CHECK(words[1] == Word{0, 1, 2});
  std::ostringstream out;
  io::write_words(out, words, Notation::digits);
  CHECK(out.str() == "123\n123\n1\n");
}

TEST_CASE("list system files") {
  std::istringstream in("a, b, c, d\n\nd,c,b,a\n");
  const ListSystem lists = io::read_list_system(in);
  CHECK(lists.size() == 2);
  CHECK(lists.list(2) == std::vector<Symbol>{3, 2, 1, 0});
  std::ostringstream out;
  io::write_list_system(out, lists, Notation::letters);
  std::istringstream back(out.str());
  CHECK(io::read_list_system(back).list(1) == lists.list(1));

  std::istringstream bad("ab,c\n");
  CHECK_THROWS_AS(io::read_list_system(bad), DomainError);
  std::istringstream repeated("a,a\n");
  CHECK_THROWS_AS(io::read_list_system(repeated), DomainError);
}

TEST_CASE("log JSON roundtrips") {
  const Alg1Log a{{1, 0, 1}, parse_word("12")};
  const json ja = io::to_json(a, Notation::digits);
  CHECK(ja["m"] == 3);
  CHECK(ja["s"] == "12");
  CHECK(io::alg1_log_from_json(ja) == a);

  const ReducedGameLog r{{1, 1, -3, 1}, Word{}, 3};
  CHECK(io::reduced_log_from_json(io::to_json(r, Notation::letters)) == r);

  const TypedSearchLog t{{1, 1, 1, 1, 1, -3}, {{6, 2}}, parse_word("ab")};
  const json jt = io::to_json(t, Notation::letters);
  CHECK(jt["types"]["6"] == 2);
  CHECK(io::search_log_from_json(jt) == t);
}

TEST_CASE("malformed log JSON") {
  CHECK_THROWS_AS(io::alg1_log_from_json(json{{"s", "1"}}), MalformedLog);
  CHECK_THROWS_AS(io::alg1_log_from_json(json{{"d", {1}}, {"s", 7}}), MalformedLog);
  CHECK_THROWS_AS(io::alg1_log_from_json(json{{"d", {1, "x"}}, {"s", "1"}}), MalformedLog);
  CHECK_THROWS_AS(io::alg1_log_from_json(json{{"d", {1}}, {"s", "1"}, {"m", 2}}), MalformedLog);
  CHECK_THROWS_AS(io::alg1_log_from_json(json{{"d", {1}}, {"s", "1?"}}), MalformedLog);
  CHECK_THROWS_AS(io::reduced_log_from_json(json{{"d", {1}}, {"s", "a"}}), MalformedLog);
  CHECK_THROWS_AS(io::search_log_from_json(json{{"d", {1}}, {"s", "a"}, {"types", {{"x", 1}}}}),
                  MalformedLog);
  CHECK_THROWS_AS(io::search_log_from_json(json{{"d", {1}}, {"s", "a"}, {"types", {{"1", "a"}}}}),
                  MalformedLog);
}

TEST_CASE("trace JSON roundtrips") {
  Rng rng = make_rng(3);
  const auto game = play_erase_game(8, rng, make_ben("greedy-threat", 8), 40, 4000);
  const json j = io::to_json(game.trace);
  CHECK(j["moves"].size() == game.trace.moves.size());
  const GameTrace back = io::game_trace_from_json(j);
  CHECK(back.moves == game.trace.moves);
  CHECK(back.ann_choices == game.trace.ann_choices);
  CHECK(back.final_word == game.trace.final_word);

  Rng rng2 = make_rng(4);
  const auto run = run_search_simulation(6, rng2, make_ben("cycle", 6), 40, 200);
  const SearchTrace s = io::search_trace_from_json(io::to_json(run.trace));
  CHECK(s.steps == run.trace.steps);
  CHECK(s.weight == run.trace.weight);

  CHECK_THROWS_AS(io::game_trace_from_json(json{{"moves", json::array()}}), MalformedLog);
  CHECK_THROWS_AS(io::search_trace_from_json(json{{"moves", {{{"mover", "ann"}}}}, {"final", json::array()}}),
                  MalformedLog);
}

TEST_CASE("scripted tables") {
  const BenParams p = io::scripted_table_from_json(json{{"default", 2}, {"ab", 3}});
  CHECK(p.table_default == 2);
  CHECK(p.table.at("ab") == 3);
  CHECK_THROWS_AS(io::scripted_table_from_json(json{{"ab", -1}}), DomainError);
  CHECK_THROWS_AS(io::scripted_table_from_json(json{{"ab", "x"}}), DomainError);
  CHECK_THROWS_AS(io::scripted_table_from_json(json::array()), DomainError);
}

TEST_CASE("counts and polynomials") {
  std::ostringstream csv;
  io::write_counts_csv(csv, {0, 1, 1, 2});
  CHECK(csv.str() == "m,T_m\n1,1\n2,1\n3,2\n");

  const IntPolynomial p{-4, -19, 32};
  CHECK(io::to_json(p) == json::array({-4, -19, 32}));
  CHECK(io::polynomial_from_json(io::to_json(p)) == p);
  const IntPolynomial big(std::vector<BigInt>{BigInt("123456789012345678901234567890"), 1});
  const json jb = io::to_json(big);
  CHECK(jb[0].is_string());
  CHECK(io::polynomial_from_json(jb) == big);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "thuelab/game_codecs.hpp"
#include "thuelab/io.hpp"
#include "thuelab/server.hpp"
#include "thuelab/session.hpp"

using namespace thuelab;
using nlohmann::json;

namespace {

std::string created_id(SessionManager& m, const json& request) {
  const ApiResponse r = m.create(request);
  REQUIRE(r.status == 201);
  return r.body["id"].get<std::string>();
}

// Ben that replays a fixed move list, built as a scripted table keyed by the
// visible word. Ben's k-th move is answered at a distinct word length.
BenStrategy replay_ben(const std::vector<GameMove>& moves, std::size_t c) {
  BenParams params;
  std::vector<Symbol> w;
  for (const auto& m : moves) {
    if (m.mover == Mover::ben) params.table[to_string(w, notation_for(c))] = m.symbol;
    w.push_back(m.symbol);
    w.resize(m.length);
  }
  return make_ben("scripted-table", c, params);
}

}  // namespace

TEST_CASE("session creation") {
  SessionManager m(5);
  const ApiResponse r = m.create(json{{"kind", "erase"}, {"c", 8}, {"seed", 1}, {"target_n", 20}});
  REQUIRE(r.status == 201);
  const json& state = r.body["state"];
  CHECK(state["length"] == 1);
  CHECK(state["to_move"] == "ben");
  CHECK(state["status"] == "live");
  CHECK(state["move_budget"] == 2000);
  CHECK(state["repetition"].is_null());

  // Seed defaults to the manager's.
  const ApiResponse d = m.create(json{{"c", 8}, {"target_n", 5}});
  CHECK(d.body["state"]["seed"] == 5);
  CHECK(d.body["state"]["kind"] == "erase");
  CHECK(d.body["id"] != r.body["id"]);

  CHECK(m.create(json{{"c", 3}, {"target_n", 5}}).status == 400);
  CHECK(m.create(json{{"kind", "nonrep"}, {"c", 2}, {"target_n", 5}}).status == 400);
  CHECK(m.create(json{{"kind", "chess"}, {"c", 8}, {"target_n", 5}}).status == 400);
  CHECK(m.create(json{{"c", 8}}).status == 400);
  CHECK(m.create(json{{"c", "eight"}, {"target_n", 5}}).status == 400);
  CHECK(m.create(json{{"c", 8}, {"target_n", 0}}).status == 400);
  CHECK(m.create(json::array()).status == 400);
  CHECK(m.size() == 2);
}

TEST_CASE("erase session moves") {
  SessionManager m;
  const std::string id = created_id(m, {{"c", 8}, {"seed", 1}, {"target_n", 50}});
  const Word before = m.find(id)->word();
  // Repeating Ann's last symbol makes a half-1 square that is erased.
  const ApiResponse r = m.move(id, {{"symbol", before[before.size() - 1]}});
  REQUIRE(r.status == 200);
  REQUIRE(r.body["erasures"].size() >= 1);
  CHECK(r.body["erasures"][0]["mover"] == "ben");
  CHECK(r.body["erasures"][0]["h"] == 1);
  CHECK(r.body["moves"].size() == 2);
  CHECK(r.body["moves"][1]["mover"] == "ann");
  CHECK(r.body["state"]["length"] == 2);

  CHECK(m.move(id, {{"symbol", 8}}).status == 400);
  CHECK(m.move(id, {{"symbol", -1}}).status == 400);
  CHECK(m.move(id, {{"symbol", "a"}}).status == 400);
  CHECK(m.move(id, {{"symbol", 1.5}}).status == 400);
  CHECK(m.move(id, json::object()).status == 400);
  CHECK(m.move("nope", {{"symbol", 0}}).status == 404);
  CHECK(m.state("nope").status == 404);
  CHECK(m.trace("nope").status == 404);

  {
    auto session = m.find(id);
    std::lock_guard hold(session->mutex());
    CHECK(m.move(id, {{"symbol", 0}}).status == 409);
  }
  CHECK(m.move(id, {{"symbol", 0}}).status == 200);

  CHECK(m.remove(id).status == 200);
  CHECK(m.remove(id).status == 404);
  CHECK(m.size() == 0);
}

TEST_CASE("erase session matches the library game and its log decodes") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SessionManager m;
    const std::string id = created_id(m, {{"c", 8}, {"seed", seed}, {"target_n", 15}});
    const BenStrategy ben = make_ben(seed % 2 ? "greedy-threat" : "mimic", 8);
    auto session = m.find(id);
    while (session->status() == SessionStatus::live) {
      REQUIRE(m.move(id, {{"symbol", ben(session->word())}}).status == 200);
    }
    const ApiResponse t = m.trace(id);
    REQUIRE(t.status == 200);
    const GameTrace trace = io::game_trace_from_json(t.body);
    CHECK(trace.moves == session->moves());

    // Same seed, same Ben replies: the library game reproduces the session.
    const BenStrategy replay = replay_ben(session->moves(), 8);
    Rng rng = make_rng(seed);
    const auto game = play_erase_game(8, rng, replay, 15, 1500);
    CHECK(game.trace.moves == session->moves());
    CHECK(t.body["status"] == (game.outcome == EraseOutcome::ann_reached_n ? "ann_won" : "exhausted"));

    const ReducedGameLog log = io::reduced_log_from_json(t.body["log"]);
    CHECK(decode_erase_log(log, replay, 8) == trace.ann_choices);
    CHECK(t.body["ann_choices"].get<std::vector<Symbol>>() == trace.ann_choices);
  }
}

TEST_CASE("nonrep session") {
  std::size_t ben_won = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SessionManager m;
    const std::string id = created_id(m, {{"kind", "nonrep"}, {"c", 6}, {"seed", seed}, {"target_n", 40}});
    auto session = m.find(id);
    const BenStrategy ben = make_ben("greedy-threat", 6);
    while (session->status() == SessionStatus::live) {
      REQUIRE(m.move(id, {{"symbol", ben(session->word())}}).status == 200);
    }
    const json state = m.state(id).body;
    if (state["status"] == "ben_won") {
      ++ben_won;
      CHECK(state["repetition"]["half"].get<std::size_t>() >= 5);
    } else {
      CHECK(state["status"] == "ann_won");
      CHECK(state["length"] == 40);
      CHECK(is_square_free(session->word(), 2));
    }
    CHECK(m.move(id, {{"symbol", 0}}).status == 400);

    Rng rng = make_rng(seed);
    const auto game = play_nonrep_game(6, rng, replay_ben(session->moves(), 6), 40);
    CHECK(game.moves == session->moves());
  }
  MESSAGE("ben won " << ben_won << " of 40");
}

TEST_CASE("HTTP surface over loopback") {
  SessionManager sessions(9);
  SessionServer server(sessions);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/session", R"({"kind":"erase","c":8,"target_n":10})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");
  const json body = json::parse(created->body);
  const std::string id = body["id"];
  CHECK(body["state"]["seed"] == 9);

  auto state = client.Get("/session/" + id);
  REQUIRE(state);
  CHECK(state->status == 200);
  CHECK(json::parse(state->body)["id"] == id);

  auto moved = client.Post("/session/" + id + "/move", R"({"symbol":3})", "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  CHECK(json::parse(moved->body)["moves"].size() >= 1);

  auto bad = client.Post("/session/" + id + "/move", "{not json", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto trace = client.Get("/session/" + id + "/trace");
  REQUIRE(trace);
  CHECK(trace->status == 200);
  CHECK(json::parse(trace->body).contains("log"));

  auto missing = client.Get("/session/999");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto options = client.Options("/session");
  REQUIRE(options);
  CHECK(options->status == 204);

  auto removed = client.Delete("/session/" + id);
  REQUIRE(removed);
  CHECK(removed->status == 200);
  CHECK(sessions.size() == 0);

  server.stop();
  worker.join();
}

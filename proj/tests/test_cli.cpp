#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thuelab/cli.hpp"
#include "thuelab/game_codecs.hpp"
#include "thuelab/io.hpp"

using namespace thuelab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("thuelab_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("check") {
  const Result bad = run({"check", "1232312"});
  CHECK(bad.code == 1);
  CHECK(bad.out == "square \"2323\" at end=5, h=2\n");
  const Result good = run({"check", "123132123"});
  CHECK(good.code == 0);
  CHECK(good.out.find("square-free") != std::string::npos);
  CHECK(run({"check", "1212", "--h-min", "3"}).code == 0);
  const json j = json::parse(run({"check", "1212", "--format", "json"}).out);
  CHECK(j["square"]["h"] == 2);
  CHECK(run({"check", "12x"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("thue") {
  CHECK(run({"thue", "12"}).out == "123121312321\n");
  CHECK(run({"thue", "0"}).code == 2);
}

TEST_CASE("choose") {
  const auto lists = temp_file("lists.txt", "a,b,c,d\nb,c,d,a\nc,d,a,b\nd,a,b,c\na,b,c,d\n");
  const Result r = run({"choose", "--lists", lists.string(), "--seed", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "completed");
  const Alg1Log log = io::alg1_log_from_json(j["log"]);
  CHECK(log.s.size() == 5);
  CHECK(is_nonrepetitive(log.s));

  const Result stats = run({"choose", "--stats", "--list-size", "4", "--ns", "50,100", "--trials", "5",
                            "--seed", "1", "--format", "csv"});
  CHECK(stats.code == 0);
  CHECK(stats.out.rfind("n,trials,mean_steps,max_steps,completed\n", 0) == 0);
  CHECK(run({"choose", "--lists", "/nonexistent/lists.txt"}).code == 2);
  CHECK(run({"choose"}).code == 2);
  std::filesystem::remove(lists);
}

TEST_CASE("games through the CLI") {
  const Result e = run({"erase-game", "--c", "8", "--ben", "greedy-threat", "--n", "30", "--seed", "7",
                        "--format", "json"});
  REQUIRE(e.code == 0);
  const json ej = json::parse(e.out);
  const ReducedGameLog elog = io::reduced_log_from_json(ej["log"]);
  CHECK(decode_erase_log(elog, make_ben("greedy-threat", 8), 8) ==
        ej["ann_choices"].get<std::vector<Symbol>>());

  const auto trace_path = std::filesystem::temp_directory_path() / "thuelab_test_trace.json";
  const Result s = run({"search-sim", "--c", "6", "--ben", "cycle", "--n", "40", "--seed", "2",
                        "--trace-out", trace_path.string()});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("log roundtrip: ok") != std::string::npos);
  std::ifstream in(trace_path);
  const SearchTrace trace = io::search_trace_from_json(json::parse(in));
  CHECK(trace.weight > 0);
  std::filesystem::remove(trace_path);

  const auto table = temp_file("table.json", R"({"default": 1, "a": 0})");
  const Result n = run({"nonrep-game", "--c", "6", "--ben", "scripted-table", "--table", table.string(),
                        "--n", "20", "--seed", "3"});
  CHECK(n.code == 0);
  std::filesystem::remove(table);

  CHECK(run({"erase-game", "--c", "3"}).code == 2);
  CHECK(run({"erase-game", "--ben", "nobody"}).code == 2);
  CHECK(run({"nonrep-game", "--budget", "5"}).code == 2);
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::vector<std::string>> commands{
      {"erase-game", "--seed", "11", "--n", "25"},
      {"nonrep-game", "--seed", "11", "--n", "25", "--format", "json"},
      {"search-sim", "--seed", "11", "--n", "25"},
      {"choose", "--stats", "--ns", "40", "--trials", "3", "--seed", "11"},
      {"codec", "fuzz", "--which", "search", "--trials", "50", "--seed", "11"},
  };
  for (const auto& c : commands) {
    const Result a = run(c);
    const Result b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"erase-game", "--seed", "11", "--n", "25"}).out !=
        run({"erase-game", "--seed", "12", "--n", "25"}).out);
}

TEST_CASE("seed from the environment") {
  ::setenv("THUELAB_SEED", "11", 1);
  const Result env = run({"erase-game", "--n", "25"});
  ::unsetenv("THUELAB_SEED");
  CHECK(env.out == run({"erase-game", "--seed", "11", "--n", "25"}).out);
  ::setenv("THUELAB_SEED", "eleven", 1);
  CHECK(run({"erase-game", "--n", "25"}).code == 2);
  ::unsetenv("THUELAB_SEED");
}

TEST_CASE("codec fuzz") {
  for (const char* which : {"alg1", "erase", "search"}) {
    const Result r = run({"codec", "fuzz", "--which", which, "--trials", "200", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("200/200 roundtrips ok") != std::string::npos);
  }
  CHECK(run({"codec", "fuzz", "--which", "zip"}).code == 2);
}

TEST_CASE("walks") {
  CHECK(run({"walks", "count", "--sys", "search", "--m", "4", "--format", "csv"}).out ==
        "m,T_m\n1,1\n2,0\n3,1\n4,4\n");
  const json s = json::parse(run({"walks", "series", "--sys", "erase", "--order", "5", "--format", "json"}).out);
  CHECK(s["series"] == json::array({"0", "1", "0", "0", "0", "1"}));
  CHECK(s["vanishes"] == true);
  CHECK(s["matches_counts"] == true);
  const Result d = run({"walks", "disc", "--sys", "search"});
  CHECK(d.out.find("normalized: -1 - 12*z + 24*z^2 + 80*z^3 + 288*z^4") != std::string::npos);
  const json roots = json::parse(run({"walks", "roots", "--sys", "erase", "--format", "json"}).out);
  REQUIRE(roots["roots"].size() == 1);
  CHECK(std::abs(roots["roots"][0]["value"].get<double>() - 0.457) < 1e-3);
  CHECK(run({"walks", "growth", "--sys", "search", "--m", "500"}).code == 0);
  const Result b = run({"walks", "bound", "--sys", "search", "--c", "6", "--n", "5"});
  CHECK(b.code == 0);
  CHECK(b.out.find("M* = 144") != std::string::npos);
  CHECK(run({"walks", "bound", "--sys", "alg1", "--c", "3", "--n", "5", "--sweep", "300"}).code == 1);
  CHECK(run({"walks", "count", "--sys", "other"}).code == 2);
}

#include "thuelab/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "thuelab/errors.hpp"

namespace thuelab::io {

namespace {

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<int> int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw MalformedLog(std::string("missing array '") + key + "'");
  }
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer()) throw MalformedLog(std::string("non-integer in '") + key + "'");
  }
  return j.at(key).get<std::vector<int>>();
}

Word word_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw MalformedLog(std::string("missing string '") + key + "'");
  }
  try {
    return parse_word(j.at(key).get<std::string>());
  } catch (const DomainError& e) {
    throw MalformedLog(e.what());
  }
}

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw MalformedLog(std::string("missing count '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

std::vector<Word> read_words(std::istream& in) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (!line.empty()) words.push_back(parse_word(line));
  }
  return words;
}

void write_words(std::ostream& out, const std::vector<Word>& words, Notation notation) {
  for (const auto& w : words) out << to_string(w, notation) << '\n';
}

ListSystem read_list_system(std::istream& in) {
  std::vector<std::vector<Symbol>> lists;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::vector<Symbol> list;
    std::stringstream fields(line);
    std::string token;
    while (std::getline(fields, token, ',')) {
      token = strip(token);
      if (token.size() != 1) throw DomainError("list symbols must be single characters: '" + token + "'");
      list.push_back(parse_word(token)[0]);
    }
    lists.push_back(std::move(list));
  }
  return ListSystem(std::move(lists));
}

void write_list_system(std::ostream& out, const ListSystem& lists, Notation notation) {
  for (std::size_t i = 1; i <= lists.size(); ++i) {
    const auto& l = lists.list(i);
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (k > 0) out << ',';
      out << symbol_to_string(l[k], notation);
    }
    out << '\n';
  }
}

json to_json(const Alg1Log& log, Notation notation) {
  return json{{"d", log.d}, {"s", to_string(log.s, notation)}, {"m", log.m()}};
}

Alg1Log alg1_log_from_json(const json& j) {
  Alg1Log log{int_array(j, "d"), word_field(j, "s")};
  if (j.contains("m") && count_field(j, "m") != log.d.size()) {
    throw MalformedLog("'m' does not match the number of differences");
  }
  return log;
}

json to_json(const ReducedGameLog& log, Notation notation) {
  return json{{"d", log.d}, {"s", to_string(log.s, notation)}, {"m", log.m}};
}

ReducedGameLog reduced_log_from_json(const json& j) {
  return ReducedGameLog{int_array(j, "d"), word_field(j, "s"), count_field(j, "m")};
}

json to_json(const TypedSearchLog& log, Notation notation) {
  json types = json::object();
  for (const auto& [k, t] : log.types) types[std::to_string(k)] = t;
  return json{{"d", log.d}, {"types", types}, {"s", to_string(log.s, notation)}, {"m", log.m()}};
}

TypedSearchLog search_log_from_json(const json& j) {
  TypedSearchLog log;
  log.d = int_array(j, "d");
  log.s = word_field(j, "s");
  if (j.contains("types")) {
    for (const auto& [key, value] : j.at("types").items()) {
      std::size_t index = 0;
      try {
        index = std::stoul(key);
      } catch (const std::exception&) {
        throw MalformedLog("type key '" + key + "' is not an index");
      }
      if (!value.is_number_integer()) throw MalformedLog("type for '" + key + "' must be an integer");
      log.types[index] = value.get<int>();
    }
  }
  if (j.contains("m") && count_field(j, "m") != log.d.size()) {
    throw MalformedLog("'m' does not match the number of differences");
  }
  return log;
}

json moves_to_json(const std::vector<GameMove>& moves) {
  json out = json::array();
  std::size_t height = 0;
  for (const auto& m : moves) {
    out.push_back({{"mover", to_string(m.mover)},
                   {"symbol", m.symbol},
                   {"h", m.erased},
                   {"height", height}});
    height = m.length;
  }
  return out;
}

json to_json(const GameTrace& trace) {
  return json{{"moves", moves_to_json(trace.moves)},
              {"ann_choices", trace.ann_choices},
              {"final", trace.final_word.symbols()}};
}

json to_json(const SearchTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"mover", to_string(s.mover)},
                     {"symbol", s.symbol},
                     {"h", s.backtrack},
                     {"height", s.height}});
  }
  return json{{"moves", steps}, {"weight", trace.weight}, {"final", trace.final_word.symbols()}};
}

GameTrace game_trace_from_json(const json& j) {
  try {
    GameTrace trace;
    for (const auto& r : j.at("moves")) {
      GameMove m;
      m.mover = parse_mover(r.at("mover").get<std::string>());
      m.symbol = r.at("symbol").get<Symbol>();
      m.erased = r.at("h").get<std::size_t>();
      m.length = r.at("height").get<std::size_t>() + 1 - m.erased;
      if (m.mover == Mover::ann) trace.ann_choices.push_back(m.symbol);
      trace.moves.push_back(m);
    }
    trace.final_word = Word(j.at("final").get<std::vector<Symbol>>());
    return trace;
  } catch (const json::exception& e) {
    throw MalformedLog(std::string("bad trace: ") + e.what());
  }
}

SearchTrace search_trace_from_json(const json& j) {
  try {
    SearchTrace trace;
    for (const auto& r : j.at("moves")) {
      SearchStep s;
      s.mover = parse_mover(r.at("mover").get<std::string>());
      s.symbol = r.at("symbol").get<Symbol>();
      s.backtrack = r.at("h").get<std::size_t>();
      s.height = r.at("height").get<std::size_t>();
      if (s.mover == Mover::ann) ++trace.weight;
      trace.steps.push_back(s);
    }
    trace.final_word = Word(j.at("final").get<std::vector<Symbol>>());
    return trace;
  } catch (const json::exception& e) {
    throw MalformedLog(std::string("bad trace: ") + e.what());
  }
}

BenParams scripted_table_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("scripted table must be a JSON object");
  BenParams params;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw DomainError("scripted table value for '" + key + "' must be an integer");
    const long long s = value.get<long long>();
    if (s < 0 || s >= static_cast<long long>(kMaxAlphabet)) {
      throw DomainError("scripted table symbol out of range for '" + key + "'");
    }
    if (key == "default") {
      params.table_default = static_cast<Symbol>(s);
    } else {
      params.table[key] = static_cast<Symbol>(s);
    }
  }
  return params;
}

void write_counts_csv(std::ostream& out, const std::vector<BigInt>& counts) {
  out << "m,T_m\n";
  for (std::size_t m = 1; m < counts.size(); ++m) out << m << ',' << counts[m] << '\n';
}

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      out.push_back(c.convert_to<long long>());
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

IntPolynomial polynomial_from_json(const json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    coeffs.push_back(c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace thuelab::io

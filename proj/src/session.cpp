#include "thuelab/session.hpp"

#include "thuelab/errors.hpp"
#include "thuelab/game_codecs.hpp"
#include "thuelab/io.hpp"

namespace thuelab {

using nlohmann::json;

std::string to_string(GameKind k) { return k == GameKind::erase ? "erase" : "nonrep"; }

GameKind parse_game_kind(std::string_view text) {
  if (text == "erase") return GameKind::erase;
  if (text == "nonrep") return GameKind::nonrep;
  throw DomainError("unknown game kind '" + std::string(text) + "'");
}

std::string to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::live: return "live";
    case SessionStatus::ann_won: return "ann_won";
    case SessionStatus::ben_won: return "ben_won";
    case SessionStatus::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

std::variant<EraseGame, NonrepGame> make_game(const SessionSettings& s) {
  if (s.kind == GameKind::erase) {
    if (s.alphabet_size < 4) throw DomainError("the erase game needs c >= 4");
    return EraseGame(s.alphabet_size);
  }
  if (s.alphabet_size < 3) throw DomainError("the nonrepetitive game needs c >= 3");
  return NonrepGame(s.alphabet_size);
}

SessionSettings checked(SessionSettings s) {
  if (s.target_n == 0) throw DomainError("target_n must be positive");
  if (s.kind == GameKind::erase && s.move_budget == 0) s.move_budget = 100 * s.target_n;
  return s;
}

json repetition_json(const std::optional<Repetition>& r) {
  if (!r) return nullptr;
  return json{{"end", r->end}, {"half", r->half}};
}

ApiResponse error(int status, const std::string& message) {
  return {status, json{{"error", message}}};
}

}  // namespace

GameSession::GameSession(std::string id, const SessionSettings& settings)
    : id_(std::move(id)),
      settings_(checked(settings)),
      rng_(make_rng(settings_.seed)),
      game_(make_game(settings_)) {
  update_status();
  if (status_ == SessionStatus::live) ann_move();
}

const Word& GameSession::word() const {
  return std::visit([](const auto& g) -> const Word& { return g.word(); }, game_);
}

std::size_t GameSession::move_number() const { return moves().size(); }

const std::vector<GameMove>& GameSession::moves() const {
  if (const auto* e = std::get_if<EraseGame>(&game_)) return e->trace().moves;
  return std::get<NonrepGame>(game_).moves();
}

std::optional<Repetition> GameSession::repetition() const {
  if (const auto* n = std::get_if<NonrepGame>(&game_)) return n->repetition();
  return std::nullopt;
}

void GameSession::ann_move() {
  const std::size_t c = settings_.alphabet_size;
  if (auto* e = std::get_if<EraseGame>(&game_)) {
    e->play(ann_erase_move(e->word(), c, rng_));
  } else {
    auto& n = std::get<NonrepGame>(game_);
    n.play(ann_nonrep_move(n.word(), c, rng_));
  }
  update_status();
}

// Same stopping rules, checked in the same order, as the batch drivers.
void GameSession::update_status() {
  if (const auto* n = std::get_if<NonrepGame>(&game_); n && n->over()) {
    status_ = SessionStatus::ben_won;
  } else if (word().size() >= settings_.target_n) {
    status_ = SessionStatus::ann_won;
  } else if (settings_.kind == GameKind::erase && move_number() >= settings_.move_budget) {
    status_ = SessionStatus::exhausted;
  } else {
    status_ = SessionStatus::live;
  }
}

std::vector<GameMove> GameSession::ben_move(Symbol s) {
  if (status_ != SessionStatus::live) throw DomainError("the session is " + to_string(status_));
  if (s >= settings_.alphabet_size) throw DomainError("symbol outside the alphabet");
  const std::size_t before = move_number();
  std::visit([s](auto& g) { g.play(s); }, game_);
  update_status();
  if (status_ == SessionStatus::live) ann_move();
  const auto& all = moves();
  return {all.begin() + static_cast<std::ptrdiff_t>(before), all.end()};
}

json GameSession::state_json() const {
  const Word& w = word();
  return json{{"id", id_},
              {"kind", to_string(settings_.kind)},
              {"c", settings_.alphabet_size},
              {"seed", settings_.seed},
              {"target_n", settings_.target_n},
              {"move_budget", settings_.move_budget},
              {"word", w.symbols()},
              {"length", w.size()},
              {"move_number", move_number()},
              {"to_move", status_ == SessionStatus::live ? "ben" : "none"},
              {"status", to_string(status_)},
              {"repetition", repetition_json(repetition())}};
}

json GameSession::trace_json() const {
  json out{{"id", id_},
           {"kind", to_string(settings_.kind)},
           {"c", settings_.alphabet_size},
           {"seed", settings_.seed},
           {"target_n", settings_.target_n},
           {"status", to_string(status_)},
           {"moves", io::moves_to_json(moves())},
           {"final", word().symbols()}};
  std::vector<Symbol> ann;
  std::vector<Symbol> ben;
  for (const auto& m : moves()) (m.mover == Mover::ann ? ann : ben).push_back(m.symbol);
  out["ann_choices"] = ann;
  out["ben_moves"] = ben;
  if (const auto* e = std::get_if<EraseGame>(&game_)) {
    out["log"] = io::to_json(encode_erase_log(e->trace()), notation_for(settings_.alphabet_size));
  } else {
    out["repetition"] = repetition_json(repetition());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<GameSession> SessionManager::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionManager::size() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

ApiResponse SessionManager::create(const json& request) {
  SessionSettings s;
  try {
    if (!request.is_object()) return error(400, "request body must be a JSON object");
    s.kind = parse_game_kind(request.value("kind", std::string("erase")));
    s.alphabet_size = request.at("c").get<std::size_t>();
    s.seed = request.value("seed", default_seed_);
    s.target_n = request.at("target_n").get<std::size_t>();
    s.move_budget = request.value("move_budget", std::size_t{0});
    std::string id;
    {
      std::lock_guard lock(mutex_);
      id = std::to_string(next_id_++);
    }
    auto session = std::make_shared<GameSession>(id, s);
    json state = session->state_json();
    {
      std::lock_guard lock(mutex_);
      sessions_[id] = std::move(session);
    }
    return {201, json{{"id", id}, {"state", state}}};
  } catch (const json::exception& e) {
    return error(400, std::string("bad request: ") + e.what());
  } catch (const DomainError& e) {
    return error(400, e.what());
  }
}

ApiResponse SessionManager::move(const std::string& id, const json& request) {
  auto session = find(id);
  if (!session) return error(404, "unknown session " + id);
  std::unique_lock lock(session->mutex(), std::try_to_lock);
  if (!lock.owns_lock()) return error(409, "session " + id + " is busy");
  long long symbol = 0;
  if (!request.is_object() || !request.contains("symbol") || !request["symbol"].is_number_integer()) {
    return error(400, "request must carry an integer 'symbol'");
  }
  symbol = request["symbol"].get<long long>();
  if (symbol < 0 || symbol >= static_cast<long long>(session->settings().alphabet_size)) {
    return error(400, "symbol outside the alphabet");
  }
  if (session->status() != SessionStatus::live) {
    return error(400, "session is " + to_string(session->status()) + "; no move expected");
  }
  const std::size_t height = session->word().size();
  const auto appended = session->ben_move(static_cast<Symbol>(symbol));

  json moves = json::array();
  json erasures = json::array();
  std::size_t h = height;
  for (const auto& m : appended) {
    moves.push_back({{"mover", to_string(m.mover)},
                     {"symbol", m.symbol},
                     {"h", m.erased},
                     {"height", h}});
    if (m.erased > 0) erasures.push_back({{"mover", to_string(m.mover)}, {"h", m.erased}});
    h = m.length;
  }
  json state = session->state_json();
  return {200, json{{"moves", moves},
                    {"erasures", erasures},
                    {"repetition", state["repetition"]},
                    {"state", state},
                    {"status", state["status"]}}};
}

ApiResponse SessionManager::state(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "unknown session " + id);
  std::lock_guard lock(session->mutex());
  return {200, session->state_json()};
}

ApiResponse SessionManager::trace(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "unknown session " + id);
  std::lock_guard lock(session->mutex());
  return {200, session->trace_json()};
}

ApiResponse SessionManager::remove(const std::string& id) {
  std::shared_ptr<GameSession> session;
  {
    std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) return error(404, "unknown session " + id);
    session = std::move(it->second);
    sessions_.erase(it);
  }
  // Let an in-flight move finish before the session goes away.
  std::lock_guard lock(session->mutex());
  return {200, json{{"deleted", id}}};
}

}  // namespace thuelab

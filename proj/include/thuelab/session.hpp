#pragma once

// In-memory live game sessions: a human plays Ben, the engine plays Ann.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "thuelab/games.hpp"
#include "thuelab/rng.hpp"

namespace thuelab {

enum class GameKind { erase, nonrep };
enum class SessionStatus { live, ann_won, ben_won, exhausted };

std::string to_string(GameKind k);
GameKind parse_game_kind(std::string_view text);
std::string to_string(SessionStatus s);

struct SessionSettings {
  GameKind kind = GameKind::erase;
  std::size_t alphabet_size = 0;
  std::uint64_t seed = 0;
  std::size_t target_n = 0;
  std::size_t move_budget = 0;  // erase only; 0 means 100 * target_n
};

/// One game. Ann's generator is make_rng(seed), the same one the batch game
/// drivers use, so a session replays play_erase_game / play_nonrep_game.
class GameSession {
 public:
  GameSession(std::string id, const SessionSettings& settings);

  const std::string& id() const noexcept { return id_; }
  const SessionSettings& settings() const noexcept { return settings_; }
  SessionStatus status() const noexcept { return status_; }
  const Word& word() const;
  std::size_t move_number() const;
  std::optional<Repetition> repetition() const;
  const std::vector<GameMove>& moves() const;

  /// Plays Ben's symbol, then Ann's reply if the game is still live.
  /// Returns the moves appended by this call. Throws DomainError when the
  /// session is not live or the symbol is outside the alphabet.
  std::vector<GameMove> ben_move(Symbol s);

  nlohmann::json state_json() const;
  nlohmann::json trace_json() const;

  std::mutex& mutex() noexcept { return mutex_; }

 private:
  void ann_move();
  void update_status();

  std::string id_;
  SessionSettings settings_;
  Rng rng_;
  std::variant<EraseGame, NonrepGame> game_;
  SessionStatus status_ = SessionStatus::live;
  std::mutex mutex_;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// The JSON API behind the HTTP routes. Safe to call from several threads:
/// a move on a session that is already being mutated is rejected with 409.
class SessionManager {
 public:
  explicit SessionManager(std::uint64_t default_seed = 0) : default_seed_(default_seed) {}

  ApiResponse create(const nlohmann::json& request);
  ApiResponse move(const std::string& id, const nlohmann::json& request);
  ApiResponse state(const std::string& id);
  ApiResponse trace(const std::string& id);
  ApiResponse remove(const std::string& id);

  std::shared_ptr<GameSession> find(const std::string& id);
  std::size_t size();

 private:
  std::uint64_t default_seed_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<GameSession>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace thuelab

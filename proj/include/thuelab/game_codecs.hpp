#pragma once

// Lossless logs of the two games: reduced game logs for the erase game and
// typed search logs (with height reconstruction) for the search simulation.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "thuelab/games.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

/// Differences of the good moves (moves that did not create a half-1 square).
struct ReducedGameLog {
  std::vector<int> d;
  Word s;
  std::size_t m = 0;  // Ann moves M

  friend bool operator==(const ReducedGameLog&, const ReducedGameLog&) = default;
};

/// |d| <= 2M, d_j in {1, -3, -4, ...}, prefix sums >= 1, |s| = sum d.
void validate(const ReducedGameLog& log);

ReducedGameLog encode_erase_log(const GameTrace& trace);

/// Ann's symbols r_1..r_M. Throws MalformedLog or InconsistentLog.
std::vector<Symbol> decode_erase_log(const ReducedGameLog& log, const BenStrategy& ben,
                                     std::size_t alphabet_size);

/// Halved differences of the heights before Ann's steps; `types` holds the
/// segment case (1..4) for every 1-based index j with d_j <= -2.
struct TypedSearchLog {
  std::vector<int> d;
  std::map<std::size_t, int> types;
  Word s;

  std::size_t m() const noexcept { return d.size(); }
  friend bool operator==(const TypedSearchLog&, const TypedSearchLog&) = default;
};

void validate(const TypedSearchLog& log);

/// The log covers the trace up to and including Ann's last step; a trailing
/// Ben step (the one that may reach the target) is left out of `s`.
TypedSearchLog encode_search_log(const SearchTrace& trace);

struct HeightSequence {
  std::vector<std::size_t> heights;  // h_1..h_m, then h_{m+1} = |s|
  std::vector<Mover> movers;         // by parity: even height means Ann
};

/// Heights from one Ann step (at `from`) up to the next one (at `to`),
/// excluding `to`. `type` is required exactly when to <= from - 4.
std::vector<std::size_t> expand_segment(std::size_t from, std::size_t to,
                                        std::optional<int> type);

HeightSequence reconstruct_heights(const TypedSearchLog& log);

std::vector<Symbol> decode_search_log(const TypedSearchLog& log, const BenStrategy& ben,
                                      std::size_t alphabet_size);

}  // namespace thuelab

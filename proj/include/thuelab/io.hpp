#pragma once

// File formats: word files, list-system files, JSON logs and traces, CSV
// counts, JSON polynomial coefficient arrays.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "thuelab/game_codecs.hpp"
#include "thuelab/games.hpp"
#include "thuelab/list_chooser.hpp"
#include "thuelab/polynomial.hpp"
#include "thuelab/walks.hpp"
#include "thuelab/words.hpp"

namespace thuelab::io {

using nlohmann::json;

/// One word per line; blank lines are skipped.
std::vector<Word> read_words(std::istream& in);
void write_words(std::ostream& out, const std::vector<Word>& words, Notation notation);

/// One list per line, single-character symbols separated by commas.
ListSystem read_list_system(std::istream& in);
void write_list_system(std::ostream& out, const ListSystem& lists, Notation notation);

/// {"d": [...], "s": "word", "m": M}
json to_json(const Alg1Log& log, Notation notation);
Alg1Log alg1_log_from_json(const json& j);

/// {"d": [...], "s": "word", "m": M}
json to_json(const ReducedGameLog& log, Notation notation);
ReducedGameLog reduced_log_from_json(const json& j);

/// {"d": [...], "types": {"j": t}, "s": "word", "m": M}
json to_json(const TypedSearchLog& log, Notation notation);
TypedSearchLog search_log_from_json(const json& j);

/// Per-move records {mover, symbol, h, height}; height is the length before the move.
json to_json(const GameTrace& trace);
json to_json(const SearchTrace& trace);
json moves_to_json(const std::vector<GameMove>& moves);
GameTrace game_trace_from_json(const json& j);
SearchTrace search_trace_from_json(const json& j);

/// {"<word>": symbol, ..., "default": symbol}; symbols are 0-based integers.
BenParams scripted_table_from_json(const json& j);

/// m,T_m with T_m as a decimal string.
void write_counts_csv(std::ostream& out, const std::vector<BigInt>& counts);

/// Degree-ascending coefficient array of decimal strings.
json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

}  // namespace thuelab::io

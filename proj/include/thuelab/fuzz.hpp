#pragma once

// Seeded encode/decode roundtrips for the three log codecs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thuelab {

enum class CodecKind { alg1, erase, search };

std::string to_string(CodecKind k);
CodecKind parse_codec_kind(std::string_view text);

/// Default alphabet per codec: 4 (list size) for alg1, 8 for erase, 6 for search.
std::size_t default_alphabet(CodecKind k);

struct FuzzReport {
  std::size_t trials = 0;
  std::size_t ok = 0;
  std::vector<std::string> failures;  // the first few, for diagnostics

  bool all_ok() const noexcept { return ok == trials; }
};

/// Each trial draws a run from stream (seed, trial), encodes it, decodes it
/// and compares with the recorded choices. Bens rotate over the built-ins.
/// alphabet_size 0 selects the default.
FuzzReport fuzz_codec(CodecKind kind, std::size_t trials, std::uint64_t seed,
                      std::size_t alphabet_size = 0);

}  // namespace thuelab

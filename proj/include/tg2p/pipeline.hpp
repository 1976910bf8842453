#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tg2p/error.hpp"
#include "tg2p/lexicon.hpp"
#include "tg2p/prosody.hpp"

namespace tg2p {

struct Options {
  Mode mode = Mode::kAsr;
  bool variants = false;
};

enum class Source { kNative, kForeign, kAbbrev, kHeuristic };
std::string_view source_name(Source s);

struct Pronunciation {
  Pron pron;
  std::string rendered;
  std::vector<std::string> syllables;  // TTS only
  Source source = Source::kNative;
  std::vector<std::string> tags;
  std::string root;
};

struct WordResult {
  std::string surface;
  std::vector<Pronunciation> prons;
  std::optional<ErrorCode> error;
  std::string error_message;

  bool ok() const { return !error.has_value(); }
};

// One token through the whole chain. Never throws Error; failures are
// reported in the result. Native analyses come first in lexicon order, then
// stemmer candidates by rank; identical renderings are kept once.
WordResult g2p_word(const Lexicon& lexicon, std::string_view surface, const Options& options);

enum class Format { kTsv, kJson };

std::string format_tsv(const WordResult& result);
std::string format_json(const WordResult& result);

struct BatchOptions {
  Options options;
  Format format = Format::kTsv;
  unsigned jobs = 1;
};

struct BatchStats {
  std::size_t lines = 0;
  std::size_t errors = 0;
};

// One output line per input line, in input order whatever `jobs` is.
// Throws std::ios_base::failure when writing fails.
BatchStats run_batch(const Lexicon& lexicon, std::istream& in, std::ostream& out, const BatchOptions& options);

}  // namespace tg2p

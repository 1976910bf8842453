#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"
#include "tg2p/morphology.hpp"

namespace tg2p {

enum class RootClass { kAbbreviation, kForeign, kMistyped };

std::string_view root_class_name(RootClass c);

// Weights of the n-gram vote.
struct NGramWeights {
  static constexpr double kTrigram = 1.0;
  static constexpr double kTetragram = 2.0;
  static constexpr double kHarmonyViolation = 1.0;
};

struct ClassScores {
  double english = 0;
  double turkish = 0;
  double turkishized = 0;
  bool harmony_violation = false;

  double foreign() const {
    return english + turkishized + (harmony_violation ? NGramWeights::kHarmonyViolation : 0.0);
  }
};

struct Classification {
  RootClass cls = RootClass::kMistyped;
  ClassScores scores;
  const RootEntry* table_entry = nullptr;  // abbreviation/foreign table hit
};

// Per-table n-gram score: (trigram hits + 2 * tetragram hits) / gram count.
double ngram_score(const NGramTable& table, std::u32string_view root);

// Front and back vowels in the same root.
bool violates_backness_harmony(std::u32string_view root);

Classification classify_root(const Lexicon& lexicon, std::u32string_view root);

struct CandidateSplit {
  std::u32string root;  // devoiced when boundary_voicing
  std::u32string stem;  // root as written in the surface
  std::u32string suffix_surface;
  bool boundary_voicing = false;
  bool apostrophe = false;
  Classification classification;
  std::vector<RealizedSuffix> suffixes;  // empty for the zero-suffix candidate
};

// Candidate (root, suffix) splits of a word the analyzer rejected, best first.
std::vector<CandidateSplit> stem_unknown(const Lexicon& lexicon, std::u32string_view surface);

}  // namespace tg2p

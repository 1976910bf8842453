#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tg2p/morphology.hpp"
#include "tg2p/native.hpp"

namespace tg2p {

struct SyllabifiedPron {
  std::vector<Phones> syllables;
  std::optional<std::size_t> stress_syllable;
};

// Splits with the first-vowel loop; trailing consonants join the last
// syllable. Throws Error(kNoVowel).
SyllabifiedPron syllabify(const Pron& pron);

// Geographical names: one or two syllables stress the first; longer ones the
// penult if it is closed, else the antepenult.
std::size_t geographical_stress(const Phones& root_phones);

// Stressed vowel ordinal of `pron`. Null analysis means an ordinary word with
// no known morph boundaries (final stress). Throws Error(kNoVowel).
std::size_t assign_stress(const AlignedPron& pron, const MorphAnalysis* analysis);

enum class Mode { kAsr, kTts };

// ASR: "k o j u n". TTS: syllables joined by " - " with "+" glued to the
// stressed vowel, e.g. "o - k +u - m a".
std::string render(const Pron& pron, Mode mode);

}  // namespace tg2p

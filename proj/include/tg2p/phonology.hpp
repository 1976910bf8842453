#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tg2p/phoneme.hpp"

namespace tg2p {

// --- graphemes -------------------------------------------------------------

// The 29 letters of the Turkish alphabet (lowercase).
inline constexpr std::u32string_view kTurkishAlphabet = U"abcçdefgğhıijklmnoöprsştuüvyz";
inline constexpr std::u32string_view kVowelLetters = U"aeıioöuü";

bool is_turkish_letter(char32_t c);
bool is_vowel_letter(char32_t c);
// Voiceless letters p ç t k f s ş h.
bool is_voiceless_letter(char32_t c);

struct VowelQuality {
  bool front = false;
  bool rounded = false;
  bool high = false;
};

// Requires is_vowel_letter(c).
VowelQuality vowel_quality(char32_t c);
// Inverse of vowel_quality.
char32_t vowel_letter(VowelQuality q);

// Context-free default phoneme for a lowercase Turkish letter.
// k, l, g stay k, l, g (see apply_allophones); ğ maps to the placeholder G.
// Throws Error(kUnknownGrapheme).
Phoneme base_map(char32_t grapheme);
Phones base_map(std::u32string_view graphemes);

// Start offsets of each syllable, using the same split loop as prosody's
// syllabifier. A vowel-less sequence is a single syllable starting at 0.
std::vector<std::size_t> syllable_starts(std::span<const Phoneme> phones);

// Chooses palatal c/gj/l in syllables holding a front vowel, velar k/g and
// dark 5 otherwise. Length-preserving and idempotent.
Phones apply_allophones(std::span<const Phoneme> phones, std::span<const std::size_t> syllable_starts);
Phones apply_allophones(std::span<const Phoneme> phones);

// --- metaphonemes ------------------------------------------------------------

enum class MetaGrapheme { kA, kH, kD };

// What the left context tells the harmony/assimilation rules.
struct HarmonyContext {
  std::optional<VowelQuality> last_vowel;
  bool empty = true;
  bool ends_in_vowel = false;
  bool ends_voiceless = false;
};

HarmonyContext harmony_context(std::u32string_view graphemes);
HarmonyContext harmony_context(std::span<const Phoneme> phones);

// A -> a/e, H -> ı/i/u/ü, D -> d/t. Throws Error(kMissingHarmonyContext).
char32_t resolve_meta(MetaGrapheme meta, const HarmonyContext& left);

// kral -> kıral: an H-harmonic vowel (keyed on the first vowel) breaks an
// initial two-consonant cluster. Other roots are returned unchanged.
std::u32string epenthesize(std::u32string_view root);

// --- normalization -------------------------------------------------------------

char32_t turkish_lower(char32_t c);
char32_t turkish_upper(char32_t c);

struct NormalizedToken {
  std::u32string text;
  bool uppercase_hint = false;
  bool has_apostrophe = false;

  std::string utf8() const;
};

// Turkish case folding (I -> ı, İ -> i), circumflex folding (â -> a),
// edge punctuation stripping. Throws Error(kEmptyToken).
NormalizedToken normalize(std::string_view surface);

}  // namespace tg2p

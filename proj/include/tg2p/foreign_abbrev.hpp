#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"

namespace tg2p {

// q -> k, w -> v, x -> ks; other letters unchanged.
std::u32string transliterate(std::u32string_view root);

// Letter-by-letter Turkish reading with allophones (no epenthesis).
Phones turkish_reading(std::u32string_view root);

// Ordered longest-match rewrite over english_rewrites.tsv; letters no rule
// covers fall back to the Turkish reading. May be empty (all letters silent).
Phones english_reading(const Lexicon& lexicon, std::u32string_view root);

// Listed prons, or the Turkish and English-ish readings (Turkish only when the
// root looks already Turkishized). Throws Error(kUnknownGrapheme).
std::vector<Pron> phoneticize_foreign(const Lexicon& lexicon, const RootEntry* entry, std::u32string_view root);

// "C"/"V" per letter; vowels are the eight Turkish vowel letters.
std::string cv_pattern(std::u32string_view root);

// Concatenated letter names. Throws Error(kUnknownGrapheme).
Pron spell_out(std::u32string_view root, const LetterNameTable& names);

// Abbreviation read as a word: vowel pairs of equal height and backness merge
// into a long vowel, other pairs are bridged by j.
Phones abbrev_word_reading(std::u32string_view root);

std::vector<Pron> phoneticize_abbrev(const Lexicon& lexicon, const RootEntry* entry, std::u32string_view root,
                                     bool foreign_hint);

}  // namespace tg2p

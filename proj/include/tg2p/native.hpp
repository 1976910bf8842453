#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"
#include "tg2p/morphology.hpp"

namespace tg2p {

// Which morph a phone came from: -1 for the root, otherwise the index of the
// suffix in MorphAnalysis::suffixes.
struct PhoneOrigin {
  int morph = -1;
  bool buffer = false;  // buffer letter ahead of a suffix core

  bool operator==(const PhoneOrigin&) const = default;
};

// Phones of a whole word with per-phone morph origins. Kept in step by every
// later stage so that tag-gated rules and stress can find morph boundaries.
struct AlignedPron {
  Phones phones;
  std::vector<PhoneOrigin> origin;

  static AlignedPron root_only(const Phones& phones);
  std::size_t root_size() const;
  Pron to_pron() const { return Pron(phones); }
  bool operator==(const AlignedPron&) const = default;
};

// Listed prons of `entry`, or the rule reading (epenthesis, default mapping,
// allophones) of `root` when the entry is null or has none.
// Throws Error(kUnknownGrapheme).
std::vector<Pron> phoneticize_root(const RootEntry* entry, std::u32string_view root);

// Suffix phones after `root_phones`, with k/g/l allophones chosen on the
// syllables of the joined word (zaman + la -> 5 a).
Phones phoneticize_suffixes(std::u32string_view suffix_surface, std::span<const Phoneme> root_phones);

// Root pron + suffix phones of `analysis`, with vowel lengthening, narrowing
// and boundary voicing applied, then allophones of the suffix part chosen on
// the joined word's syllables.
AlignedPron combine(const Pron& root_pron, const MorphAnalysis& analysis);

}  // namespace tg2p

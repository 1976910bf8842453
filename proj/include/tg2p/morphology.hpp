#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"

namespace tg2p {

// Maximum number of suffix templates in one chain.
inline constexpr std::size_t kMaxChainDepth = 6;

struct RealizedSuffix {
  const SuffixTemplate* tmpl = nullptr;
  std::u32string surface;
  std::size_t buffer_prefix = 0;  // leading buffer letters ([y], [s], [n], [H], [A])
};

struct MorphAnalysis {
  const RootEntry* entry = nullptr;  // null for heuristic candidates not in the lexicon
  std::u32string root;               // lexical root (kitap)
  std::u32string stem;               // root as it surfaces (kitab)
  std::u32string suffix_surface;
  std::vector<std::string> tags;
  Genre genre = Genre::kOrdinary;
  std::vector<RealizedSuffix> suffixes;
  bool boundary_voicing = false;  // root-final p/ç/t/k written voiced
  bool narrowed = false;          // de -> di before y
  bool apostrophe = false;        // suffixes were split off at an apostrophe
};

// Harmony context of a stem; vowel-less stems (abbreviations) borrow the
// vowel of the Turkish name of their last letter.
HarmonyContext stem_context(const Lexicon& lexicon, std::u32string_view stem);

// Surfaces one template after `left` (the stem plus earlier suffixes).
RealizedSuffix realize_suffix(const Lexicon& lexicon, const SuffixTemplate& tmpl, std::u32string_view left);

// Left-to-right expansion of a chain after `root`, including the final-k
// softening of templates such as -AcAk before a vowel.
// Throws Error(kMissingHarmonyContext).
std::vector<RealizedSuffix> realize_suffix_chain(const Lexicon& lexicon,
                                                 std::span<const SuffixTemplate* const> templates,
                                                 std::u32string_view root);
std::u32string realize_suffix_chain_surface(const Lexicon& lexicon,
                                            std::span<const SuffixTemplate* const> templates,
                                            std::u32string_view root);

// Written form of a root before a vowel-initial suffix (kitap -> kitab,
// renk -> reng). Roots without a voiceless final are returned unchanged.
std::u32string voiced_stem(std::u32string_view root);

// Every (root, suffix chain) split of a normalized, apostrophe-free word.
// Empty result means the word is unknown to the lexicon.
std::vector<MorphAnalysis> analyze(const Lexicon& lexicon, std::u32string_view surface);

// Analyses of a word split at an apostrophe (Ankara'da). `suffix` may be
// empty. When no template chain covers the suffix, one analysis with an
// opaque suffix is returned per root entry.
std::vector<MorphAnalysis> analyze_split(const Lexicon& lexicon, std::u32string_view root,
                                         std::u32string_view suffix);

// Chains of templates (characteristic or all) that spell `rest` after `stem`
// starting from the noun state. Used by the heuristic stemmer.
std::vector<std::vector<RealizedSuffix>> match_chains(const Lexicon& lexicon, std::u32string_view stem,
                                                      std::u32string_view rest, bool characteristic_only,
                                                      std::size_t max_depth);

}  // namespace tg2p

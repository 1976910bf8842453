#pragma once

#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"
#include "tg2p/morphology.hpp"
#include "tg2p/native.hpp"

namespace tg2p {

// Replaces every G by vowel length, a j glide or nothing, first matching rule
// wins. Rules with two realizations fork the result. Output never contains G.
// Throws Error(kUnresolvedSoftG) if no rule applies.
std::vector<AlignedPron> resolve_soft_g(const AlignedPron& pron);
std::vector<Pron> resolve_soft_g(const Pron& pron);

// Fast-speech variants: n-l assimilation, r-drop in the progressive -yor,
// iy -> i: contraction and listed short forms from variants.tsv. The input is
// always the first element; duplicates are removed. `analysis` may be null.
std::vector<AlignedPron> generate_variants(const Lexicon& lexicon, const AlignedPron& pron,
                                           const MorphAnalysis* analysis);

}  // namespace tg2p

#include "tg2p/prosody.hpp"

#include "tg2p/error.hpp"

namespace tg2p {

namespace {

std::size_t last_vowel_before(const Phones& phones, std::size_t end) {
  std::size_t ordinal = 0;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < end && i < phones.size(); ++i) {
    if (!phones[i].is_vowel()) continue;
    found = ordinal;
    ++ordinal;
  }
  return found.value_or(0);
}

}  // namespace

SyllabifiedPron syllabify(const Pron& pron) {
  const Phones& ph = pron.phones();
  if (count_vowels(ph) == 0) throw Error(ErrorCode::kNoVowel, "cannot syllabify '" + pron.str() + "'");
  const auto starts = syllable_starts(ph);
  SyllabifiedPron out;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t end = s + 1 < starts.size() ? starts[s + 1] : ph.size();
    out.syllables.emplace_back(ph.begin() + static_cast<std::ptrdiff_t>(starts[s]),
                               ph.begin() + static_cast<std::ptrdiff_t>(end));
  }
  out.stress_syllable = pron.stress();
  return out;
}

std::size_t geographical_stress(const Phones& root_phones) {
  const SyllabifiedPron syl = syllabify(Pron(root_phones));
  const std::size_t n = syl.syllables.size();
  if (n <= 2) return 0;
  const bool penult_closed = !syl.syllables[n - 2].back().is_vowel();
  return penult_closed ? n - 2 : n - 3;
}

std::size_t assign_stress(const AlignedPron& pron, const MorphAnalysis* analysis) {
  const std::size_t vowels = count_vowels(pron.phones);
  if (vowels == 0) throw Error(ErrorCode::kNoVowel, "no vowel to stress in '" + to_string(pron.phones) + "'");
  const std::size_t last = vowels - 1;
  if (analysis == nullptr) return last;

  if (const RootEntry* e = analysis->entry) {
    if (e->fixed_stress) return std::min(*e->fixed_stress, last);
    if (e->compound_stress) return std::min(*e->compound_stress, last);
    if (analysis->genre == Genre::kGeographical) {
      const Phones root(pron.phones.begin(), pron.phones.begin() + static_cast<std::ptrdiff_t>(pron.root_size()));
      if (count_vowels(root) > 0) return std::min(geographical_stress(root), last);
    }
  }

  for (std::size_t k = 0; k < analysis->suffixes.size(); ++k) {
    const SuffixTemplate* t = analysis->suffixes[k].tmpl;
    if (t == nullptr || !t->stress_shifting) continue;
    // First phone of the suffix core; leading buffer letters sit to its left.
    std::optional<std::size_t> core;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < pron.origin.size(); ++i) {
      if (pron.origin[i].morph != static_cast<int>(k)) continue;
      if (!first) first = i;
      if (!pron.origin[i].buffer) {
        core = i;
        break;
      }
    }
    if (!core) core = first;
    if (!core) continue;  // suffix lost all its phones
    return last_vowel_before(pron.phones, *core);
  }
  return last;
}

std::string render(const Pron& pron, Mode mode) {
  if (mode == Mode::kAsr) return pron.str();
  const SyllabifiedPron syl = syllabify(pron);
  std::string out;
  std::size_t vowel = 0;
  for (std::size_t s = 0; s < syl.syllables.size(); ++s) {
    if (s > 0) out += " - ";
    bool first = true;
    for (Phoneme p : syl.syllables[s]) {
      if (!first) out += ' ';
      first = false;
      if (p.is_vowel()) {
        if (pron.stress() == vowel) out += '+';
        ++vowel;
      }
      out += p.symbol();
    }
  }
  return out;
}

}  // namespace tg2p

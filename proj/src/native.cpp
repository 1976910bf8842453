#include "tg2p/native.hpp"

namespace tg2p {

namespace {

// Re-chooses allophones at the marked positions using the joined word's
// syllables; other positions keep whatever the lexicon listed.
void reallophone(Phones& phones, const std::vector<bool>& mask) {
  const Phones chosen = apply_allophones(phones);
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (mask[i]) phones[i] = chosen[i];
  }
}

std::optional<Phoneme> voiced_final(Phoneme p, bool soft_k) {
  switch (p.sym()) {
    case Sym::p: return Phoneme(Sym::b);
    case Sym::t: return Phoneme(Sym::d);
    case Sym::tS: return Phoneme(Sym::dZ);
    case Sym::k:
    case Sym::c: return Phoneme(soft_k ? Sym::G : Sym::g);
    default: return std::nullopt;
  }
}

bool native_route(Genre g) { return g != Genre::kAbbreviation && g != Genre::kForeign; }

}  // namespace

AlignedPron AlignedPron::root_only(const Phones& phones) {
  AlignedPron out;
  out.phones = phones;
  out.origin.assign(phones.size(), PhoneOrigin{});
  return out;
}

std::size_t AlignedPron::root_size() const {
  std::size_t n = 0;
  while (n < origin.size() && origin[n].morph < 0) ++n;
  return n;
}

std::vector<Pron> phoneticize_root(const RootEntry* entry, std::u32string_view root) {
  if (entry != nullptr && !entry->prons.empty()) return entry->prons;
  const std::u32string letters = epenthesize(entry != nullptr ? std::u32string_view(entry->letters) : root);
  return {Pron(apply_allophones(base_map(letters)))};
}

Phones phoneticize_suffixes(std::u32string_view suffix_surface, std::span<const Phoneme> root_phones) {
  Phones joined(root_phones.begin(), root_phones.end());
  const Phones suffix = base_map(suffix_surface);
  joined.insert(joined.end(), suffix.begin(), suffix.end());
  const Phones chosen = apply_allophones(joined);
  return Phones(chosen.begin() + static_cast<std::ptrdiff_t>(root_phones.size()), chosen.end());
}

AlignedPron combine(const Pron& root_pron, const MorphAnalysis& analysis) {
  AlignedPron out = AlignedPron::root_only(root_pron.phones());
  std::vector<bool> mask(out.phones.size(), false);

  for (std::size_t k = 0; k < analysis.suffixes.size(); ++k) {
    const RealizedSuffix& s = analysis.suffixes[k];
    const Phones phones = base_map(s.surface);
    for (std::size_t i = 0; i < phones.size(); ++i) {
      out.phones.push_back(phones[i]);
      out.origin.push_back(PhoneOrigin{static_cast<int>(k), i < s.buffer_prefix});
      mask.push_back(true);
    }
  }

  const std::size_t root_len = root_pron.phones().size();
  const bool vowel_next = out.phones.size() > root_len && out.phones[root_len].is_vowel();
  Phones& ph = out.phones;

  // Last vowel of the root.
  std::optional<std::size_t> last_vowel;
  for (std::size_t i = root_len; i-- > 0;) {
    if (ph[i].is_vowel()) {
      last_vowel = i;
      break;
    }
  }

  const RootEntry* entry = analysis.entry;
  if (entry != nullptr && entry->lengthens_final_vowel && vowel_next && last_vowel) {
    ph[*last_vowel] = ph[*last_vowel].lengthened();
  }
  if (analysis.narrowed && last_vowel && ph[*last_vowel].sym() == Sym::e) ph[*last_vowel] = Sym::i;

  if (vowel_next && root_len > 0) {
    Phoneme& fin = ph[root_len - 1];
    std::optional<Phoneme> voiced;
    if (analysis.boundary_voicing) {
      voiced = voiced_final(fin, analysis.stem.empty() || analysis.stem.back() != U'g');
    } else if (analysis.apostrophe && native_route(analysis.genre) &&
               !(entry != nullptr && entry->no_final_voicing)) {
      voiced = voiced_final(fin, true);
    }
    if (voiced) {
      fin = *voiced;
      mask[root_len - 1] = true;
    }
  }

  reallophone(ph, mask);
  return out;
}

}  // namespace tg2p

#include "tg2p/stemmer.hpp"

#include <algorithm>
#include <optional>

#include "tg2p/utf8.hpp"

namespace tg2p {

namespace {

constexpr std::size_t kStemChainDepth = 3;

std::optional<char32_t> devoice(char32_t c) {
  switch (c) {
    case U'b': return U'p';
    case U'c': return U'ç';
    case U'd': return U't';
    case U'g':
    case U'ğ': return U'k';
    default: return std::nullopt;
  }
}

bool has_genre(const Lexicon& lex, std::u32string_view root, Genre g) {
  return !lookup_root(lex, root, g).empty();
}

}  // namespace

std::string_view root_class_name(RootClass c) {
  switch (c) {
    case RootClass::kAbbreviation: return "abbreviation";
    case RootClass::kForeign: return "foreign";
    case RootClass::kMistyped: return "mistyped";
  }
  return "?";
}

double ngram_score(const NGramTable& table, std::u32string_view root) {
  double hits = 0;
  std::size_t grams = 0;
  for (std::size_t len : {3u, 4u}) {
    if (root.size() < len) continue;
    const double weight = len == 3 ? NGramWeights::kTrigram : NGramWeights::kTetragram;
    for (std::size_t i = 0; i + len <= root.size(); ++i) {
      ++grams;
      if (table.grams.contains(utf8::encode(root.substr(i, len)))) hits += weight;
    }
  }
  return grams == 0 ? 0.0 : hits / static_cast<double>(grams);
}

bool violates_backness_harmony(std::u32string_view root) {
  bool front = false;
  bool back = false;
  for (char32_t c : root) {
    if (!is_vowel_letter(c)) continue;
    (vowel_quality(c).front ? front : back) = true;
  }
  return front && back;
}

Classification classify_root(const Lexicon& lexicon, std::u32string_view root) {
  Classification out;
  if (auto hits = lookup_root(lexicon, root, Genre::kAbbreviation); !hits.empty()) {
    out.cls = RootClass::kAbbreviation;
    out.table_entry = hits.front();
    return out;
  }
  if (auto hits = lookup_root(lexicon, root, Genre::kForeign); !hits.empty()) {
    out.cls = RootClass::kForeign;
    out.table_entry = hits.front();
    return out;
  }
  if (!lexicon.find(root).empty()) {
    out.cls = RootClass::kMistyped;
    return out;
  }
  if (root.size() <= 3) {
    out.cls = RootClass::kAbbreviation;
    return out;
  }
  out.scores.english = ngram_score(lexicon.ngrams(NGramClass::kEnglish), root);
  out.scores.turkish = ngram_score(lexicon.ngrams(NGramClass::kTurkish), root);
  out.scores.turkishized = ngram_score(lexicon.ngrams(NGramClass::kTurkishizedEnglish), root);
  out.scores.harmony_violation = violates_backness_harmony(root);
  out.cls = out.scores.foreign() > out.scores.turkish ? RootClass::kForeign : RootClass::kMistyped;
  return out;
}

std::vector<CandidateSplit> stem_unknown(const Lexicon& lexicon, std::u32string_view surface) {
  std::vector<CandidateSplit> out;

  if (auto apo = surface.find(U'\''); apo != std::u32string_view::npos) {
    CandidateSplit c;
    c.root = surface.substr(0, apo);
    c.stem = c.root;
    c.suffix_surface = surface.substr(apo + 1);
    c.apostrophe = true;
    std::erase(c.suffix_surface, U'\'');
    if (!c.suffix_surface.empty()) {
      auto chains = match_chains(lexicon, c.root, c.suffix_surface, false, kMaxChainDepth);
      if (!chains.empty()) {
        c.suffixes = chains.front();
      } else {
        RealizedSuffix opaque;
        opaque.surface = c.suffix_surface;
        c.suffixes.push_back(opaque);
      }
    }
    if (!c.root.empty()) {
      c.classification = classify_root(lexicon, c.root);
      out.push_back(std::move(c));
    }
    return out;
  }

  for (std::size_t i = surface.size() - 1; i >= 1; --i) {
    const std::u32string_view stem = surface.substr(0, i);
    const std::u32string_view rest = surface.substr(i);
    auto chains = match_chains(lexicon, stem, rest, true, kStemChainDepth);
    if (chains.empty()) continue;

    CandidateSplit c;
    c.stem = stem;
    c.suffix_surface = rest;
    c.suffixes = chains.front();

    // V + {b c d g ğ} + V at the boundary hints at a voiced root-final consonant.
    if (stem.size() >= 2 && is_vowel_letter(stem[stem.size() - 2]) && is_vowel_letter(rest.front())) {
      if (auto d = devoice(stem.back())) {
        CandidateSplit v = c;
        v.root = std::u32string(stem.substr(0, stem.size() - 1)) + *d;
        v.boundary_voicing = true;
        out.push_back(std::move(v));
      }
    }
    c.root = stem;
    out.push_back(std::move(c));
  }

  CandidateSplit whole;
  whole.root = surface;
  whole.stem = surface;
  out.push_back(std::move(whole));

  for (auto& c : out) c.classification = classify_root(lexicon, c.root);

  auto table_hit = [&](const CandidateSplit& c) {
    return has_genre(lexicon, c.root, Genre::kAbbreviation) || has_genre(lexicon, c.root, Genre::kForeign);
  };
  std::stable_sort(out.begin(), out.end(), [&](const CandidateSplit& a, const CandidateSplit& b) {
    const bool ta = table_hit(a);
    const bool tb = table_hit(b);
    if (ta != tb) return ta;
    if (a.suffix_surface.size() != b.suffix_surface.size()) return a.suffix_surface.size() > b.suffix_surface.size();
    return a.boundary_voicing && !b.boundary_voicing;
  });
  return out;
}

}  // namespace tg2p

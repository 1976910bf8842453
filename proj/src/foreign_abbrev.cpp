#include "tg2p/foreign_abbrev.hpp"

#include <algorithm>

#include "tg2p/error.hpp"
#include "tg2p/stemmer.hpp"
#include "tg2p/utf8.hpp"

namespace tg2p {

namespace {

void push_unique(std::vector<Pron>& out, Pron p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

bool rule_matches(const EnglishRewrite& r, std::u32string_view text, std::size_t pos) {
  if (text.compare(pos, r.pattern.size(), r.pattern) != 0) return false;
  const std::size_t end = pos + r.pattern.size();
  if (r.at_start && pos != 0) return false;
  if (r.at_end && end != text.size()) return false;
  if (!r.right_context.empty()) {
    if (end >= text.size() || r.right_context.find(text[end]) == std::u32string::npos) return false;
  }
  return true;
}

}  // namespace

std::u32string transliterate(std::u32string_view root) {
  std::u32string out;
  out.reserve(root.size());
  for (char32_t c : root) {
    switch (c) {
      case U'q': out.push_back(U'k'); break;
      case U'w': out.push_back(U'v'); break;
      case U'x': out += U"ks"; break;
      default: out.push_back(c); break;
    }
  }
  return out;
}

Phones turkish_reading(std::u32string_view root) { return apply_allophones(base_map(transliterate(root))); }

Phones english_reading(const Lexicon& lexicon, std::u32string_view root) {
  const auto& rules = lexicon.english_rewrites();
  Phones out;
  std::size_t pos = 0;
  while (pos < root.size()) {
    const EnglishRewrite* best = nullptr;
    for (const auto& r : rules) {
      if (r.pattern.empty() || !rule_matches(r, root, pos)) continue;
      if (best == nullptr || r.pattern.size() > best->pattern.size()) best = &r;
    }
    if (best != nullptr) {
      out.insert(out.end(), best->phones.begin(), best->phones.end());
      pos += best->pattern.size();
    } else {
      const Phones p = base_map(transliterate(root.substr(pos, 1)));
      out.insert(out.end(), p.begin(), p.end());
      ++pos;
    }
  }
  return apply_allophones(out);
}

std::vector<Pron> phoneticize_foreign(const Lexicon& lexicon, const RootEntry* entry, std::u32string_view root) {
  if (entry != nullptr && !entry->prons.empty()) return entry->prons;
  std::vector<Pron> out;
  out.emplace_back(turkish_reading(root));

  const bool turkishized = ngram_score(lexicon.ngrams(NGramClass::kEnglish), root) == 0.0 &&
                           ngram_score(lexicon.ngrams(NGramClass::kTurkishizedEnglish), root) > 0.0;
  if (!turkishized) {
    Phones en = english_reading(lexicon, root);
    if (!en.empty()) push_unique(out, Pron(std::move(en)));
  }
  return out;
}

std::string cv_pattern(std::u32string_view root) {
  std::string out;
  out.reserve(root.size());
  for (char32_t c : root) out.push_back(is_vowel_letter(c) ? 'V' : 'C');
  return out;
}

Pron spell_out(std::u32string_view root, const LetterNameTable& names) {
  Phones out;
  for (char32_t c : root) {
    auto it = names.names.find(c);
    if (it == names.names.end()) {
      throw Error(ErrorCode::kUnknownGrapheme, "no letter name for '" + utf8::encode(c) + "'");
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return Pron(std::move(out));
}

Phones abbrev_word_reading(std::u32string_view root) {
  const Phones base = base_map(transliterate(root));
  Phones out;
  for (Phoneme p : base) {
    if (!out.empty() && out.back().is_vowel() && p.is_vowel()) {
      Phoneme& prev = out.back();
      if (prev.high() == p.high() && prev.front() == p.front()) {
        prev = prev.lengthened();
      } else {
        out.push_back(Sym::j);
      }
    }
    out.push_back(p);
  }
  return apply_allophones(out);
}

std::vector<Pron> phoneticize_abbrev(const Lexicon& lexicon, const RootEntry* entry, std::u32string_view root,
                                     bool foreign_hint) {
  if (entry != nullptr && !entry->prons.empty()) return entry->prons;
  if (foreign_hint) return {spell_out(root, lexicon.letter_names(Register::kEnglish))};

  const auto& turkish = lexicon.letter_names(Register::kTurkish);
  const std::string pattern = cv_pattern(root);
  if (pattern.find('V') == std::string::npos || pattern.size() <= 2 || pattern == "CCV") {
    return {spell_out(root, turkish)};
  }
  std::vector<Pron> out;
  out.emplace_back(abbrev_word_reading(root));
  if (pattern == "VCC" || pattern == "VVC") push_unique(out, spell_out(root, turkish));
  return out;
}

}  // namespace tg2p

#pragma once

// Helpers shared by the unit and acceptance tests.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tg2p/lexicon.hpp"
#include "tg2p/morphology.hpp"
#include "tg2p/phonology.hpp"

namespace tg2p::testing {

inline const Lexicon& bundled_lexicon() {
  static const auto lex = load_lexicon(default_lexicon_dir());
  return *lex;
}

// Template by meta form and tag; the analyzer-visible one when both exist.
inline const SuffixTemplate& tmpl(const Lexicon& lex, std::string_view meta, std::string_view tag) {
  for (const auto& t : lex.suffixes()) {
    if (t.meta_form == meta && t.tag == tag && !t.stem_only) return t;
  }
  throw std::logic_error("no template " + std::string(meta) + " " + std::string(tag));
}

struct Chain {
  std::string name;
  std::vector<const SuffixTemplate*> templates;
  bool verbal = false;
};

// Twenty morphotactically valid chains, 14 nominal and 6 verbal.
inline std::vector<Chain> twenty_chains(const Lexicon& lex) {
  auto t = [&](std::string_view m, std::string_view g) { return &tmpl(lex, m, g); };
  return {
      {"pl", {t("lAr", "<pl>")}},
      {"loc", {t("DA", "<loc>")}},
      {"abl", {t("DAn", "<abl>")}},
      {"dat", {t("[y]A", "<dat>")}},
      {"acc", {t("[y]H", "<acc>")}},
      {"gen", {t("[n]Hn", "<gen>")}},
      {"ins", {t("[y]lA", "<ins>")}},
      {"p1s", {t("[H]m", "<p1s>")}},
      {"p3s", {t("[s]H", "<p3s>")}},
      {"pl+p1s+abl", {t("lAr", "<pl>"), t("[H]m", "<p1s>"), t("DAn", "<abl>")}},
      {"p3s+loc", {t("[s]H", "<p3s>"), t("nDA", "<loc>")}},
      {"loc+ki", {t("DA", "<loc>"), t("ki", "<ki>")}},
      {"ness+acc", {t("lHk", "<ness>"), t("[y]H", "<acc>")}},
      {"cop", {t("DHr", "<cop><3s>")}},
      {"prog", {t("[H]yor", "<prog>")}, true},
      {"prog+1s", {t("[H]yor", "<prog>"), t("[y]Hm", "<1s>")}, true},
      {"fut+1s", {t("[y]AcAk", "<fut>"), t("[y]Hm", "<1s>")}, true},
      {"past+1p", {t("DH", "<past>"), t("k", "<1p>")}, true},
      {"inf", {t("mAk", "<inf>")}, true},
      {"neg+past", {t("mA", "<neg>"), t("DH", "<past>")}, true},
  };
}

// Root as written in front of `suffixes`: voiced when the root takes final
// voicing and the suffixes start with a vowel.
inline std::u32string written_stem(const RootEntry& e, std::u32string_view suffixes) {
  const bool vowel_next = !suffixes.empty() && is_vowel_letter(suffixes.front());
  const char32_t last = e.letters.empty() ? 0 : e.letters.back();
  const bool voiceless_final = last == U'p' || last == U'ç' || last == U't' || last == U'k';
  if (vowel_next && voiceless_final && !e.no_final_voicing && e.letters.size() >= 2 &&
      !e.genres.contains(Genre::kAbbreviation)) {
    return voiced_stem(e.letters);
  }
  return e.letters;
}

}  // namespace tg2p::testing

#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "tg2p/error.hpp"
#include "tg2p/native.hpp"
#include "tg2p/postphonology.hpp"
#include "tg2p/prosody.hpp"

using namespace tg2p;
using tg2p::testing::bundled_lexicon;

namespace {

std::string syllables(std::string_view pron) {
  std::string out;
  for (const Phones& s : syllabify(Pron(parse_phones(pron))).syllables) {
    if (!out.empty()) out += " / ";
    out += to_string(s);
  }
  return out;
}

// Rendered TTS forms of every analysis of `word` (apostrophe-free).
std::set<std::string> tts(std::u32string_view word) {
  std::set<std::string> out;
  for (const MorphAnalysis& a : analyze(bundled_lexicon(), word)) {
    for (const Pron& rp : phoneticize_root(a.entry, a.root)) {
      for (const AlignedPron& p : resolve_soft_g(combine(rp, a))) {
        out.insert(render(p.to_pron().with_stress(assign_stress(p, &a)), Mode::kTts));
      }
    }
  }
  return out;
}

using S = std::set<std::string>;

}  // namespace

TEST_CASE("syllable splits") {
  CHECK(syllables("a r a b a") == "a / r a / b a");
  CHECK(syllables("e l e k t r o n") == "e / l e k / t r o n");
  CHECK(syllables("o") == "o");
  CHECK(syllables("t r a m v a j") == "t r a m / v a j");
  CHECK(syllables("i s t a n b u 5") == "i s / t a n / b u 5");
  CHECK(syllables("a: i") == "a: / i");
  CHECK_THROWS_AS(syllabify(Pron(parse_phones("s t"))), Error);
}

TEST_CASE("geographical stress") {
  CHECK(geographical_stress(parse_phones("a n k a r a")) == 0);
  CHECK(geographical_stress(parse_phones("m u d a n j a")) == 1);
  CHECK(geographical_stress(parse_phones("a j d 1 n")) == 0);
  CHECK(geographical_stress(parse_phones("b u r s a")) == 0);
  CHECK(geographical_stress(parse_phones("i z m i r")) == 0);
}

TEST_CASE("stress by genre and suffix") {
  CHECK(tts(U"ankara") == S{"+a n - k a - r a"});
  CHECK(tts(U"ankarada") == S{"+a n - k a - r a - d a"});
  CHECK(tts(U"mudanya") == S{"m u - d +a n - j a"});
  CHECK(tts(U"mudanyadan") == S{"m u - d +a n - j a - d a n"});
  CHECK(tts(U"aydın").contains("a j - d +1 n"));
  CHECK(tts(U"aydın").contains("+a j - d 1 n"));
  CHECK(tts(U"koyun") == S{"k o - j +u n", "k +o - j u n"});
  CHECK(tts(U"koyundan").contains("k o - j u n - d +a n"));
  CHECK(tts(U"kısa") == S{"k 1 - s +a"});
  CHECK(tts(U"kısadan") == S{"k 1 - s a - d +a n"});
  CHECK(tts(U"kısadır") == S{"k 1 - s a - d +1 r"});
  CHECK(tts(U"gidiyorken") == S{"gj i - d +i - j o r - c e n"});
  CHECK(tts(U"papatya") == S{"p a - p +a t - j a"});
  CHECK(tts(U"papatyadan") == S{"p a - p +a t - j a - d a n"});
  CHECK(tts(U"bugün") == S{"b +u - gj y n"});
  CHECK(tts(U"bugüne") == S{"b +u - gj y - n e"});
  CHECK(tts(U"evdeki") == S{"e v - d +e - c i"});
}

TEST_CASE("stress without an analysis is final") {
  CHECK(assign_stress(AlignedPron::root_only(parse_phones("o k u m a")), nullptr) == 2);
  CHECK_THROWS_AS(assign_stress(AlignedPron::root_only(parse_phones("s t")), nullptr), Error);
}

TEST_CASE("render") {
  const Pron okuma(parse_phones("o k u m a"));
  CHECK(render(okuma.with_stress(1), Mode::kTts) == "o - k +u - m a");
  CHECK(render(okuma.with_stress(2), Mode::kTts) == "o - k u - m +a");
  CHECK(render(okuma, Mode::kAsr) == "o k u m a");
  CHECK(render(Pron(parse_phones("k o j u n"), 1), Mode::kAsr) == "k o j u n");
}

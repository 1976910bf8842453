#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support.hpp"
#include "tg2p/stemmer.hpp"
#include "tg2p/utf8.hpp"

using namespace tg2p;
using tg2p::testing::bundled_lexicon;

namespace {

// Straight count of the vote, independent of the library's loop.
double oracle_score(const std::vector<std::string>& grams, const std::string& word) {
  const std::u32string w = utf8::decode(word);
  double hits = 0;
  std::size_t total = 0;
  for (std::size_t n : {3u, 4u}) {
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      ++total;
      const std::string g = utf8::encode(w.substr(i, n));
      if (std::find(grams.begin(), grams.end(), g) != grams.end()) hits += n == 3 ? 1.0 : 2.0;
    }
  }
  return total == 0 ? 0.0 : hits / static_cast<double>(total);
}

}  // namespace

TEST_CASE("stemming of reflected foreign words") {
  const Lexicon& lex = bundled_lexicon();
  const auto face = stem_unknown(lex, U"facebuğumdan");
  REQUIRE(!face.empty());
  CHECK(face[0].root == U"facebuk");
  CHECK(face[0].boundary_voicing);
  CHECK(face[0].classification.cls == RootClass::kForeign);

  const auto feys = stem_unknown(lex, U"feysbukumdan");
  REQUIRE(!feys.empty());
  CHECK(feys[0].root == U"feysbuk");
  CHECK(std::any_of(feys.begin(), feys.end(), [](const CandidateSplit& c) { return c.root == U"feysbukum"; }));

  const auto thyde = stem_unknown(lex, U"thyde");
  CHECK(std::any_of(thyde.begin(), thyde.end(),
                    [](const CandidateSplit& c) { return c.root == U"thy" && c.suffix_surface == U"de"; }));
  CHECK(std::any_of(thyde.begin(), thyde.end(), [](const CandidateSplit& c) { return c.root == U"thyde"; }));
}

TEST_CASE("root classification") {
  const Lexicon& lex = bundled_lexicon();
  CHECK(classify_root(lex, U"facebuk").cls == RootClass::kForeign);
  CHECK(classify_root(lex, U"facebuk").scores.english > 0);
  CHECK(classify_root(lex, U"facebuk").scores.turkish == 0);
  const auto feys = classify_root(lex, U"feysbuk");
  CHECK(feys.cls == RootClass::kForeign);
  CHECK(feys.scores.turkishized > 0);
  CHECK(feys.scores.english == 0);
  CHECK(classify_root(lex, U"stm").cls == RootClass::kAbbreviation);
  CHECK(classify_root(lex, U"thy").table_entry != nullptr);
  CHECK(classify_root(lex, U"google").cls == RootClass::kForeign);
  CHECK(classify_root(lex, U"gitmekler").cls == RootClass::kMistyped);
  CHECK(violates_backness_harmony(U"facebuk"));
  CHECK(!violates_backness_harmony(U"kapı"));
}

TEST_CASE("n-gram score matches a direct count and ignores table order") {
  const Lexicon& lex = bundled_lexicon();
  std::vector<std::string> grams(lex.ngrams(NGramClass::kTurkish).grams.begin(),
                                 lex.ngrams(NGramClass::kTurkish).grams.end());
  std::mt19937 rng(11);
  for (const std::string w : {"kitaplarından", "facebuk", "gidiyorum", "ab", "evlerinden"}) {
    const double reference = ngram_score(lex.ngrams(NGramClass::kTurkish), utf8::decode(w));
    CHECK(reference == doctest::Approx(oracle_score(grams, w)));
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(grams.begin(), grams.end(), rng);
      NGramTable t;
      t.cls = NGramClass::kTurkish;
      for (const auto& g : grams) t.grams.insert(g);
      CHECK(ngram_score(t, utf8::decode(w)) == reference);
    }
  }
  CHECK(ngram_score(lex.ngrams(NGramClass::kEnglish), U"ab") == 0.0);
}

#include <doctest.h>

#include <set>

#include "../support.hpp"
#include "tg2p/error.hpp"
#include "tg2p/foreign_abbrev.hpp"

using namespace tg2p;
using tg2p::testing::bundled_lexicon;

namespace {

std::set<std::string> strs(const std::vector<Pron>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.str());
  return out;
}

const RootEntry* entry(std::u32string_view w) {
  auto es = bundled_lexicon().find(w);
  return es.empty() ? nullptr : es.front();
}

std::set<std::string> abbrev(std::u32string_view w, bool foreign = false) {
  return strs(phoneticize_abbrev(bundled_lexicon(), entry(w), w, foreign));
}

// Unlisted reading: the table row is ignored.
std::set<std::string> rule_abbrev(std::u32string_view w) {
  return strs(phoneticize_abbrev(bundled_lexicon(), nullptr, w, false));
}

}  // namespace

TEST_CASE("foreign words") {
  const Lexicon& lex = bundled_lexicon();
  CHECK(strs(phoneticize_foreign(lex, entry(U"google"), U"google")) ==
        std::set<std::string>{"g u g l 5", "g o g l 5", "g o g l e"});
  CHECK(strs(phoneticize_foreign(lex, entry(U"gemini"), U"gemini")) ==
        std::set<std::string>{"gj e m i n i", "dZ e m i n i"});
  CHECK(strs(phoneticize_foreign(lex, nullptr, U"feysbuk")) == std::set<std::string>{"f e j s b u k"});
  const auto face = strs(phoneticize_foreign(lex, nullptr, U"facebuk"));
  CHECK(face.size() >= 2);
  CHECK(face.contains("f e j s b u k"));
  CHECK(to_string(english_reading(lex, U"tion")) == "S 1 n");
  CHECK(transliterate(U"qwx") == U"kvks");
}

TEST_CASE("spell-out uses the letter names") {
  const Lexicon& lex = bundled_lexicon();
  const auto& tr = lex.letter_names(Register::kTurkish);
  for (const auto& [letter, name] : tr.names) {
    CHECK(spell_out(std::u32string(1, letter), tr).phones() == name);
  }
  CHECK(spell_out(U"thy", tr).str() == "t e: h e: j e:");
  CHECK(spell_out(U"aa", tr).str() == "a: a:");
  CHECK(spell_out(U"b", tr).str() == "b e:");
  CHECK_THROWS_AS(spell_out(U"é", tr), Error);
}

TEST_CASE("abbreviation patterns") {
  CHECK(cv_pattern(U"tüik") == "CVVC");
  CHECK(rule_abbrev(U"tr") == std::set<std::string>{"t e: r e:"});
  CHECK(rule_abbrev(U"ab") == std::set<std::string>{"a: b e:"});
  CHECK(rule_abbrev(U"stm") == std::set<std::string>{"s e: t e: m e:"});
  CHECK(rule_abbrev(U"thy") == std::set<std::string>{"t e: h e: j e:"});
  CHECK(rule_abbrev(U"sat") == std::set<std::string>{"s a t"});
  CHECK(rule_abbrev(U"itü") == std::set<std::string>{"i t y"});
  CHECK(rule_abbrev(U"tüik") == std::set<std::string>{"t y: i c"});
  CHECK(rule_abbrev(U"tai") == std::set<std::string>{"t a j i"});
  CHECK(rule_abbrev(U"akp").contains("a: c e: p e:"));
  CHECK(rule_abbrev(U"aft").contains("a f t"));
  CHECK(rule_abbrev(U"aal") == std::set<std::string>{"a: a: l e:", "a: a 5"});
  CHECK(rule_abbrev(U"aet").contains("a: e: t e:"));
}

TEST_CASE("foreign abbreviations") {
  CHECK(abbrev(U"mtv", true) == std::set<std::string>{"e m t i: v i:"});
  CHECK(abbrev(U"ntv", true) == std::set<std::string>{"e n t i: v i:"});
  CHECK(abbrev(U"ai", true) == std::set<std::string>{"e j a j"});
  CHECK(strs(phoneticize_abbrev(bundled_lexicon(), nullptr, U"mtv", true)) ==
        std::set<std::string>{"e m t i: v i:"});
}

TEST_CASE("abbreviation readings are never empty") {
  for (std::u32string w : {U"b", U"x", U"ptt", U"bddk", U"aeiou", U"kk", U"ou", U"str"}) {
    CHECK(!rule_abbrev(w).empty());
  }
}

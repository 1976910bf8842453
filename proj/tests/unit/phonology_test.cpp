#include <doctest.h>

#include "tg2p/error.hpp"
#include "tg2p/phoneme.hpp"
#include "tg2p/phonology.hpp"
#include "tg2p/utf8.hpp"

using namespace tg2p;

namespace {

// Harmony oracle written from the letter classes alone.
constexpr std::u32string_view kBack = U"aıou";
constexpr std::u32string_view kRounded = U"oöuü";

char32_t oracle_a(char32_t v) { return kBack.find(v) != std::u32string_view::npos ? U'a' : U'e'; }

char32_t oracle_h(char32_t v) {
  const bool back = kBack.find(v) != std::u32string_view::npos;
  const bool round = kRounded.find(v) != std::u32string_view::npos;
  if (back) return round ? U'u' : U'ı';
  return round ? U'ü' : U'i';
}

std::string phones(std::u32string_view letters) { return to_string(apply_allophones(base_map(letters))); }

}  // namespace

TEST_CASE("inventory has 42 symbols and parses back") {
  CHECK(inventory().size() == 42);
  for (const auto& f : inventory()) CHECK(Phoneme::parse(f.symbol).symbol() == f.symbol);
  CHECK_THROWS_AS(Phoneme::parse("Q"), Error);
  CHECK(to_string(parse_phones("tS i f t l i c")) == "tS i f t l i c");
}

TEST_CASE("default letter mapping") {
  CHECK(phones(U"çşjıöüy") == "tS S Z 1 2 y j");
  CHECK(to_string(base_map(U"ğ")) == "G");
  CHECK_THROWS_AS(base_map(U'q'), Error);
  // No letter maps to N or w.
  for (char32_t c : kTurkishAlphabet) {
    CHECK(base_map(c).sym() != Sym::N);
    CHECK(base_map(c).sym() != Sym::w);
  }
}

TEST_CASE("A and H follow the last vowel for every vowel and stem shape") {
  for (char32_t v : kVowelLetters) {
    for (std::u32string stem : {std::u32string(1, v), U"k" + std::u32string(1, v) + U"r", U"st" + std::u32string(1, v)}) {
      const HarmonyContext ctx = harmony_context(stem);
      CHECK(resolve_meta(MetaGrapheme::kA, ctx) == oracle_a(v));
      CHECK(resolve_meta(MetaGrapheme::kH, ctx) == oracle_h(v));
    }
  }
  CHECK(resolve_meta(MetaGrapheme::kH, harmony_context(U"zaman")) == U'ı');
  CHECK(resolve_meta(MetaGrapheme::kH, harmony_context(U"koy")) == U'u');
  CHECK_THROWS_AS(resolve_meta(MetaGrapheme::kA, harmony_context(U"str")), Error);
}

TEST_CASE("D assimilates to a voiceless final") {
  const std::u32string voiceless = U"pçtkfsşh";
  for (char32_t c : kTurkishAlphabet) {
    const std::u32string stem = U"a" + std::u32string(1, c);
    const char32_t want = voiceless.find(c) != std::u32string::npos ? U't' : U'd';
    CHECK(resolve_meta(MetaGrapheme::kD, harmony_context(stem)) == want);
  }
  CHECK(resolve_meta(MetaGrapheme::kD, harmony_context(U"kısa")) == U'd');
}

TEST_CASE("allophones by syllable") {
  CHECK(phones(U"kıral") == "k 1 r a 5");
  CHECK(to_string(apply_allophones(parse_phones("m i n s k e"))) == "m i n s c e");
  CHECK(to_string(apply_allophones(parse_phones("m a s a"))) == "m a s a");
  CHECK(phones(U"gel") == "gj e l");
  const Phones once = apply_allophones(parse_phones("k a l e g i k o l"));
  CHECK(apply_allophones(once) == once);
}

TEST_CASE("initial cluster epenthesis") {
  CHECK(epenthesize(U"kral") == U"kıral");
  CHECK(epenthesize(U"grup") == U"gurup");
  CHECK(epenthesize(U"prens") == U"pirens");
  CHECK(epenthesize(U"masa") == U"masa");
  CHECK(phones(epenthesize(U"gram")) == "g 1 r a m");
}

TEST_CASE("normalization") {
  auto n = normalize("Istanbul");
  CHECK(n.text == U"ıstanbul");
  CHECK(n.uppercase_hint);
  n = normalize("Zonguldak'a");
  CHECK(n.text == U"zonguldak'a");
  CHECK(n.has_apostrophe);
  CHECK(normalize("ev").text == U"ev");
  CHECK(normalize("\"ev,").text == U"ev");
  CHECK(normalize("İzmir").text == U"izmir");
  CHECK_THROWS_AS(normalize("!!!"), Error);
  try {
    normalize("...");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyToken);
  }
}

TEST_CASE("Turkish case folding round-trips the alphabet") {
  for (char32_t c : kTurkishAlphabet) {
    CHECK(turkish_lower(turkish_upper(c)) == c);
  }
  CHECK(turkish_upper(U'i') == U'İ');
  CHECK(turkish_upper(U'ı') == U'I');
  CHECK(turkish_lower(U'I') == U'ı');
}

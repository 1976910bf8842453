#include <doctest.h>

#include <map>

#include "../support.hpp"
#include "tg2p/native.hpp"
#include "tg2p/utf8.hpp"

using namespace tg2p;
using tg2p::testing::bundled_lexicon;

namespace {

// Letter-to-symbol table restated for the oracle; allophones folded away.
const std::map<char32_t, std::string> kLetters{
    {U'a', "a"}, {U'b', "b"}, {U'c', "dZ"}, {U'ç', "tS"}, {U'd', "d"}, {U'e', "e"}, {U'f', "f"},
    {U'g', "g"}, {U'ğ', "G"}, {U'h', "h"},  {U'ı', "1"},  {U'i', "i"}, {U'j', "Z"}, {U'k', "k"},
    {U'l', "l"}, {U'm', "m"}, {U'n', "n"},  {U'o', "o"},  {U'ö', "2"}, {U'p', "p"}, {U'r', "r"},
    {U's', "s"}, {U'ş', "S"}, {U't', "t"},  {U'u', "u"},  {U'ü', "y"}, {U'v', "v"}, {U'y', "j"},
    {U'z', "z"},
};

std::string fold(const Phones& p) {
  std::string out;
  for (Phoneme ph : p) {
    std::string s(ph.symbol());
    if (s == "c") s = "k";
    else if (s == "gj") s = "g";
    else if (s == "5") s = "l";
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

std::string spelled(std::u32string_view w) {
  std::string out;
  for (char32_t c : w) {
    if (!out.empty()) out += ' ';
    out += kLetters.at(c);
  }
  return out;
}

MorphAnalysis first_analysis(std::u32string_view w) {
  auto as = analyze(bundled_lexicon(), w);
  REQUIRE(!as.empty());
  return as.front();
}

std::string combined(std::u32string_view w) {
  const MorphAnalysis a = first_analysis(w);
  return to_string(combine(phoneticize_root(a.entry, a.root).front(), a).phones);
}

}  // namespace

TEST_CASE("rule readings agree with the letter table") {
  std::size_t checked = 0;
  for (const RootEntry& e : bundled_lexicon().roots()) {
    if (!e.prons.empty() || !(e.genres == GenreSet{Genre::kOrdinary})) continue;
    const auto prons = phoneticize_root(&e, e.letters);
    REQUIRE(prons.size() == 1);
    CHECK_MESSAGE(fold(prons[0].phones()) == spelled(epenthesize(e.letters)), e.surface);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("root prons") {
  const Lexicon& lex = bundled_lexicon();
  CHECK(phoneticize_root(lex.find(U"abide").front(), U"abide").front().str() == "a: b i d e");
  const auto ciftlik = phoneticize_root(lex.find(U"çiftlik").front(), U"çiftlik");
  REQUIRE(ciftlik.size() == 2);
  CHECK(ciftlik[0].str() == "tS i f t l i c");
  CHECK(ciftlik[1].str() == "tS i f l i c");
  CHECK(phoneticize_root(nullptr, U"prens").front().str() == "p i r e n s");
  CHECK(phoneticize_root(nullptr, U"kral").front().str() == "k 1 r a 5");
}

TEST_CASE("suffix phones take allophones from the joined word") {
  CHECK(to_string(phoneticize_suffixes(U"la", parse_phones("z a m a n"))) == "5 a");
  CHECK(to_string(phoneticize_suffixes(U"ken", parse_phones("gj i d i j o r"))) == "c e n");
  CHECK(phoneticize_suffixes(U"", parse_phones("e v")).empty());
}

TEST_CASE("joining root and suffixes") {
  CHECK(combined(U"zamana") == "z a m a: n a");
  CHECK(combined(U"zamanında") == "z a m a: n 1 n d a");
  CHECK(combined(U"zamanda") == "z a m a n d a");
  CHECK(combined(U"zamanla") == "z a m a n 5 a");
  CHECK(combined(U"kitaba") == "c i t a b a");
  CHECK(combined(U"çekici") == "tS e c i dZ i");
  CHECK(combined(U"tankı") == "t a n k 1");
  CHECK(combined(U"diyecek") == "d i j e dZ e c");
}

TEST_CASE("apostrophe voicing on proper nouns") {
  const Lexicon& lex = bundled_lexicon();
  auto joined = [&](std::u32string_view root, std::u32string_view suffix) {
    const auto as = analyze_split(lex, root, suffix);
    REQUIRE(!as.empty());
    return to_string(combine(phoneticize_root(as[0].entry, as[0].root).front(), as[0]).phones);
  };
  CHECK(joined(U"zonguldak", U"a") == "z o n g u 5 d a G a");
  CHECK(joined(U"ahmet", U"e") == "a h m e d e");
  CHECK(joined(U"sarp", U"a") == "s a r p a");
  CHECK(joined(U"minsk", U"e") == "m i n s c e");
}

TEST_CASE("phone origins track morphs") {
  const MorphAnalysis a = first_analysis(U"evlerde");
  const AlignedPron p = combine(phoneticize_root(a.entry, a.root).front(), a);
  REQUIRE(p.origin.size() == p.phones.size());
  CHECK(p.root_size() == 2);
  CHECK(p.origin[2].morph == 0);
  CHECK(p.origin.back().morph == 1);
}

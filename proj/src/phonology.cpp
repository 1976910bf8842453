#include "tg2p/phonology.hpp"

#include <algorithm>

#include "tg2p/error.hpp"
#include "tg2p/utf8.hpp"

namespace tg2p {

bool is_turkish_letter(char32_t c) { return kTurkishAlphabet.find(c) != std::u32string_view::npos; }

bool is_vowel_letter(char32_t c) { return kVowelLetters.find(c) != std::u32string_view::npos; }

bool is_voiceless_letter(char32_t c) { return std::u32string_view(U"pçtkfsşh").find(c) != std::u32string_view::npos; }

VowelQuality vowel_quality(char32_t c) {
  switch (c) {
    case U'a': return {false, false, false};
    case U'e': return {true, false, false};
    case U'ı': return {false, false, true};
    case U'i': return {true, false, true};
    case U'o': return {false, true, false};
    case U'ö': return {true, true, false};
    case U'u': return {false, true, true};
    case U'ü': return {true, true, true};
    default: break;
  }
  throw Error(ErrorCode::kUnknownGrapheme, "'" + utf8::encode(c) + "' is not a vowel letter");
}

char32_t vowel_letter(VowelQuality q) {
  if (q.high) {
    if (q.front) return q.rounded ? U'ü' : U'i';
    return q.rounded ? U'u' : U'ı';
  }
  if (q.front) return q.rounded ? U'ö' : U'e';
  return q.rounded ? U'o' : U'a';
}

Phoneme base_map(char32_t g) {
  switch (g) {
    case U'a': return Sym::a;
    case U'b': return Sym::b;
    case U'c': return Sym::dZ;
    case U'ç': return Sym::tS;
    case U'd': return Sym::d;
    case U'e': return Sym::e;
    case U'f': return Sym::f;
    case U'g': return Sym::g;
    case U'ğ': return Sym::G;
    case U'h': return Sym::h;
    case U'ı': return Sym::I;
    case U'i': return Sym::i;
    case U'j': return Sym::Z;
    case U'k': return Sym::k;
    case U'l': return Sym::l;
    case U'm': return Sym::m;
    case U'n': return Sym::n;
    case U'o': return Sym::o;
    case U'ö': return Sym::oe;
    case U'p': return Sym::p;
    case U'r': return Sym::r;
    case U's': return Sym::s;
    case U'ş': return Sym::S;
    case U't': return Sym::t;
    case U'u': return Sym::u;
    case U'ü': return Sym::y;
    case U'v': return Sym::v;
    case U'y': return Sym::j;
    case U'z': return Sym::z;
    default: break;
  }
  throw Error(ErrorCode::kUnknownGrapheme, "'" + utf8::encode(g) + "' is not a Turkish letter");
}

Phones base_map(std::u32string_view graphemes) {
  Phones out;
  out.reserve(graphemes.size());
  for (char32_t g : graphemes) out.push_back(base_map(g));
  return out;
}

namespace {

bool is_split_cluster(Phoneme a, Phoneme b, Phoneme c) {
  if (b.sym() != Sym::t || c.sym() != Sym::r) return false;
  switch (a.sym()) {
    case Sym::s:
    case Sym::k:
    case Sym::c:
    case Sym::n: return true;
    default: return false;
  }
}

}  // namespace

std::vector<std::size_t> syllable_starts(std::span<const Phoneme> phones) {
  std::vector<std::size_t> starts{0};
  const std::size_t n = phones.size();
  auto vowel_at = [&](std::size_t i) { return i < n && phones[i].is_vowel(); };
  std::size_t cur = 0;
  while (cur < n) {
    std::size_t pos = cur;
    while (pos < n && !phones[pos].is_vowel()) ++pos;
    if (pos >= n) break;
    std::size_t next = pos + 1;
    while (next < n && !phones[next].is_vowel()) ++next;
    if (next >= n) break;  // trailing consonants stay with the last syllable

    std::size_t split;
    if (vowel_at(pos + 1) || vowel_at(pos + 2)) {
      split = pos + 1;
    } else if (vowel_at(pos + 3)) {
      split = pos + 2;
    } else if (is_split_cluster(phones[pos + 1], phones[pos + 2], phones[pos + 3])) {
      split = pos + 2;
    } else {
      split = pos + 3;
    }
    starts.push_back(split);
    cur = split;
  }
  return starts;
}

Phones apply_allophones(std::span<const Phoneme> phones, std::span<const std::size_t> starts) {
  Phones out(phones.begin(), phones.end());
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t begin = starts[s];
    const std::size_t end = s + 1 < starts.size() ? starts[s + 1] : out.size();
    bool front = false;
    for (std::size_t i = begin; i < end; ++i) front = front || (out[i].is_vowel() && out[i].front());
    for (std::size_t i = begin; i < end; ++i) {
      switch (out[i].sym()) {
        case Sym::k:
        case Sym::c: out[i] = front ? Sym::c : Sym::k; break;
        case Sym::g:
        case Sym::gj: out[i] = front ? Sym::gj : Sym::g; break;
        case Sym::l:
        case Sym::l5: out[i] = front ? Sym::l : Sym::l5; break;
        default: break;
      }
    }
  }
  return out;
}

Phones apply_allophones(std::span<const Phoneme> phones) {
  const auto starts = syllable_starts(phones);
  return apply_allophones(phones, starts);
}

HarmonyContext harmony_context(std::u32string_view graphemes) {
  HarmonyContext ctx;
  if (graphemes.empty()) return ctx;
  ctx.empty = false;
  for (auto it = graphemes.rbegin(); it != graphemes.rend(); ++it) {
    if (is_vowel_letter(*it)) {
      ctx.last_vowel = vowel_quality(*it);
      break;
    }
  }
  ctx.ends_in_vowel = is_vowel_letter(graphemes.back());
  ctx.ends_voiceless = is_voiceless_letter(graphemes.back());
  return ctx;
}

HarmonyContext harmony_context(std::span<const Phoneme> phones) {
  HarmonyContext ctx;
  if (phones.empty()) return ctx;
  ctx.empty = false;
  for (auto it = phones.rbegin(); it != phones.rend(); ++it) {
    if (it->is_vowel()) {
      ctx.last_vowel = VowelQuality{it->front(), it->rounded(), it->high()};
      break;
    }
  }
  ctx.ends_in_vowel = phones.back().is_vowel();
  ctx.ends_voiceless = phones.back().is_consonant() && !phones.back().voiced();
  return ctx;
}

char32_t resolve_meta(MetaGrapheme meta, const HarmonyContext& left) {
  switch (meta) {
    case MetaGrapheme::kA:
      if (!left.last_vowel) throw Error(ErrorCode::kMissingHarmonyContext, "A needs a vowel to its left");
      return left.last_vowel->front ? U'e' : U'a';
    case MetaGrapheme::kH:
      if (!left.last_vowel) throw Error(ErrorCode::kMissingHarmonyContext, "H needs a vowel to its left");
      return vowel_letter({left.last_vowel->front, left.last_vowel->rounded, true});
    case MetaGrapheme::kD:
      if (left.empty) throw Error(ErrorCode::kMissingHarmonyContext, "D needs a segment to its left");
      return left.ends_voiceless ? U't' : U'd';
  }
  return U'?';
}

std::u32string epenthesize(std::u32string_view root) {
  std::u32string out(root);
  if (root.size() < 2 || is_vowel_letter(root[0]) || is_vowel_letter(root[1])) return out;
  VowelQuality q{false, false, true};
  for (char32_t c : root) {
    if (is_vowel_letter(c)) {
      q = vowel_quality(c);
      break;
    }
  }
  q.high = true;
  out.insert(out.begin() + 1, vowel_letter(q));
  return out;
}

char32_t turkish_lower(char32_t c) {
  switch (c) {
    case U'I': return U'ı';
    case U'İ': return U'i';
    case U'Ç': return U'ç';
    case U'Ğ': return U'ğ';
    case U'Ö': return U'ö';
    case U'Ş': return U'ş';
    case U'Ü': return U'ü';
    case U'Â': return U'â';
    case U'Î': return U'î';
    case U'Û': return U'û';
    default: break;
  }
  if (c >= U'A' && c <= U'Z') return c - U'A' + U'a';
  return c;
}

char32_t turkish_upper(char32_t c) {
  switch (c) {
    case U'ı': return U'I';
    case U'i': return U'İ';
    case U'ç': return U'Ç';
    case U'ğ': return U'Ğ';
    case U'ö': return U'Ö';
    case U'ş': return U'Ş';
    case U'ü': return U'Ü';
    case U'â': return U'Â';
    case U'î': return U'Î';
    case U'û': return U'Û';
    default: break;
  }
  if (c >= U'a' && c <= U'z') return c - U'a' + U'A';
  return c;
}

namespace {

bool is_word_char(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9')) return true;
  // Latin-1 supplement and Latin Extended-A letters (ç, ğ, ı, İ, ö, ş, ü, â ...).
  return (c >= 0xC0 && c <= 0x17F && c != 0xD7 && c != 0xF7);
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’' || c == U'‘'; }

char32_t fold_circumflex(char32_t c) {
  switch (c) {
    case U'â': return U'a';
    case U'î': return U'i';
    case U'û': return U'u';
    default: return c;
  }
}

}  // namespace

std::string NormalizedToken::utf8() const { return utf8::encode(text); }

NormalizedToken normalize(std::string_view surface) {
  const std::u32string raw = utf8::decode(surface);
  std::size_t b = 0;
  std::size_t e = raw.size();
  while (b < e && !is_word_char(raw[b])) ++b;
  while (e > b && !is_word_char(raw[e - 1])) --e;
  if (b == e) throw Error(ErrorCode::kEmptyToken, "nothing left of '" + std::string(surface) + "' after stripping");

  NormalizedToken tok;
  tok.uppercase_hint = turkish_lower(raw[b]) != raw[b];
  tok.text.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    if (is_apostrophe(raw[i])) {
      tok.has_apostrophe = true;
      tok.text.push_back(U'\'');
    } else {
      tok.text.push_back(fold_circumflex(turkish_lower(raw[i])));
    }
  }
  return tok;
}

}  // namespace tg2p

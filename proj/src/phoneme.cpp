#include "tg2p/phoneme.hpp"

#include <array>
#include <stdexcept>

#include "tg2p/error.hpp"

namespace tg2p {
namespace {

constexpr PhoneFeatures V(std::string_view s, bool front, bool rounded, bool high, bool is_long) {
  return {s, PhoneCategory::kVowel, front, rounded, high, is_long, true, false};
}

constexpr PhoneFeatures C(std::string_view s, bool voiced, bool palatal) {
  return {s, PhoneCategory::kConsonant, false, false, false, false, voiced, palatal};
}

constexpr std::array<PhoneFeatures, kInventorySize> kTable = {{
    V("a", false, false, false, false),  V("e", true, false, false, false),
    V("1", false, false, true, false),   V("i", true, false, true, false),
    V("o", false, true, false, false),   V("2", true, true, false, false),
    V("u", false, true, true, false),    V("y", true, true, true, false),
    V("a:", false, false, false, true),  V("e:", true, false, false, true),
    V("1:", false, false, true, true),   V("i:", true, false, true, true),
    V("o:", false, true, false, true),   V("2:", true, true, false, true),
    V("u:", false, true, true, true),    V("y:", true, true, true, true),
    C("p", false, false),  C("b", true, false),   C("t", false, false),  C("d", true, false),
    C("k", false, false),  C("g", true, false),   C("c", false, true),   C("gj", true, true),
    C("tS", false, false), C("dZ", true, false),  C("f", false, false),  C("v", true, false),
    C("s", false, false),  C("z", true, false),   C("S", false, false),  C("Z", true, false),
    C("m", true, false),   C("n", true, false),   C("N", true, false),   C("l", true, true),
    C("5", true, false),   C("r", true, false),   C("j", true, true),    C("h", false, false),
    C("G", true, false),   C("w", true, false),
}};

}  // namespace

std::span<const PhoneFeatures> inventory() { return kTable; }

const PhoneFeatures& Phoneme::features() const { return kTable[static_cast<std::size_t>(sym_)]; }

std::optional<Phoneme> Phoneme::from_symbol(std::string_view symbol) {
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    if (kTable[i].symbol == symbol) return Phoneme(static_cast<Sym>(i));
  }
  return std::nullopt;
}

Phoneme Phoneme::parse(std::string_view symbol) {
  if (auto p = from_symbol(symbol)) return *p;
  throw Error(ErrorCode::kInvalidSampaToken, "'" + std::string(symbol) + "' is not in the phoneme inventory");
}

Phoneme Phoneme::lengthened() const {
  auto idx = static_cast<int>(sym_);
  if (idx < 8) return Phoneme(static_cast<Sym>(idx + 8));
  return *this;
}

Phoneme Phoneme::shortened() const {
  auto idx = static_cast<int>(sym_);
  if (idx >= 8 && idx < 16) return Phoneme(static_cast<Sym>(idx - 8));
  return *this;
}

Phones parse_phones(std::string_view text) {
  Phones out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    if (j > i) out.push_back(Phoneme::parse(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string to_string(std::span<const Phoneme> phones) {
  std::string out;
  for (std::size_t i = 0; i < phones.size(); ++i) {
    if (i) out.push_back(' ');
    out += phones[i].symbol();
  }
  return out;
}

std::size_t count_vowels(std::span<const Phoneme> phones) {
  std::size_t n = 0;
  for (const auto& p : phones) n += p.is_vowel() ? 1 : 0;
  return n;
}

Pron::Pron(Phones phones, std::optional<std::size_t> stress)
    : phones_(std::move(phones)), stress_(stress) {
  if (phones_.empty()) throw std::invalid_argument("Pron: empty phone sequence");
  if (stress_ && *stress_ >= count_vowels(phones_)) {
    throw std::invalid_argument("Pron: stress index " + std::to_string(*stress_) + " out of range for '" +
                                to_string(phones_) + "'");
  }
}

}  // namespace tg2p

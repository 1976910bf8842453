#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tg2p {

// Closed SAMPA inventory. Long vowels are separate symbols ("a:" etc.).
// `I` is SAMPA "1", `oe` is "2", `l5` is dark l "5".
enum class Sym : std::uint8_t {
  a, e, I, i, o, oe, u, y,
  a_, e_, I_, i_, o_, oe_, u_, y_,
  p, b, t, d, k, g, c, gj, tS, dZ, f, v, s, z, S, Z, m, n, N, l, l5, r, j, h, G, w,
};

inline constexpr std::size_t kInventorySize = static_cast<std::size_t>(Sym::w) + 1;

enum class PhoneCategory { kVowel, kConsonant };

struct PhoneFeatures {
  std::string_view symbol;
  PhoneCategory category;
  bool front = false;
  bool rounded = false;
  bool high = false;
  bool is_long = false;
  bool voiced = false;
  bool palatal = false;
};

// One feature row per inventory symbol, in Sym order.
std::span<const PhoneFeatures> inventory();

class Phoneme {
 public:
  constexpr Phoneme(Sym s) : sym_(s) {}  // NOLINT: implicit by design of the Sym table

  static std::optional<Phoneme> from_symbol(std::string_view symbol);
  // Throws Error(kInvalidSampaToken).
  static Phoneme parse(std::string_view symbol);

  constexpr Sym sym() const { return sym_; }
  const PhoneFeatures& features() const;
  std::string_view symbol() const { return features().symbol; }

  bool is_vowel() const { return features().category == PhoneCategory::kVowel; }
  bool is_consonant() const { return !is_vowel(); }
  bool front() const { return features().front; }
  bool rounded() const { return features().rounded; }
  bool high() const { return features().high; }
  bool is_long() const { return features().is_long; }
  bool voiced() const { return features().voiced; }

  // Vowel length toggles; identity on consonants.
  Phoneme lengthened() const;
  Phoneme shortened() const;

  constexpr bool operator==(const Phoneme&) const = default;
  constexpr auto operator<=>(const Phoneme&) const = default;

 private:
  Sym sym_;
};

using Phones = std::vector<Phoneme>;

// Space-separated SAMPA tokens. Throws Error(kInvalidSampaToken).
Phones parse_phones(std::string_view text);
std::string to_string(std::span<const Phoneme> phones);
std::size_t count_vowels(std::span<const Phoneme> phones);

// A phoneme sequence with an optional stressed vowel (ordinal over vowels).
class Pron {
 public:
  // Throws std::invalid_argument on empty phones or out-of-range stress.
  explicit Pron(Phones phones, std::optional<std::size_t> stress = std::nullopt);

  const Phones& phones() const { return phones_; }
  std::optional<std::size_t> stress() const { return stress_; }
  std::size_t vowel_count() const { return count_vowels(phones_); }
  Pron with_stress(std::optional<std::size_t> stress) const { return Pron(phones_, stress); }
  std::string str() const { return to_string(phones_); }

  bool operator==(const Pron&) const = default;

 private:
  Phones phones_;
  std::optional<std::size_t> stress_;
};

}  // namespace tg2p

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tg2p/phonology.hpp"

namespace tg2p {

enum class Genre : std::uint8_t { kOrdinary, kProper, kGeographical, kCompound, kAbbreviation, kForeign };

inline constexpr Genre kAllGenres[] = {Genre::kOrdinary, Genre::kProper,       Genre::kGeographical,
                                      Genre::kCompound, Genre::kAbbreviation, Genre::kForeign};

std::string_view genre_name(Genre g);
std::optional<Genre> parse_genre(std::string_view name);

class GenreSet {
 public:
  GenreSet() = default;
  GenreSet(std::initializer_list<Genre> genres) {
    for (Genre g : genres) insert(g);
  }
  void insert(Genre g) { bits_ |= bit(g); }
  bool contains(Genre g) const { return (bits_ & bit(g)) != 0; }
  bool empty() const { return bits_ == 0; }
  bool operator==(const GenreSet&) const = default;

 private:
  static std::uint8_t bit(Genre g) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(g)); }
  std::uint8_t bits_ = 0;
};

// Word classes that select the morphotactic start state of a root.
enum class PartOfSpeech : std::uint8_t { kNoun, kVerb };

struct RootEntry {
  std::string surface;
  std::u32string letters;
  std::vector<Pron> prons;  // empty: generate by rule
  GenreSet genres;
  bool lengthens_final_vowel = false;
  bool no_final_voicing = false;
  // de-/ye- raise their vowel before a y-initial suffix (diyecek).
  bool narrows = false;
  std::optional<std::size_t> fixed_stress;
  std::optional<std::size_t> compound_stress;
  std::vector<PartOfSpeech> pos{PartOfSpeech::kNoun};
  std::size_t index = 0;  // row order in roots.tsv
};

// One piece of a suffix meta form.
struct MetaToken {
  enum class Kind { kLiteral, kMeta, kBuffer } kind = Kind::kLiteral;
  char32_t letter = 0;            // literal letter, or consonant buffer (s, y, n)
  MetaGrapheme meta = MetaGrapheme::kA;
  bool vowel_buffer = false;      // [H]/[A]: present only after a consonant
};

struct SuffixTemplate {
  std::string meta_form;  // as written in suffixes.tsv, e.g. "[s]HndA"
  std::vector<MetaToken> tokens;
  std::string tag;
  bool stress_shifting = false;
  std::vector<std::string> from_states;
  std::string to_state;
  bool softens = false;         // final k -> ğ before a vowel (-AcAk)
  bool characteristic = false;  // used by the heuristic stemmer
  bool stem_only = false;       // heuristic stemmer only, never the analyzer
  std::size_t index = 0;
};

// Throws Error(kParseError) with the offending form.
std::vector<MetaToken> parse_meta_form(std::string_view meta_form);

enum class NGramClass { kEnglish, kTurkish, kTurkishizedEnglish };

struct NGramTable {
  NGramClass cls = NGramClass::kEnglish;
  std::unordered_set<std::string> grams;
};

enum class Register { kTurkish, kEnglish };

struct LetterNameTable {
  Register reg = Register::kTurkish;
  std::map<char32_t, Phones> names;
};

// Surface-keyed exceptional pronunciations (fast-speech forms).
struct VariantEntry {
  std::string surface;
  std::string required_tag;  // empty: unconditional
  std::vector<Pron> prons;
};

// One ordered rule of the English-ish reading of foreign words.
struct EnglishRewrite {
  std::u32string pattern;
  bool at_start = false;
  bool at_end = false;
  std::u32string right_context;  // next letter must be one of these (empty: any)
  Phones phones;                 // empty: silent
};

class Lexicon {
 public:
  const std::vector<RootEntry>& roots() const { return roots_; }
  const std::vector<SuffixTemplate>& suffixes() const { return suffixes_; }
  const NGramTable& ngrams(NGramClass cls) const;
  const LetterNameTable& letter_names(Register reg) const;
  const std::vector<VariantEntry>& variants() const { return variants_; }
  const std::vector<EnglishRewrite>& english_rewrites() const { return rewrites_; }

  // Entries with this surface, in file order.
  std::vector<const RootEntry*> find(std::u32string_view surface) const;
  std::vector<const VariantEntry*> find_variants(std::string_view surface) const;

  // Builder interface used by the loader and tests.
  void add_root(RootEntry entry);
  void add_suffix(SuffixTemplate tmpl);
  void set_ngrams(NGramTable table);
  void set_letter_names(LetterNameTable table);
  void add_variant(VariantEntry entry);
  void add_rewrite(EnglishRewrite rule);

 private:
  std::vector<RootEntry> roots_;
  std::unordered_map<std::u32string, std::vector<std::size_t>> root_index_;
  std::vector<SuffixTemplate> suffixes_;
  NGramTable ngrams_[3];
  LetterNameTable letter_names_[2]{{Register::kTurkish, {}}, {Register::kEnglish, {}}};
  std::vector<VariantEntry> variants_;
  std::unordered_map<std::string, std::vector<std::size_t>> variant_index_;
  std::vector<EnglishRewrite> rewrites_;
};

// Reads every table from `dir`. Throws Error(kMissingFile | kParseError |
// kInvalidSampaToken).
std::shared_ptr<const Lexicon> load_lexicon(const std::filesystem::path& dir);

// Writes canonical (comment-free) versions of every table to `dir`.
void dump_lexicon(const Lexicon& lexicon, const std::filesystem::path& dir);

std::vector<const RootEntry*> lookup_root(const Lexicon& lexicon, std::u32string_view surface,
                                          std::optional<Genre> genre = std::nullopt);

// Directory of the tables bundled with the source tree.
std::filesystem::path default_lexicon_dir();

}  // namespace tg2p

#include "tg2p/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tg2p/error.hpp"
#include "tg2p/utf8.hpp"

#ifndef TG2P_DATA_DIR
#define TG2P_DATA_DIR "data"
#endif

namespace tg2p {

namespace fs = std::filesystem;

std::string_view genre_name(Genre g) {
  switch (g) {
    case Genre::kOrdinary: return "ordinary";
    case Genre::kProper: return "proper";
    case Genre::kGeographical: return "geographical";
    case Genre::kCompound: return "compound";
    case Genre::kAbbreviation: return "abbreviation";
    case Genre::kForeign: return "foreign";
  }
  return "?";
}

std::optional<Genre> parse_genre(std::string_view name) {
  for (Genre g : kAllGenres) {
    if (genre_name(g) == name) return g;
  }
  return std::nullopt;
}

fs::path default_lexicon_dir() { return fs::path(TG2P_DATA_DIR); }

// --- Lexicon -----------------------------------------------------------------

const NGramTable& Lexicon::ngrams(NGramClass cls) const { return ngrams_[static_cast<int>(cls)]; }

const LetterNameTable& Lexicon::letter_names(Register reg) const { return letter_names_[static_cast<int>(reg)]; }

std::vector<const RootEntry*> Lexicon::find(std::u32string_view surface) const {
  std::vector<const RootEntry*> out;
  auto it = root_index_.find(std::u32string(surface));
  if (it == root_index_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&roots_[i]);
  return out;
}

std::vector<const VariantEntry*> Lexicon::find_variants(std::string_view surface) const {
  std::vector<const VariantEntry*> out;
  auto it = variant_index_.find(std::string(surface));
  if (it == variant_index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&variants_[i]);
  return out;
}

void Lexicon::add_root(RootEntry entry) {
  entry.index = roots_.size();
  if (entry.letters.empty()) entry.letters = utf8::decode(entry.surface);
  root_index_[entry.letters].push_back(roots_.size());
  roots_.push_back(std::move(entry));
}

void Lexicon::add_suffix(SuffixTemplate tmpl) {
  tmpl.index = suffixes_.size();
  if (tmpl.tokens.empty()) tmpl.tokens = parse_meta_form(tmpl.meta_form);
  suffixes_.push_back(std::move(tmpl));
}

void Lexicon::set_ngrams(NGramTable table) { ngrams_[static_cast<int>(table.cls)] = std::move(table); }

void Lexicon::set_letter_names(LetterNameTable table) {
  letter_names_[static_cast<int>(table.reg)] = std::move(table);
}

void Lexicon::add_variant(VariantEntry entry) {
  variant_index_[entry.surface].push_back(variants_.size());
  variants_.push_back(std::move(entry));
}

void Lexicon::add_rewrite(EnglishRewrite rule) { rewrites_.push_back(std::move(rule)); }

std::vector<const RootEntry*> lookup_root(const Lexicon& lexicon, std::u32string_view surface,
                                          std::optional<Genre> genre) {
  auto all = lexicon.find(surface);
  if (!genre) return all;
  std::vector<const RootEntry*> out;
  for (const auto* e : all) {
    if (e->genres.contains(*genre)) out.push_back(e);
  }
  return out;
}

std::vector<MetaToken> parse_meta_form(std::string_view meta_form) {
  const std::u32string s = utf8::decode(meta_form);
  std::vector<MetaToken> out;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParseError, "suffix form '" + std::string(meta_form) + "': " + why);
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char32_t c = s[i];
    MetaToken tok;
    if (c == U'[') {
      if (i + 2 >= s.size() || s[i + 2] != U']') fail("unterminated buffer");
      const char32_t b = s[i + 1];
      tok.kind = MetaToken::Kind::kBuffer;
      if (b == U's' || b == U'y' || b == U'n') {
        tok.letter = b;
      } else if (b == U'H' || b == U'A') {
        tok.vowel_buffer = true;
        tok.meta = b == U'H' ? MetaGrapheme::kH : MetaGrapheme::kA;
      } else {
        fail("buffer letter must be one of s, y, n, H, A");
      }
      i += 2;
    } else if (c == U'A' || c == U'H' || c == U'D') {
      tok.kind = MetaToken::Kind::kMeta;
      tok.meta = c == U'A' ? MetaGrapheme::kA : (c == U'H' ? MetaGrapheme::kH : MetaGrapheme::kD);
    } else if (is_turkish_letter(c)) {
      tok.letter = c;
    } else {
      fail("unexpected character '" + utf8::encode(c) + "'");
    }
    out.push_back(tok);
  }
  if (out.empty()) fail("empty form");
  return out;
}

// --- loading -------------------------------------------------------------------

namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

class TableReader {
 public:
  TableReader(const fs::path& dir, std::string name) : name_(std::move(name)) {
    const fs::path path = dir / name_;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kMissingFile, path.string());
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      Row row;
      row.line = no;
      std::size_t start = 0;
      while (true) {
        auto tab = line.find('\t', start);
        row.fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      rows_.push_back(std::move(row));
    }
  }

  const std::vector<Row>& rows() const { return rows_; }

  [[noreturn]] void fail(const Row& row, const std::string& why) const {
    throw Error(ErrorCode::kParseError, name_ + ":" + std::to_string(row.line) + ": " + why);
  }

  void require_columns(const Row& row, std::size_t min, std::size_t max) const {
    if (row.fields.size() < min || row.fields.size() > max) {
      fail(row, "expected " + std::to_string(min) + (min == max ? "" : "-" + std::to_string(max)) +
                    " columns, got " + std::to_string(row.fields.size()));
    }
  }

  // Re-raises inventory errors with file and line attached.
  Phones phones(const Row& row, std::string_view text) const {
    try {
      return parse_phones(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidSampaToken, name_ + ":" + std::to_string(row.line) + ": " + e.what());
    }
  }

  std::vector<Pron> prons(const Row& row, std::string_view text) const {
    std::vector<Pron> out;
    if (text == "-") return out;
    std::size_t start = 0;
    while (true) {
      auto bar = text.find('|', start);
      auto part = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
      Phones p = phones(row, part);
      if (p.empty()) fail(row, "empty pronunciation");
      out.emplace_back(std::move(p));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return out;
  }

 private:
  std::string name_;
  std::vector<Row> rows_;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_root_letter(char32_t c) { return is_turkish_letter(c) || c == U'q' || c == U'w' || c == U'x'; }

std::optional<std::size_t> parse_index(std::string_view v) {
  if (v.empty() || v.size() > 3) return std::nullopt;
  std::size_t n = 0;
  for (char c : v) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

// Phones used to validate stress/lengthening flags of rule-generated roots.
std::optional<Phones> reference_phones(const RootEntry& e) {
  if (!e.prons.empty()) return e.prons.front().phones();
  for (char32_t c : e.letters) {
    if (!is_turkish_letter(c)) return std::nullopt;
  }
  return base_map(epenthesize(e.letters));
}

void load_features(const fs::path& dir) {
  TableReader t(dir, "phoneme_features.tsv");
  const auto inv = inventory();
  if (t.rows().size() != inv.size()) {
    throw Error(ErrorCode::kParseError, "phoneme_features.tsv: expected " + std::to_string(inv.size()) + " rows");
  }
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const Row& row = t.rows()[i];
    t.require_columns(row, 8, 8);
    const auto& f = inv[i];
    auto flag = [](bool b) { return std::string(b ? "1" : "0"); };
    const std::vector<std::string> want = {std::string(f.symbol),
                                           f.category == PhoneCategory::kVowel ? "vowel" : "consonant",
                                           flag(f.front),
                                           flag(f.rounded),
                                           flag(f.high),
                                           flag(f.is_long),
                                           flag(f.voiced),
                                           flag(f.palatal)};
    if (row.fields != want) t.fail(row, "row disagrees with the built-in feature table for '" + want[0] + "'");
  }
}

void load_roots(const fs::path& dir, Lexicon& lex) {
  TableReader t(dir, "roots.tsv");
  std::unordered_map<std::u32string, GenreSet> seen;
  for (const Row& row : t.rows()) {
    t.require_columns(row, 3, 4);
    RootEntry e;
    e.surface = row.fields[0];
    e.letters = utf8::decode(e.surface);
    if (e.letters.empty()) t.fail(row, "empty surface");
    for (char32_t c : e.letters) {
      if (!is_root_letter(c) || turkish_lower(c) != c) t.fail(row, "surface '" + e.surface + "' is not normalized");
    }
    for (const auto& g : split(row.fields[1], ',')) {
      auto genre = parse_genre(g);
      if (!genre) t.fail(row, "unknown genre '" + g + "'");
      e.genres.insert(*genre);
    }
    e.prons = t.prons(row, row.fields[2]);
    if (row.fields.size() == 4 && row.fields[3] != "-") {
      for (const auto& kv : split(row.fields[3], ' ')) {
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos) t.fail(row, "flag '" + kv + "' is not key=value");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "lengthens") {
          e.lengthens_final_vowel = val == "1";
        } else if (key == "nosoften") {
          e.no_final_voicing = val == "1";
        } else if (key == "narrow") {
          e.narrows = val == "1";
        } else if (key == "stress" || key == "cstress") {
          auto n = parse_index(val);
          if (!n) t.fail(row, "bad syllable index '" + val + "'");
          (key == "stress" ? e.fixed_stress : e.compound_stress) = n;
        } else if (key == "pos") {
          e.pos.clear();
          for (const auto& p : split(val, ',')) {
            if (p == "N") {
              e.pos.push_back(PartOfSpeech::kNoun);
            } else if (p == "V") {
              e.pos.push_back(PartOfSpeech::kVerb);
            } else {
              t.fail(row, "unknown part of speech '" + p + "'");
            }
          }
        } else {
          t.fail(row, "unknown flag '" + key + "'");
        }
      }
    }

    GenreSet& prior = seen[e.letters];
    for (Genre g : kAllGenres) {
      if (e.genres.contains(g) && prior.contains(g)) {
        t.fail(row, "duplicate root '" + e.surface + "' for genre " + std::string(genre_name(g)));
      }
      if (e.genres.contains(g)) prior.insert(g);
    }

    if (e.fixed_stress || e.compound_stress || e.lengthens_final_vowel) {
      std::vector<Phones> check;
      for (const auto& p : e.prons) check.push_back(p.phones());
      if (check.empty()) {
        auto ref = reference_phones(e);
        if (!ref) t.fail(row, "flags need a listed pronunciation for '" + e.surface + "'");
        check.push_back(*ref);
      }
      for (const auto& ph : check) {
        const std::size_t vowels = count_vowels(ph);
        for (auto idx : {e.fixed_stress, e.compound_stress}) {
          if (idx && *idx >= vowels) t.fail(row, "stress syllable out of range for '" + e.surface + "'");
        }
        if (e.lengthens_final_vowel) {
          auto last = std::find_if(ph.rbegin(), ph.rend(), [](Phoneme p) { return p.is_vowel(); });
          if (last == ph.rend() || last->is_long()) t.fail(row, "lengthens=1 needs a short final vowel");
        }
      }
    }
    lex.add_root(std::move(e));
  }
}

void load_suffixes(const fs::path& dir, Lexicon& lex) {
  TableReader t(dir, "suffixes.tsv");
  for (const Row& row : t.rows()) {
    t.require_columns(row, 5, 6);
    SuffixTemplate s;
    s.meta_form = row.fields[0];
    try {
      s.tokens = parse_meta_form(s.meta_form);
    } catch (const Error& err) {
      t.fail(row, err.what());
    }
    s.tag = row.fields[1];
    if (row.fields[2] != "0" && row.fields[2] != "1") t.fail(row, "stress_shifting must be 0 or 1");
    s.stress_shifting = row.fields[2] == "1";
    s.from_states = split(row.fields[3], ',');
    s.to_state = row.fields[4];
    if (row.fields.size() == 6 && row.fields[5] != "-") {
      for (const auto& f : split(row.fields[5], ',')) {
        if (f == "soft") {
          s.softens = true;
        } else if (f == "heur") {
          s.characteristic = true;
        } else if (f == "stem") {
          s.characteristic = true;
          s.stem_only = true;
        } else {
          t.fail(row, "unknown suffix flag '" + f + "'");
        }
      }
    }
    lex.add_suffix(std::move(s));
  }
}

void load_ngrams(const fs::path& dir, Lexicon& lex, NGramClass cls, const std::string& name) {
  TableReader t(dir, name);
  NGramTable table;
  table.cls = cls;
  for (const Row& row : t.rows()) {
    t.require_columns(row, 1, 1);
    const auto u = utf8::decode(row.fields[0]);
    if (u.size() != 3 && u.size() != 4) t.fail(row, "gram '" + row.fields[0] + "' must have 3 or 4 letters");
    for (char32_t c : u) {
      if (turkish_lower(c) != c) t.fail(row, "gram '" + row.fields[0] + "' must be lowercase");
    }
    table.grams.insert(row.fields[0]);
  }
  lex.set_ngrams(std::move(table));
}

void load_letter_names(const fs::path& dir, Lexicon& lex, Register reg, const std::string& name) {
  TableReader t(dir, name);
  LetterNameTable table;
  table.reg = reg;
  for (const Row& row : t.rows()) {
    t.require_columns(row, 2, 2);
    const auto u = utf8::decode(row.fields[0]);
    if (u.size() != 1) t.fail(row, "expected a single letter");
    Phones p = t.phones(row, row.fields[1]);
    if (p.empty()) t.fail(row, "empty letter name");
    if (!table.names.emplace(u[0], std::move(p)).second) t.fail(row, "duplicate letter");
  }
  std::u32string required = U"abcdefghijklmnopqrstuvwxyz";
  if (reg == Register::kTurkish) required += U"çğıöşü";
  for (char32_t c : required) {
    if (!table.names.contains(c)) {
      throw Error(ErrorCode::kParseError, name + ": missing letter '" + utf8::encode(c) + "'");
    }
  }
  lex.set_letter_names(std::move(table));
}

void load_variants(const fs::path& dir, Lexicon& lex) {
  TableReader t(dir, "variants.tsv");
  for (const Row& row : t.rows()) {
    t.require_columns(row, 3, 3);
    VariantEntry v;
    v.surface = row.fields[0];
    v.required_tag = row.fields[1] == "-" ? "" : row.fields[1];
    v.prons = t.prons(row, row.fields[2]);
    if (v.prons.empty()) t.fail(row, "variant row without pronunciations");
    lex.add_variant(std::move(v));
  }
}

void load_rewrites(const fs::path& dir, Lexicon& lex) {
  TableReader t(dir, "english_rewrites.tsv");
  for (const Row& row : t.rows()) {
    t.require_columns(row, 2, 3);
    EnglishRewrite r;
    std::u32string pat = utf8::decode(row.fields[0]);
    if (!pat.empty() && pat.front() == U'^') {
      r.at_start = true;
      pat.erase(pat.begin());
    }
    if (!pat.empty() && pat.back() == U'$') {
      r.at_end = true;
      pat.pop_back();
    }
    if (pat.empty()) t.fail(row, "empty pattern");
    r.pattern = std::move(pat);
    if (row.fields[1] != "-") r.phones = t.phones(row, row.fields[1]);
    if (row.fields.size() == 3 && row.fields[2] != "-") r.right_context = utf8::decode(row.fields[2]);
    lex.add_rewrite(std::move(r));
  }
}

}  // namespace

std::shared_ptr<const Lexicon> load_lexicon(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kMissingFile, dir.string() + " is not a directory");
  auto lex = std::make_shared<Lexicon>();
  load_features(dir);
  load_roots(dir, *lex);
  load_suffixes(dir, *lex);
  load_ngrams(dir, *lex, NGramClass::kEnglish, "ngrams_english.tsv");
  load_ngrams(dir, *lex, NGramClass::kTurkish, "ngrams_turkish.tsv");
  load_ngrams(dir, *lex, NGramClass::kTurkishizedEnglish, "ngrams_trenglish.tsv");
  load_letter_names(dir, *lex, Register::kTurkish, "letternames_turkish.tsv");
  load_letter_names(dir, *lex, Register::kEnglish, "letternames_english.tsv");
  load_variants(dir, *lex);
  load_rewrites(dir, *lex);
  return lex;
}

// --- dumping -------------------------------------------------------------------

namespace {

std::string join_prons(const std::vector<Pron>& prons) {
  if (prons.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < prons.size(); ++i) {
    if (i) out += " | ";
    out += prons[i].str();
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kMissingFile, "cannot write " + path.string());
  out << text;
}

}  // namespace

void dump_lexicon(const Lexicon& lex, const fs::path& dir) {
  fs::create_directories(dir);

  std::ostringstream feats;
  for (const auto& f : inventory()) {
    feats << f.symbol << '\t' << (f.category == PhoneCategory::kVowel ? "vowel" : "consonant") << '\t' << f.front
          << '\t' << f.rounded << '\t' << f.high << '\t' << f.is_long << '\t' << f.voiced << '\t' << f.palatal
          << '\n';
  }
  write_file(dir / "phoneme_features.tsv", feats.str());

  std::ostringstream roots;
  for (const auto& e : lex.roots()) {
    std::string genres;
    for (Genre g : kAllGenres) {
      if (!e.genres.contains(g)) continue;
      if (!genres.empty()) genres += ',';
      genres += genre_name(g);
    }
    std::vector<std::string> flags;
    if (e.lengthens_final_vowel) flags.emplace_back("lengthens=1");
    if (e.no_final_voicing) flags.emplace_back("nosoften=1");
    if (e.narrows) flags.emplace_back("narrow=1");
    if (!(e.pos.size() == 1 && e.pos[0] == PartOfSpeech::kNoun)) {
      std::string pos = "pos=";
      for (std::size_t i = 0; i < e.pos.size(); ++i) {
        if (i) pos += ',';
        pos += e.pos[i] == PartOfSpeech::kNoun ? "N" : "V";
      }
      flags.push_back(pos);
    }
    if (e.fixed_stress) flags.push_back("stress=" + std::to_string(*e.fixed_stress));
    if (e.compound_stress) flags.push_back("cstress=" + std::to_string(*e.compound_stress));
    std::string flag_text;
    for (std::size_t i = 0; i < flags.size(); ++i) flag_text += (i ? " " : "") + flags[i];
    roots << e.surface << '\t' << genres << '\t' << join_prons(e.prons) << '\t'
          << (flag_text.empty() ? "-" : flag_text) << '\n';
  }
  write_file(dir / "roots.tsv", roots.str());

  std::ostringstream sfx;
  for (const auto& s : lex.suffixes()) {
    std::string from;
    for (std::size_t i = 0; i < s.from_states.size(); ++i) from += (i ? "," : "") + s.from_states[i];
    std::vector<std::string> flags;
    if (s.softens) flags.emplace_back("soft");
    if (s.stem_only) {
      flags.emplace_back("stem");
    } else if (s.characteristic) {
      flags.emplace_back("heur");
    }
    std::string flag_text;
    for (std::size_t i = 0; i < flags.size(); ++i) flag_text += (i ? "," : "") + flags[i];
    sfx << s.meta_form << '\t' << s.tag << '\t' << (s.stress_shifting ? 1 : 0) << '\t' << from << '\t'
        << s.to_state << '\t' << (flag_text.empty() ? "-" : flag_text) << '\n';
  }
  write_file(dir / "suffixes.tsv", sfx.str());

  const std::pair<NGramClass, const char*> gram_files[] = {{NGramClass::kEnglish, "ngrams_english.tsv"},
                                                           {NGramClass::kTurkish, "ngrams_turkish.tsv"},
                                                           {NGramClass::kTurkishizedEnglish, "ngrams_trenglish.tsv"}};
  for (const auto& [cls, name] : gram_files) {
    std::vector<std::string> grams(lex.ngrams(cls).grams.begin(), lex.ngrams(cls).grams.end());
    std::sort(grams.begin(), grams.end());
    std::string text;
    for (const auto& g : grams) text += g + "\n";
    write_file(dir / name, text);
  }

  const std::pair<Register, const char*> name_files[] = {{Register::kTurkish, "letternames_turkish.tsv"},
                                                         {Register::kEnglish, "letternames_english.tsv"}};
  for (const auto& [reg, name] : name_files) {
    std::string text;
    for (const auto& [letter, phones] : lex.letter_names(reg).names) {
      text += utf8::encode(letter) + "\t" + to_string(phones) + "\n";
    }
    write_file(dir / name, text);
  }

  std::string variants;
  for (const auto& v : lex.variants()) {
    variants += v.surface + "\t" + (v.required_tag.empty() ? "-" : v.required_tag) + "\t" + join_prons(v.prons) + "\n";
  }
  write_file(dir / "variants.tsv", variants);

  std::string rewrites;
  for (const auto& r : lex.english_rewrites()) {
    std::string pat = (r.at_start ? "^" : "") + utf8::encode(r.pattern) + (r.at_end ? "$" : "");
    rewrites += pat + "\t" + (r.phones.empty() ? "-" : to_string(r.phones)) + "\t" +
                (r.right_context.empty() ? "-" : utf8::encode(r.right_context)) + "\n";
  }
  write_file(dir / "english_rewrites.tsv", rewrites);
}

}  // namespace tg2p

#include "tg2p/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "tg2p/foreign_abbrev.hpp"
#include "tg2p/morphology.hpp"
#include "tg2p/native.hpp"
#include "tg2p/postphonology.hpp"
#include "tg2p/stemmer.hpp"
#include "tg2p/utf8.hpp"

namespace tg2p {

namespace {

constexpr std::size_t kBatchChunk = 4096;

class WordBuilder {
 public:
  WordBuilder(const Lexicon& lex, const Options& opts, WordResult& result)
      : lex_(lex), opts_(opts), result_(result) {}

  // Runs `f`, remembering the first Error instead of propagating it.
  template <typename F>
  void attempt(F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (!first_error_) {
        first_error_ = e.code();
        first_message_ = e.what();
      }
    }
  }

  void emit(const MorphAnalysis& analysis, const std::vector<Pron>& root_prons, Source source) {
    std::vector<Pronunciation> staged;
    for (const Pron& rp : root_prons) {
      const AlignedPron joined = combine(rp, analysis);
      for (const AlignedPron& resolved : resolve_soft_g(joined)) {
        const auto variants = opts_.variants ? generate_variants(lex_, resolved, &analysis)
                                             : std::vector<AlignedPron>{resolved};
        for (const AlignedPron& v : variants) staged.push_back(finish(v, analysis, source));
      }
    }
    for (auto& p : staged) {
      const bool dup = std::any_of(result_.prons.begin(), result_.prons.end(),
                                   [&](const Pronunciation& q) { return q.rendered == p.rendered; });
      if (!dup) result_.prons.push_back(std::move(p));
    }
  }

  void finalize() {
    if (result_.prons.empty()) {
      result_.error = first_error_.value_or(ErrorCode::kUnknownGrapheme);
      result_.error_message = first_message_;
    }
  }

 private:
  Pronunciation finish(const AlignedPron& v, const MorphAnalysis& analysis, Source source) const {
    Pronunciation out{Pron(v.phones), {}, {}, source, analysis.tags, utf8::encode(analysis.root)};
    if (opts_.mode == Mode::kTts) {
      out.pron = out.pron.with_stress(assign_stress(v, &analysis));
      for (const Phones& s : syllabify(out.pron).syllables) out.syllables.push_back(to_string(s));
    }
    out.rendered = render(out.pron, opts_.mode);
    return out;
  }

  const Lexicon& lex_;
  const Options& opts_;
  WordResult& result_;
  std::optional<ErrorCode> first_error_;
  std::string first_message_;
};

bool has_foreign_genre(const RootEntry* e) { return e != nullptr && e->genres.contains(Genre::kForeign); }

std::vector<Pron> native_route(const Lexicon& lex, const MorphAnalysis& a, Source& source) {
  switch (a.genre) {
    case Genre::kAbbreviation:
      source = Source::kAbbrev;
      return phoneticize_abbrev(lex, a.entry, a.root, has_foreign_genre(a.entry));
    case Genre::kForeign:
      source = Source::kForeign;
      return phoneticize_foreign(lex, a.entry, a.root);
    default:
      source = Source::kNative;
      return phoneticize_root(a.entry, a.root);
  }
}

MorphAnalysis candidate_analysis(const Lexicon& lex, const CandidateSplit& c) {
  MorphAnalysis a;
  a.root = c.root;
  a.stem = c.stem;
  a.suffix_surface = c.suffix_surface;
  a.suffixes = c.suffixes;
  a.boundary_voicing = c.boundary_voicing;
  a.apostrophe = c.apostrophe;
  a.entry = c.classification.table_entry;
  switch (c.classification.cls) {
    case RootClass::kAbbreviation: a.genre = Genre::kAbbreviation; break;
    case RootClass::kForeign: a.genre = Genre::kForeign; break;
    case RootClass::kMistyped: {
      auto native = lex.find(c.root);
      if (!native.empty()) {
        a.entry = native.front();
        a.genre = native.front()->genres.contains(Genre::kGeographical) ? Genre::kGeographical : Genre::kOrdinary;
      }
      break;
    }
  }
  a.tags.push_back("<" + std::string(root_class_name(c.classification.cls)) + ">");
  for (const auto& s : c.suffixes) a.tags.push_back(s.tmpl ? s.tmpl->tag : "<?>");
  return a;
}

std::vector<Pron> candidate_route(const Lexicon& lex, const CandidateSplit& c, const MorphAnalysis& a) {
  switch (c.classification.cls) {
    case RootClass::kAbbreviation: return phoneticize_abbrev(lex, a.entry, a.root, has_foreign_genre(a.entry));
    case RootClass::kForeign: return phoneticize_foreign(lex, a.entry, a.root);
    case RootClass::kMistyped: return phoneticize_root(a.entry, a.root);
  }
  return {};
}

}  // namespace

std::string_view source_name(Source s) {
  switch (s) {
    case Source::kNative: return "native";
    case Source::kForeign: return "foreign";
    case Source::kAbbrev: return "abbrev";
    case Source::kHeuristic: return "heuristic";
  }
  return "?";
}

WordResult g2p_word(const Lexicon& lexicon, std::string_view surface, const Options& options) {
  WordResult result;
  result.surface = surface;
  NormalizedToken tok;
  try {
    tok = normalize(surface);
  } catch (const Error& e) {
    result.error = e.code();
    result.error_message = e.what();
    return result;
  }

  WordBuilder builder(lexicon, options, result);
  std::vector<MorphAnalysis> analyses;
  builder.attempt([&] {
    if (tok.has_apostrophe) {
      const std::size_t apo = tok.text.find(U'\'');
      std::u32string suffix = tok.text.substr(apo + 1);
      std::erase(suffix, U'\'');
      if (apo > 0) analyses = analyze_split(lexicon, tok.text.substr(0, apo), suffix);
    } else {
      analyses = analyze(lexicon, tok.text);
    }
  });

  for (const MorphAnalysis& a : analyses) {
    builder.attempt([&] {
      Source source = Source::kNative;
      const auto prons = native_route(lexicon, a, source);
      builder.emit(a, prons, source);
    });
  }

  if (analyses.empty()) {
    std::vector<CandidateSplit> candidates;
    builder.attempt([&] { candidates = stem_unknown(lexicon, tok.text); });
    for (const CandidateSplit& c : candidates) {
      builder.attempt([&] {
        const MorphAnalysis a = candidate_analysis(lexicon, c);
        builder.emit(a, candidate_route(lexicon, c, a), Source::kHeuristic);
      });
    }
  }
  builder.finalize();
  return result;
}

std::string format_tsv(const WordResult& result) {
  std::string out = result.surface + '\t';
  if (!result.ok()) return out + "ERROR:" + std::string(error_code_name(*result.error));
  for (std::size_t i = 0; i < result.prons.size(); ++i) {
    if (i > 0) out += ';';
    out += result.prons[i].rendered;
  }
  return out;
}

std::string format_json(const WordResult& result) {
  nlohmann::ordered_json j;
  j["surface"] = result.surface;
  if (!result.ok()) {
    j["error"] = std::string(error_code_name(*result.error));
    return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  }
  auto prons = nlohmann::ordered_json::array();
  for (const auto& p : result.prons) {
    nlohmann::ordered_json e;
    e["pron"] = p.rendered;
    e["stress_syllable"] = p.pron.stress() ? nlohmann::ordered_json(*p.pron.stress()) : nlohmann::ordered_json();
    e["syllables"] = p.syllables.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(p.syllables);
    e["source"] = std::string(source_name(p.source));
    e["analysis_tags"] = p.tags;
    e["root"] = p.root;
    prons.push_back(std::move(e));
  }
  j["prons"] = std::move(prons);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

BatchStats run_batch(const Lexicon& lexicon, std::istream& in, std::ostream& out, const BatchOptions& options) {
  BatchStats stats;
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::string> lines;
  std::vector<std::string> rendered;
  std::vector<char> failed;

  auto process = [&](std::size_t i) {
    const WordResult r = g2p_word(lexicon, lines[i], options.options);
    failed[i] = r.ok() ? 0 : 1;
    rendered[i] = options.format == Format::kJson ? format_json(r) : format_tsv(r);
  };

  auto flush = [&] {
    rendered.assign(lines.size(), {});
    failed.assign(lines.size(), 0);
    if (jobs == 1 || lines.size() < 2) {
      for (std::size_t i = 0; i < lines.size(); ++i) process(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
          for (std::size_t i = next++; i < lines.size(); i = next++) process(i);
        });
      }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << rendered[i] << '\n';
      stats.errors += static_cast<std::size_t>(failed[i]);
    }
    if (!out) throw std::ios_base::failure("write failed");
    stats.lines += lines.size();
    lines.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (lines.size() == kBatchChunk) flush();
  }
  if (in.bad()) throw std::ios_base::failure("read failed");
  flush();
  out.flush();
  if (!out) throw std::ios_base::failure("write failed");
  return stats;
}

}  // namespace tg2p

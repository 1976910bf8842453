#include "tg2p/morphology.hpp"

#include <algorithm>
#include <optional>

#include "tg2p/error.hpp"

namespace tg2p {

namespace {

Genre primary_genre(const RootEntry& e) {
  for (Genre g : {Genre::kAbbreviation, Genre::kForeign, Genre::kGeographical, Genre::kCompound, Genre::kProper}) {
    if (e.genres.contains(g)) return g;
  }
  return Genre::kOrdinary;
}

std::optional<std::u32string> devoiced_root(std::u32string_view stem) {
  if (stem.size() < 2) return std::nullopt;
  std::u32string out(stem);
  switch (stem.back()) {
    case U'b': out.back() = U'p'; break;
    case U'c': out.back() = U'ç'; break;
    case U'd': out.back() = U't'; break;
    case U'ğ': out.back() = U'k'; break;
    case U'g':
      if (stem[stem.size() - 2] != U'n') return std::nullopt;
      out.back() = U'k';
      break;
    default: return std::nullopt;
  }
  return out;
}

bool voicing_eligible(const RootEntry& e) {
  if (e.no_final_voicing || e.letters.size() < 2) return false;
  if (e.genres.contains(Genre::kAbbreviation)) return false;
  const char32_t last = e.letters.back();
  return last == U'p' || last == U'ç' || last == U't' || last == U'k';
}

bool has_state(const SuffixTemplate& t, std::string_view state) {
  return std::find(t.from_states.begin(), t.from_states.end(), state) != t.from_states.end();
}

std::string_view start_state(PartOfSpeech pos) { return pos == PartOfSpeech::kVerb ? "V" : "N"; }
std::string pos_tag(PartOfSpeech pos) { return pos == PartOfSpeech::kVerb ? "<V>" : "<N>"; }

// Depth-first search over morphotactic states; calls `emit` for every chain
// that spells `rest` exactly.
class ChainMatcher {
 public:
  using Chain = std::vector<RealizedSuffix>;

  ChainMatcher(const Lexicon& lex, bool characteristic_only, std::size_t max_depth)
      : lex_(lex), characteristic_only_(characteristic_only), max_depth_(max_depth) {}

  template <typename Emit>
  void run(std::string_view state, std::u32string_view stem, std::u32string_view rest, Emit&& emit) {
    Chain chain;
    std::u32string left(stem);
    dfs(state, left, rest, 0, chain, emit);
  }

 private:
  bool usable(const SuffixTemplate& t) const {
    return characteristic_only_ ? t.characteristic : !t.stem_only;
  }

  template <typename Emit>
  void dfs(std::string_view state, std::u32string& left, std::u32string_view rest, std::size_t offset, Chain& chain,
           Emit& emit) {
    if (offset == rest.size()) {
      emit(chain);
      return;
    }
    if (chain.size() >= max_depth_) return;
    for (const auto& tmpl : lex_.suffixes()) {
      if (!usable(tmpl) || !has_state(tmpl, state)) continue;
      RealizedSuffix r;
      try {
        r = realize_suffix(lex_, tmpl, left);
      } catch (const Error&) {
        continue;  // no harmony context after this stem
      }
      if (r.surface.empty()) continue;
      const std::size_t end = offset + r.surface.size();
      if (end > rest.size()) continue;
      const bool vowel_follows = end < rest.size() && is_vowel_letter(rest[end]);
      const bool can_soften = tmpl.softens && r.surface.back() == U'k';
      if (can_soften && vowel_follows) r.surface.back() = U'ğ';
      if (rest.compare(offset, r.surface.size(), r.surface) != 0) continue;
      const std::size_t mark = left.size();
      left += r.surface;
      chain.push_back(std::move(r));
      dfs(tmpl.to_state, left, rest, end, chain, emit);
      chain.pop_back();
      left.resize(mark);
    }
  }

  const Lexicon& lex_;
  bool characteristic_only_;
  std::size_t max_depth_;
};

MorphAnalysis make_analysis(const RootEntry& entry, PartOfSpeech pos, std::u32string_view stem,
                            std::u32string_view rest, const std::vector<RealizedSuffix>& chain) {
  MorphAnalysis a;
  a.entry = &entry;
  a.root = entry.letters;
  a.stem = stem;
  a.suffix_surface = rest;
  a.genre = primary_genre(entry);
  a.tags.push_back(pos_tag(pos));
  for (const auto& s : chain) a.tags.push_back(s.tmpl ? s.tmpl->tag : "<?>");
  a.suffixes = chain;
  return a;
}

}  // namespace

HarmonyContext stem_context(const Lexicon& lexicon, std::u32string_view stem) {
  HarmonyContext ctx = harmony_context(stem);
  if (ctx.last_vowel || stem.empty()) return ctx;
  const auto& names = lexicon.letter_names(Register::kTurkish).names;
  auto it = names.find(stem.back());
  if (it == names.end()) return ctx;
  return harmony_context(std::span<const Phoneme>(it->second));
}

RealizedSuffix realize_suffix(const Lexicon& lexicon, const SuffixTemplate& tmpl, std::u32string_view left) {
  RealizedSuffix r;
  r.tmpl = &tmpl;
  std::u32string acc(left);
  bool leading = true;
  for (const auto& tok : tmpl.tokens) {
    const HarmonyContext ctx = stem_context(lexicon, acc);
    char32_t out = 0;
    switch (tok.kind) {
      case MetaToken::Kind::kLiteral: out = tok.letter; break;
      case MetaToken::Kind::kMeta: out = resolve_meta(tok.meta, ctx); break;
      case MetaToken::Kind::kBuffer:
        if (tok.vowel_buffer) {
          if (!ctx.ends_in_vowel) out = resolve_meta(tok.meta, ctx);
        } else if (ctx.ends_in_vowel) {
          out = tok.letter;
        }
        if (out && leading) ++r.buffer_prefix;
        break;
    }
    if (tok.kind != MetaToken::Kind::kBuffer) leading = false;
    if (out) {
      r.surface.push_back(out);
      acc.push_back(out);
    }
  }
  return r;
}

std::vector<RealizedSuffix> realize_suffix_chain(const Lexicon& lexicon,
                                                 std::span<const SuffixTemplate* const> templates,
                                                 std::u32string_view root) {
  std::vector<RealizedSuffix> out;
  std::u32string left(root);
  for (const SuffixTemplate* t : templates) {
    RealizedSuffix r = realize_suffix(lexicon, *t, left);
    if (!out.empty() && !r.surface.empty() && is_vowel_letter(r.surface.front())) {
      auto& prev = out.back();
      if (prev.tmpl->softens && !prev.surface.empty() && prev.surface.back() == U'k') {
        prev.surface.back() = U'ğ';
        left.back() = U'ğ';
      }
    }
    left += r.surface;
    out.push_back(std::move(r));
  }
  return out;
}

std::u32string realize_suffix_chain_surface(const Lexicon& lexicon,
                                            std::span<const SuffixTemplate* const> templates,
                                            std::u32string_view root) {
  std::u32string out;
  for (const auto& r : realize_suffix_chain(lexicon, templates, root)) out += r.surface;
  return out;
}

std::u32string voiced_stem(std::u32string_view root) {
  std::u32string out(root);
  if (out.empty()) return out;
  switch (out.back()) {
    case U'p': out.back() = U'b'; break;
    case U'ç': out.back() = U'c'; break;
    case U't': out.back() = U'd'; break;
    case U'k': out.back() = (out.size() >= 2 && out[out.size() - 2] == U'n') ? U'g' : U'ğ'; break;
    default: break;
  }
  return out;
}

std::vector<MorphAnalysis> analyze(const Lexicon& lexicon, std::u32string_view surface) {
  std::vector<MorphAnalysis> out;
  ChainMatcher matcher(lexicon, false, kMaxChainDepth);

  auto run = [&](const RootEntry& entry, std::u32string_view stem, std::u32string_view rest, bool voiced,
                 bool narrowed) {
    for (PartOfSpeech pos : entry.pos) {
      matcher.run(start_state(pos), stem, rest, [&](const std::vector<RealizedSuffix>& chain) {
        MorphAnalysis a = make_analysis(entry, pos, stem, rest, chain);
        a.boundary_voicing = voiced;
        a.narrowed = narrowed;
        out.push_back(std::move(a));
      });
    }
  };

  for (std::size_t i = 1; i <= surface.size(); ++i) {
    const std::u32string_view prefix = surface.substr(0, i);
    const std::u32string_view rest = surface.substr(i);
    const bool vowel_next = !rest.empty() && is_vowel_letter(rest.front());

    for (const RootEntry* e : lexicon.find(prefix)) {
      if (vowel_next && voicing_eligible(*e)) continue;  // must surface voiced
      run(*e, prefix, rest, false, false);
    }
    if (vowel_next) {
      if (auto root = devoiced_root(prefix)) {
        for (const RootEntry* e : lexicon.find(*root)) {
          if (voicing_eligible(*e) && voiced_stem(e->letters) == prefix) run(*e, prefix, rest, true, false);
        }
      }
    }
    if (!rest.empty() && rest.front() == U'y' && prefix.back() == U'i') {
      std::u32string root(prefix);
      root.back() = U'e';
      for (const RootEntry* e : lexicon.find(root)) {
        if (e->narrows) run(*e, prefix, rest, false, true);
      }
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const MorphAnalysis& a, const MorphAnalysis& b) { return a.entry->index < b.entry->index; });
  return out;
}

std::vector<MorphAnalysis> analyze_split(const Lexicon& lexicon, std::u32string_view root,
                                         std::u32string_view suffix) {
  std::vector<MorphAnalysis> out;
  ChainMatcher matcher(lexicon, false, kMaxChainDepth);
  for (const RootEntry* e : lexicon.find(root)) {
    const std::size_t before = out.size();
    for (PartOfSpeech pos : e->pos) {
      matcher.run(start_state(pos), root, suffix, [&](const std::vector<RealizedSuffix>& chain) {
        out.push_back(make_analysis(*e, pos, root, suffix, chain));
      });
    }
    if (out.size() == before) {
      RealizedSuffix opaque;
      opaque.surface = suffix;
      std::vector<RealizedSuffix> chain;
      if (!suffix.empty()) chain.push_back(opaque);
      out.push_back(make_analysis(*e, e->pos.front(), root, suffix, chain));
    }
    for (std::size_t i = before; i < out.size(); ++i) out[i].apostrophe = !suffix.empty();
  }
  return out;
}

std::vector<std::vector<RealizedSuffix>> match_chains(const Lexicon& lexicon, std::u32string_view stem,
                                                      std::u32string_view rest, bool characteristic_only,
                                                      std::size_t max_depth) {
  std::vector<std::vector<RealizedSuffix>> out;
  ChainMatcher matcher(lexicon, characteristic_only, max_depth);
  matcher.run("N", stem, rest, [&](const std::vector<RealizedSuffix>& chain) { out.push_back(chain); });
  return out;
}

}  // namespace tg2p

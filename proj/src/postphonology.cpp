#include "tg2p/postphonology.hpp"

#include <algorithm>
#include <functional>

#include "tg2p/error.hpp"
#include "tg2p/utf8.hpp"

namespace tg2p {

namespace {

using Edit = std::function<AlignedPron(AlignedPron, std::size_t)>;

void erase_at(AlignedPron& p, std::size_t i, std::size_t n = 1) {
  p.phones.erase(p.phones.begin() + static_cast<std::ptrdiff_t>(i),
                 p.phones.begin() + static_cast<std::ptrdiff_t>(i + n));
  p.origin.erase(p.origin.begin() + static_cast<std::ptrdiff_t>(i),
                 p.origin.begin() + static_cast<std::ptrdiff_t>(i + n));
}

AlignedPron drop(AlignedPron p, std::size_t i) {
  erase_at(p, i);
  return p;
}

AlignedPron glide(AlignedPron p, std::size_t i) {
  p.phones[i] = Sym::j;
  return p;
}

AlignedPron lengthen_drop(AlignedPron p, std::size_t i) {
  p.phones[i - 1] = p.phones[i - 1].lengthened();
  erase_at(p, i);
  return p;
}

// V G V -> one long vowel carrying the quality of `target`.
Edit merge_into(Sym target) {
  return [target](AlignedPron p, std::size_t i) {
    p.phones[i - 1] = Phoneme(target).lengthened();
    erase_at(p, i, 2);
    return p;
  };
}

AlignedPron merge(AlignedPron p, std::size_t i) {
  return merge_into(p.phones[i - 1].shortened().sym())(std::move(p), i);
}

bool syllable_final(const Phones& phones, std::size_t i) {
  if (i + 1 == phones.size()) return true;
  const auto starts = syllable_starts(phones);
  return std::find(starts.begin(), starts.end(), i + 1) != starts.end();
}

// The edits for the G at `i`, one per realization.
std::vector<Edit> soft_g_rule(const Phones& ph, std::size_t i) {
  if (i == 0 || !ph[i - 1].is_vowel()) return {drop};
  const Phoneme prev = ph[i - 1];
  const bool final = syllable_final(ph, i);
  if (final && !prev.front()) return {lengthen_drop};
  if (final) return {glide};

  const bool has_next = i + 1 < ph.size() && ph[i + 1].is_vowel();
  if (!has_next) return {drop};
  const Phoneme next = ph[i + 1];
  const Sym a = prev.shortened().sym();
  const Sym b = next.shortened().sym();

  if (a == b && !prev.front()) return {merge};
  if (a == b) return {merge, glide};
  if (a == Sym::e && b == Sym::i) return {glide, merge_into(Sym::i)};
  if (a == Sym::i && b == Sym::e) return {glide};
  if (prev.rounded() && next.rounded()) return {drop};
  if (prev.rounded() && !next.rounded()) return {drop};
  if (a == Sym::a && b == Sym::I) return {drop, merge};
  if (a == Sym::I && b == Sym::a) return {drop};
  if (prev.front() || next.front()) return {glide};
  return {drop};
}

void push_unique(std::vector<AlignedPron>& out, AlignedPron p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

std::vector<AlignedPron> resolve_soft_g(const AlignedPron& pron) {
  std::vector<AlignedPron> done;
  std::vector<AlignedPron> work{pron};
  while (!work.empty()) {
    AlignedPron cur = std::move(work.back());
    work.pop_back();
    auto it = std::find(cur.phones.begin(), cur.phones.end(), Phoneme(Sym::G));
    if (it == cur.phones.end()) {
      push_unique(done, std::move(cur));
      continue;
    }
    const auto i = static_cast<std::size_t>(it - cur.phones.begin());
    const auto edits = soft_g_rule(cur.phones, i);
    if (edits.empty()) throw Error(ErrorCode::kUnresolvedSoftG, "no rule for G in " + to_string(cur.phones));
    // Pushed in reverse so the first realization is resolved (and emitted) first.
    for (auto e = edits.rbegin(); e != edits.rend(); ++e) work.push_back((*e)(cur, i));
  }
  for (const auto& p : done) {
    if (p.phones.empty()) throw Error(ErrorCode::kUnresolvedSoftG, "soft g left no phones");
  }
  return done;
}

std::vector<Pron> resolve_soft_g(const Pron& pron) {
  std::vector<Pron> out;
  for (const auto& p : resolve_soft_g(AlignedPron::root_only(pron.phones()))) out.emplace_back(p.phones);
  return out;
}

namespace {

bool is_l(Phoneme p) { return p.sym() == Sym::l || p.sym() == Sym::l5; }

void add_nl_variants(const AlignedPron& pron, std::vector<AlignedPron>& out) {
  AlignedPron all = pron;
  std::size_t hits = 0;
  for (std::size_t i = 0; i + 1 < pron.phones.size(); ++i) {
    if (pron.phones[i].sym() != Sym::n || !is_l(pron.phones[i + 1])) continue;
    AlignedPron v = pron;
    v.phones[i + 1] = Sym::n;
    all.phones[i + 1] = Sym::n;
    push_unique(out, std::move(v));
    ++hits;
  }
  if (hits > 1) push_unique(out, std::move(all));
}

void add_yor_variant(const AlignedPron& pron, const MorphAnalysis& analysis, std::vector<AlignedPron>& out) {
  for (std::size_t k = 0; k < analysis.suffixes.size(); ++k) {
    const SuffixTemplate* t = analysis.suffixes[k].tmpl;
    if (t == nullptr || t->tag.find("<prog>") == std::string::npos) continue;
    const auto& ph = pron.phones;
    for (std::size_t i = 2; i < ph.size(); ++i) {
      if (pron.origin[i].morph != static_cast<int>(k) || ph[i].sym() != Sym::r) continue;
      if (ph[i - 1].sym() != Sym::o || ph[i - 2].sym() != Sym::j) continue;
      if (i + 1 < ph.size() && ph[i + 1].is_vowel()) continue;
      push_unique(out, drop(pron, i));
    }
  }
}

void add_iy_variant(const AlignedPron& pron, std::vector<AlignedPron>& out) {
  AlignedPron v = pron;
  bool changed = false;
  for (std::size_t i = 0; i + 2 < v.phones.size(); ++i) {
    if (v.phones[i].sym() == Sym::i && v.phones[i + 1].sym() == Sym::j && v.phones[i + 2].is_vowel()) {
      v.phones[i] = Sym::i_;
      erase_at(v, i + 1);
      changed = true;
    }
  }
  if (changed) push_unique(out, std::move(v));
}

void add_listed_variants(const Lexicon& lexicon, const MorphAnalysis& analysis, std::vector<AlignedPron>& out) {
  const std::string surface = utf8::encode(analysis.stem + analysis.suffix_surface);
  std::string tags;
  for (const auto& t : analysis.tags) tags += t;
  for (const VariantEntry* v : lexicon.find_variants(surface)) {
    if (!v->required_tag.empty() && tags.find(v->required_tag) == std::string::npos) continue;
    for (const Pron& p : v->prons) push_unique(out, AlignedPron::root_only(p.phones()));
  }
}

}  // namespace

std::vector<AlignedPron> generate_variants(const Lexicon& lexicon, const AlignedPron& pron,
                                           const MorphAnalysis* analysis) {
  std::vector<AlignedPron> out{pron};
  add_nl_variants(pron, out);
  if (analysis != nullptr) add_yor_variant(pron, *analysis, out);
  add_iy_variant(pron, out);
  if (analysis != nullptr) add_listed_variants(lexicon, *analysis, out);
  return out;
}

}  // namespace tg2p

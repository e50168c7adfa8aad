#pragma once

// Feature tests that measure how strongly a stored item primes the
// current stimulus, and the weighted registry that scores them.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "loq/error.hpp"
#include "loq/token.hpp"

namespace loq {

enum class FeatureCategory { Semantic, Syntactic, Collocation, Grammatical, Acoustic };

inline const char* to_string(FeatureCategory c) {
  switch (c) {
    case FeatureCategory::Semantic: return "semantic";
    case FeatureCategory::Syntactic: return "syntactic";
    case FeatureCategory::Collocation: return "collocation";
    case FeatureCategory::Grammatical: return "grammatical";
    case FeatureCategory::Acoustic: return "acoustic";
  }
  return "semantic";
}

inline FeatureCategory parse_category(std::string_view s) {
  for (auto c : {FeatureCategory::Semantic, FeatureCategory::Syntactic, FeatureCategory::Collocation,
                 FeatureCategory::Grammatical, FeatureCategory::Acoustic})
    if (s == to_string(c)) return c;
  throw ConfigError("unknown feature category '" + std::string(s) + "'");
}

// Abstain means the test lacked the lexicon data it needs.
enum class Verdict { NoMatch, Match, Abstain };

namespace features {

namespace detail {

inline Verdict bool_verdict(bool b) { return b ? Verdict::Match : Verdict::NoMatch; }

template <class T>
Verdict optional_equal(const std::optional<T>& a, const std::optional<T>& b) {
  return bool_verdict(a && b && *a == *b);
}

inline Verdict lexical_equal(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return Verdict::Abstain;
  return bool_verdict(a == b);
}

inline Verdict any_shared(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return Verdict::Abstain;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return Verdict::Match;
  return Verdict::NoMatch;
}

inline bool is_vowel(const std::string& ph) {
  static const std::set<std::string> vowels = {"aa", "ae", "ah", "ao", "aw", "ay", "eh", "er",
                                               "ey", "ih", "iy", "ow", "oy", "uh", "uw"};
  return vowels.count(ph) > 0;
}

// Phonemes from the last vowel onward; empty when there is no vowel.
inline std::vector<std::string> rhyme_of(const std::vector<std::string>& phonemes) {
  for (std::size_t i = phonemes.size(); i-- > 0;)
    if (is_vowel(phonemes[i])) return {phonemes.begin() + static_cast<std::ptrdiff_t>(i), phonemes.end()};
  return {};
}

inline bool is_argument(const std::optional<Role>& r) {
  return r && (*r == Role::Subject || *r == Role::Object);
}

}  // namespace detail

using Predicate = Verdict (*)(const AnnotatedToken& stimulus, const AnnotatedToken& stored);

struct Definition {
  std::string_view id;
  Predicate test;
};

inline Verdict coref_identity(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.coref, t.coref);
}
inline Verdict lemma_identity(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::lexical_equal(s.lemma, t.lemma);
}
inline Verdict synset_identity(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.synsets.empty() || t.synsets.empty()) return Verdict::Abstain;
  return detail::bool_verdict(s.synsets.front() == t.synsets.front());
}
inline Verdict synset_overlap(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::any_shared(s.synsets, t.synsets);
}
inline Verdict hypernym_class(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::any_shared(s.hypernyms, t.hypernyms);
}
inline Verdict morph_root(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (!s.root || !t.root) return Verdict::Abstain;
  return detail::bool_verdict(*s.root == *t.root);
}
inline Verdict same_pos(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::lexical_equal(s.pos, t.pos);
}
inline Verdict phrase_type(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.phrase_tags.empty() || t.phrase_tags.empty()) return Verdict::Abstain;
  return detail::bool_verdict(s.phrase_tags.front() == t.phrase_tags.front());
}
inline Verdict structural_parallelism(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::lexical_equal(s.parallelism_signature, t.parallelism_signature);
}
inline Verdict attachment_site(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.attachment_site, t.attachment_site);
}
inline Verdict empty_category_link(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.empty_category && *s.empty_category == t.index) return Verdict::Match;
  return detail::optional_equal(s.empty_category, t.empty_category);
}
inline Verdict embedding_depth(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::bool_verdict(s.embedding_depth == t.embedding_depth);
}
// The stored word was followed, elsewhere in the text, by the stimulus lemma.
inline Verdict successor_bigram(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.lemma.empty()) return Verdict::Abstain;
  return detail::bool_verdict(t.successor_lemma && *t.successor_lemma == s.lemma && t.successor_index != s.index);
}
inline Verdict predecessor_bigram(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.predecessor_lemma, t.predecessor_lemma);
}
inline Verdict multiword_expression(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.mwe, t.mwe);
}
// The stimulus lemma occurs in the stored word's sentence, not counting the
// stored word itself or the stimulus occurrence.
inline Verdict sentence_cooccurrence(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.lemma.empty() || t.sentence_lemmas.empty()) return Verdict::Abstain;
  auto n = std::count(t.sentence_lemmas.begin(), t.sentence_lemmas.end(), s.lemma);
  if (t.lemma == s.lemma) --n;
  if (t.sentence == s.sentence && s.pos_class == PosClass::Open) --n;
  return detail::bool_verdict(n > 0);
}
// Unannotated roles never match.
inline Verdict grammatical_role(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.role, t.role);
}
// Same role and word class in different clauses.
inline Verdict role_class_parallelism(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (!s.role || !t.role) return Verdict::NoMatch;
  return detail::bool_verdict(*s.role == *t.role && s.pos_class == t.pos_class &&
                              s.innermost_grammatical() != t.innermost_grammatical());
}
inline Verdict same_clause(const AnnotatedToken& s, const AnnotatedToken& t) {
  return detail::optional_equal(s.innermost_grammatical(), t.innermost_grammatical());
}
inline Verdict verb_argument(const AnnotatedToken& s, const AnnotatedToken& t) {
  const bool pair = (s.role == Role::Verb && detail::is_argument(t.role)) ||
                    (t.role == Role::Verb && detail::is_argument(s.role));
  return detail::bool_verdict(pair && s.innermost_grammatical() &&
                              s.innermost_grammatical() == t.innermost_grammatical());
}
inline Verdict homophone(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.phonemes.empty() || t.phonemes.empty()) return Verdict::Abstain;
  return detail::bool_verdict(s.phonemes == t.phonemes);
}
inline Verdict onset_phoneme(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.phonemes.empty() || t.phonemes.empty()) return Verdict::Abstain;
  return detail::bool_verdict(s.phonemes.front() == t.phonemes.front());
}
inline Verdict rhyme(const AnnotatedToken& s, const AnnotatedToken& t) {
  auto a = detail::rhyme_of(s.phonemes);
  auto b = detail::rhyme_of(t.phonemes);
  if (a.empty() || b.empty()) return Verdict::Abstain;
  return detail::bool_verdict(a == b);
}
// Lexical stress contour, e.g. "10" vs "01".
inline Verdict stress_pattern(const AnnotatedToken& s, const AnnotatedToken& t) {
  if (s.stress.empty() || t.stress.empty()) return Verdict::Abstain;
  return detail::bool_verdict(s.stress == t.stress);
}

inline constexpr std::array<Definition, 24> catalogue{{
    {"coref-identity", coref_identity},
    {"lemma-identity", lemma_identity},
    {"synset-identity", synset_identity},
    {"synset-overlap", synset_overlap},
    {"hypernym-class", hypernym_class},
    {"morph-root", morph_root},
    {"same-pos", same_pos},
    {"phrase-type", phrase_type},
    {"structural-parallelism", structural_parallelism},
    {"attachment-site", attachment_site},
    {"empty-category-link", empty_category_link},
    {"embedding-depth", embedding_depth},
    {"successor-bigram", successor_bigram},
    {"predecessor-bigram", predecessor_bigram},
    {"multiword-expression", multiword_expression},
    {"sentence-cooccurrence", sentence_cooccurrence},
    {"grammatical-role", grammatical_role},
    {"role-class-parallelism", role_class_parallelism},
    {"same-clause", same_clause},
    {"verb-argument", verb_argument},
    {"homophone", homophone},
    {"onset-phoneme", onset_phoneme},
    {"rhyme", rhyme},
    {"stress-pattern", stress_pattern},
}};

inline Predicate find(std::string_view id) {
  for (const auto& d : catalogue)
    if (d.id == id) return d.test;
  return nullptr;
}

}  // namespace features

struct FeatureTest {
  std::string id;
  FeatureCategory category = FeatureCategory::Semantic;
  double weight = 0.0;
  // Counts only when some non-parasitic test also fired.
  bool parasitic = false;
  // Fires a match on its own regardless of frequency scaling.
  bool definitive = false;

  friend bool operator==(const FeatureTest&, const FeatureTest&) = default;
};

struct FeatureRegistry {
  std::vector<FeatureTest> tests;
  double threshold = 1.0;

  void validate() const {
    if (!(threshold > 0.0) || !std::isfinite(threshold)) throw ConfigError("threshold must be a positive number");
    std::set<std::string> seen;
    for (const auto& t : tests) {
      if (!features::find(t.id)) throw ConfigError("unknown feature test '" + t.id + "'");
      if (!seen.insert(t.id).second) throw ConfigError("duplicate feature test '" + t.id + "'");
      if (!(t.weight >= 0.0) || !std::isfinite(t.weight))
        throw ConfigError("feature '" + t.id + "' has a negative weight");
      if (t.parasitic && t.definitive) throw ConfigError("feature '" + t.id + "' cannot be parasitic and definitive");
      if (t.definitive && t.weight < threshold)
        throw ConfigError("definitive feature '" + t.id + "' weighs less than the threshold");
    }
  }

  const FeatureTest* find(std::string_view id) const {
    for (const auto& t : tests)
      if (t.id == id) return &t;
    return nullptr;
  }

  static FeatureRegistry defaults() {
    using C = FeatureCategory;
    FeatureRegistry r;
    r.threshold = 1.0;
    r.tests = {
        {"coref-identity", C::Semantic, 1.0, false, true},
        {"lemma-identity", C::Semantic, 0.40, false, false},
        {"synset-identity", C::Semantic, 0.35, false, false},
        {"synset-overlap", C::Semantic, 0.25, false, false},
        {"hypernym-class", C::Semantic, 0.15, false, false},
        {"morph-root", C::Semantic, 0.15, false, false},
        {"same-pos", C::Syntactic, 0.05, true, false},
        {"phrase-type", C::Syntactic, 0.10, false, false},
        {"structural-parallelism", C::Syntactic, 0.10, true, false},
        {"attachment-site", C::Syntactic, 0.10, false, false},
        {"empty-category-link", C::Syntactic, 0.30, false, false},
        {"embedding-depth", C::Syntactic, 0.05, true, false},
        {"successor-bigram", C::Collocation, 0.20, false, false},
        {"predecessor-bigram", C::Collocation, 0.20, false, false},
        {"multiword-expression", C::Collocation, 0.25, false, false},
        {"sentence-cooccurrence", C::Collocation, 0.10, false, false},
        {"grammatical-role", C::Grammatical, 0.15, false, false},
        {"role-class-parallelism", C::Grammatical, 0.15, false, false},
        {"same-clause", C::Grammatical, 0.15, false, false},
        {"verb-argument", C::Grammatical, 0.20, false, false},
        {"homophone", C::Acoustic, 0.25, false, false},
        {"onset-phoneme", C::Acoustic, 0.05, false, false},
        {"rhyme", C::Acoustic, 0.10, false, false},
        {"stress-pattern", C::Acoustic, 0.05, false, false},
    };
    return r;
  }

  friend bool operator==(const FeatureRegistry&, const FeatureRegistry&) = default;
};

}  // namespace loq

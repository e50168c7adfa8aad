#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace loq {

enum class TokenKind { Word, SyntacticClause, GrammaticalClause };
enum class PosClass { Open, Closed };
enum class Role { Subject, Verb, Object, Other };

inline bool is_clause(TokenKind k) { return k != TokenKind::Word; }

inline const char* to_string(Role r) {
  switch (r) {
    case Role::Subject: return "subject";
    case Role::Verb: return "verb";
    case Role::Object: return "object";
    case Role::Other: return "other";
  }
  return "other";
}

// One unit of the bottom-up stream: a word, or a clause token emitted right
// after the word that closes it. Fields a clause cannot carry stay empty.
struct AnnotatedToken {
  std::size_t index = 0;
  TokenKind kind = TokenKind::Word;
  std::string surface;
  std::string lemma;
  std::string pos;
  PosClass pos_class = PosClass::Open;
  std::vector<std::string> phrase_tags;
  std::optional<Role> role;

  // Enclosing clause ids, outermost first. A clause token lists its
  // ancestors followed by itself.
  std::vector<std::string> syntactic_clauses;
  std::vector<std::string> grammatical_clauses;

  std::optional<std::string> coref;
  // Stream index of the antecedent; set only on empty-category words.
  std::optional<std::size_t> empty_category;
  std::optional<std::string> attachment_site;
  std::vector<std::string> synsets;
  std::vector<std::string> hypernyms;
  std::optional<std::string> root;
  std::vector<std::string> phonemes;
  std::string stress;
  double freq_per_million = 0.0;
  int sentence = 0;
  std::optional<std::string> mwe;

  // Derived by the corpus reader.
  std::string parallelism_signature;
  int embedding_depth = 0;
  std::optional<std::string> predecessor_lemma;  // open-class neighbours only
  std::optional<std::string> successor_lemma;
  std::optional<std::size_t> successor_index;
  std::vector<std::string> sentence_lemmas;  // open-class lemmas of the sentence

  // Clause tokens: clause id, label and member word indices.
  std::string clause_id;
  std::vector<std::size_t> members;

  bool is_word() const { return kind == TokenKind::Word; }
  bool is_empty_category() const { return empty_category.has_value(); }
  // Words that are actually spoken.
  bool is_uttered() const { return is_word() && !is_empty_category(); }

  int syllables() const {
    int n = 0;
    for (char c : stress)
      if (c >= '0' && c <= '2') ++n;
    return n;
  }

  std::optional<std::string> innermost_grammatical() const {
    if (grammatical_clauses.empty()) return std::nullopt;
    return grammatical_clauses.back();
  }

  friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

inline bool comparable(const AnnotatedToken& a, const AnnotatedToken& b) {
  return a.is_word() == b.is_word();
}

struct TokenStream {
  std::vector<AnnotatedToken> tokens;

  std::size_t size() const { return tokens.size(); }
  const AnnotatedToken& operator[](std::size_t i) const { return tokens[i]; }

  std::size_t word_count() const {
    std::size_t n = 0;
    for (const auto& t : tokens) n += t.is_uttered() ? 1 : 0;
    return n;
  }

  friend bool operator==(const TokenStream&, const TokenStream&) = default;
};

}  // namespace loq

#pragma once

// Line-record corpus format and the bottom-up token stream built from it.
//
//   #loq-corpus 1
//   @entity B            coreference chain that words may point at
//   @sentence            starts the next sentence
//   <surface> key=value ...
//
// Word keys: lemma pos class phrase role coref ec attach syn hyper root ph
// stress freq mwe open close. List values are comma separated. Clause ids
// start with S (syntactic) or G (grammatical); `open` takes id[:LABEL]
// entries outermost first, `close` takes ids innermost first. `ec` marks an
// empty category and names the 0-based word number of its antecedent.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "loq/error.hpp"
#include "loq/token.hpp"

namespace loq {

inline constexpr std::string_view corpus_header = "#loq-corpus 1";

struct Corpus {
  TokenStream stream;
  std::vector<std::string> entities;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

namespace corpus_detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct OpenClause {
  std::string id;
  std::string label;
  TokenKind kind;
  std::vector<std::size_t> members;
  std::size_t line;
};

inline TokenKind clause_kind(const std::string& id, std::size_t line) {
  if (id.size() < 2 || (id[0] != 'S' && id[0] != 'G'))
    throw ValidationError(line, "clause id '" + id + "' must start with S or G and have a name");
  return id[0] == 'S' ? TokenKind::SyntacticClause : TokenKind::GrammaticalClause;
}

// Tag sequence of a clause's words, with runs collapsed.
inline std::string signature_of(const std::vector<std::size_t>& members, const std::vector<AnnotatedToken>& tokens) {
  std::vector<std::string> tags;
  for (auto m : members) {
    const auto& t = tokens[m];
    if (t.phrase_tags.empty()) continue;
    if (tags.empty() || tags.back() != t.phrase_tags.front()) tags.push_back(t.phrase_tags.front());
  }
  return join(tags, ' ');
}

}  // namespace corpus_detail

inline Corpus parse_corpus(std::istream& in) {
  using namespace corpus_detail;
  Corpus corpus;
  auto& tokens = corpus.stream.tokens;
  std::set<std::string> entities;
  std::vector<OpenClause> stack;
  std::set<std::string> clause_ids;
  std::map<std::string, std::vector<std::size_t>> members_of;  // clause id -> word stream indices
  std::vector<std::pair<std::string, std::size_t>> attach_refs;
  std::vector<std::size_t> word_index;  // word number -> stream index
  int sentence = 0;
  bool header_seen = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != corpus_header)
        throw ValidationError(line_no, "expected header '" + std::string(corpus_header) + "'");
      header_seen = true;
      continue;
    }
    if (line[0] == '#') continue;
    if (line[0] == '@') {
      std::istringstream ss(line);
      std::string directive, arg;
      ss >> directive;
      if (directive == "@sentence") {
        ++sentence;
      } else if (directive == "@entity") {
        if (!(ss >> arg)) throw ValidationError(line_no, "@entity needs an id");
        if (!entities.insert(arg).second) throw ValidationError(line_no, "entity '" + arg + "' declared twice");
        corpus.entities.push_back(arg);
      } else {
        throw ValidationError(line_no, "unknown directive '" + directive + "'");
      }
      continue;
    }

    std::istringstream ss(line);
    AnnotatedToken w;
    w.kind = TokenKind::Word;
    ss >> w.surface;
    w.sentence = sentence;
    std::vector<std::string> opens, closes;
    std::set<std::string> seen_keys;
    bool has_class = false;
    std::optional<std::size_t> ec_word;
    std::string field;
    while (ss >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos || eq == 0) throw ValidationError(line_no, "malformed field '" + field + "'");
      const std::string key = field.substr(0, eq);
      const std::string value = field.substr(eq + 1);
      if (!seen_keys.insert(key).second) throw ValidationError(line_no, "duplicate key '" + key + "'");
      if (value.empty()) throw ValidationError(line_no, "empty value for '" + key + "'");
      if (key == "lemma") {
        w.lemma = value;
      } else if (key == "pos") {
        w.pos = value;
      } else if (key == "class") {
        if (value == "open") w.pos_class = PosClass::Open;
        else if (value == "closed") w.pos_class = PosClass::Closed;
        else throw ValidationError(line_no, "class must be open or closed");
        has_class = true;
      } else if (key == "phrase") {
        w.phrase_tags = split(value, ',');
      } else if (key == "role") {
        if (value == "subject") w.role = Role::Subject;
        else if (value == "verb") w.role = Role::Verb;
        else if (value == "object") w.role = Role::Object;
        else if (value == "other") w.role = Role::Other;
        else throw ValidationError(line_no, "unknown role '" + value + "'");
      } else if (key == "coref") {
        if (!entities.count(value)) throw ValidationError(line_no, "coreference to undeclared entity '" + value + "'");
        w.coref = value;
      } else if (key == "ec") {
        std::size_t n = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || p != value.data() + value.size())
          throw ValidationError(line_no, "ec must be a word number");
        if (n >= word_index.size())
          throw ValidationError(line_no, "empty category refers to word " + value + ", which does not precede it");
        ec_word = n;
      } else if (key == "attach") {
        w.attachment_site = value;
        attach_refs.emplace_back(value, line_no);
      } else if (key == "syn") {
        w.synsets = split(value, ',');
      } else if (key == "hyper") {
        w.hypernyms = split(value, ',');
      } else if (key == "root") {
        w.root = value;
      } else if (key == "ph") {
        w.phonemes = split(value, ',');
      } else if (key == "stress") {
        if (value.find_first_not_of("012") != std::string::npos)
          throw ValidationError(line_no, "stress pattern may contain only 0, 1 and 2");
        w.stress = value;
      } else if (key == "freq") {
        double f = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), f);
        if (ec != std::errc() || p != value.data() + value.size() || f < 0)
          throw ValidationError(line_no, "freq must be a non-negative number");
        w.freq_per_million = f;
      } else if (key == "mwe") {
        w.mwe = value;
      } else if (key == "open") {
        opens = split(value, ',');
      } else if (key == "close") {
        closes = split(value, ',');
      } else {
        throw ValidationError(line_no, "unknown key '" + key + "'");
      }
    }
    if (w.lemma.empty() || w.pos.empty() || !has_class)
      throw ValidationError(line_no, "word record needs lemma, pos and class");
    if (ec_word) {
      w.empty_category = word_index[*ec_word];
      if (!w.phonemes.empty()) throw ValidationError(line_no, "empty category cannot have phonemes");
    } else {
      if (w.phonemes.empty()) throw ValidationError(line_no, "word needs phonemes (ph=)");
      if (w.syllables() < 1) throw ValidationError(line_no, "word needs a stress pattern with at least one syllable");
    }

    for (const auto& entry : opens) {
      const auto parts = split(entry, ':');
      if (parts.empty() || parts.size() > 2 || parts[0].empty())
        throw ValidationError(line_no, "malformed clause opener '" + entry + "'");
      const TokenKind kind = clause_kind(parts[0], line_no);
      if (!clause_ids.insert(parts[0]).second) throw ValidationError(line_no, "clause '" + parts[0] + "' reused");
      stack.push_back({parts[0], parts.size() == 2 ? parts[1] : std::string(1, parts[0][0]), kind, {}, line_no});
    }

    w.index = tokens.size();
    w.embedding_depth = static_cast<int>(stack.size());
    for (auto& c : stack) {
      c.members.push_back(w.index);
      (c.kind == TokenKind::SyntacticClause ? w.syntactic_clauses : w.grammatical_clauses).push_back(c.id);
    }
    word_index.push_back(w.index);
    tokens.push_back(std::move(w));

    for (const auto& id : closes) {
      if (stack.empty() || stack.back().id != id) {
        const std::string inner = stack.empty() ? "none" : stack.back().id;
        throw ValidationError(line_no, "clause '" + id + "' closed out of order (innermost open clause is " + inner + ")");
      }
      OpenClause c = std::move(stack.back());
      stack.pop_back();
      AnnotatedToken ct;
      ct.index = tokens.size();
      ct.kind = c.kind;
      ct.clause_id = c.id;
      ct.surface = c.id;
      ct.pos = c.label;
      ct.phrase_tags = {c.label};
      ct.sentence = tokens[c.members.back()].sentence;
      ct.embedding_depth = static_cast<int>(stack.size());
      for (const auto& a : stack)
        (a.kind == TokenKind::SyntacticClause ? ct.syntactic_clauses : ct.grammatical_clauses).push_back(a.id);
      (c.kind == TokenKind::SyntacticClause ? ct.syntactic_clauses : ct.grammatical_clauses).push_back(c.id);
      if (!stack.empty()) ct.attachment_site = stack.back().id;
      ct.members = c.members;
      members_of[c.id] = c.members;
      tokens.push_back(std::move(ct));
    }
  }
  if (!header_seen) throw ValidationError("empty corpus: missing header");
  if (!stack.empty())
    throw ValidationError(stack.back().line, "clause '" + stack.back().id + "' opened and never closed");
  for (const auto& [id, ln] : attach_refs)
    if (!clause_ids.count(id)) throw ValidationError(ln, "attachment to unknown clause '" + id + "'");

  // Derived fields.
  std::vector<std::size_t> uttered;
  std::map<int, std::vector<std::string>> sentence_lemmas;
  for (const auto& t : tokens)
    if (t.is_uttered()) {
      uttered.push_back(t.index);
      if (t.pos_class == PosClass::Open) sentence_lemmas[t.sentence].push_back(t.lemma);
    }
  for (std::size_t i = 0; i < uttered.size(); ++i) {
    auto& t = tokens[uttered[i]];
    if (i > 0 && tokens[uttered[i - 1]].pos_class == PosClass::Open) t.predecessor_lemma = tokens[uttered[i - 1]].lemma;
    if (i + 1 < uttered.size() && tokens[uttered[i + 1]].pos_class == PosClass::Open) {
      t.successor_lemma = tokens[uttered[i + 1]].lemma;
      t.successor_index = uttered[i + 1];
    }
  }
  for (auto& t : tokens) {
    if (t.is_word()) {
      if (t.is_uttered()) t.sentence_lemmas = sentence_lemmas[t.sentence];
      std::optional<std::string> minimal = t.innermost_grammatical();
      if (!minimal && !t.syntactic_clauses.empty()) minimal = t.syntactic_clauses.back();
      if (minimal) t.parallelism_signature = signature_of(members_of.at(*minimal), tokens);
    } else {
      t.parallelism_signature = signature_of(t.members, tokens);
    }
  }
  return corpus;
}

inline Corpus parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

inline Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus '" + path + "'");
  return parse_corpus(in);
}

inline std::string serialize_corpus(const Corpus& corpus) {
  using corpus_detail::format_number;
  using corpus_detail::join;
  const auto& tokens = corpus.stream.tokens;
  std::map<std::size_t, std::size_t> word_number;
  for (const auto& t : tokens)
    if (t.is_word()) word_number.emplace(t.index, word_number.size());

  // Clauses opened at each word, outermost first.
  std::map<std::size_t, std::vector<const AnnotatedToken*>> opened_at;
  for (const auto& t : tokens)
    if (!t.is_word() && !t.members.empty()) opened_at[t.members.front()].push_back(&t);
  for (auto& [_, v] : opened_at)
    std::stable_sort(v.begin(), v.end(),
                     [](const AnnotatedToken* a, const AnnotatedToken* b) { return a->embedding_depth < b->embedding_depth; });

  std::string out(corpus_header);
  out += '\n';
  for (const auto& e : corpus.entities) out += "@entity " + e + "\n";
  int sentence = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (!t.is_word()) continue;
    for (; sentence < t.sentence; ++sentence) out += "@sentence\n";
    out += t.surface;
    auto put = [&](const char* key, const std::string& v) {
      out += ' ';
      out += key;
      out += '=';
      out += v;
    };
    put("lemma", t.lemma);
    put("pos", t.pos);
    put("class", t.pos_class == PosClass::Open ? "open" : "closed");
    if (!t.phrase_tags.empty()) put("phrase", join(t.phrase_tags, ','));
    if (t.role) put("role", to_string(*t.role));
    if (t.coref) put("coref", *t.coref);
    if (t.empty_category) put("ec", std::to_string(word_number.at(*t.empty_category)));
    if (t.attachment_site) put("attach", *t.attachment_site);
    if (!t.synsets.empty()) put("syn", join(t.synsets, ','));
    if (!t.hypernyms.empty()) put("hyper", join(t.hypernyms, ','));
    if (t.root) put("root", *t.root);
    if (!t.phonemes.empty()) put("ph", join(t.phonemes, ','));
    if (!t.stress.empty()) put("stress", t.stress);
    put("freq", format_number(t.freq_per_million));
    if (t.mwe) put("mwe", *t.mwe);
    if (auto it = opened_at.find(t.index); it != opened_at.end()) {
      std::vector<std::string> entries;
      for (const auto* c : it->second)
        entries.push_back(c->pos == std::string(1, c->clause_id[0]) ? c->clause_id : c->clause_id + ":" + c->pos);
      put("open", join(entries, ','));
    }
    std::vector<std::string> closes;
    for (std::size_t j = i + 1; j < tokens.size() && !tokens[j].is_word(); ++j) closes.push_back(tokens[j].clause_id);
    if (!closes.empty()) put("close", join(closes, ','));
    out += '\n';
  }
  return out;
}

}  // namespace loq

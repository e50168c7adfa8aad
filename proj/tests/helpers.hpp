#pragma once

#include <string>
#include <vector>

#include "loq/loq.hpp"

namespace loq::test {

inline AnnotatedToken word(std::string lemma, std::size_t index = 0) {
  AnnotatedToken t;
  t.index = index;
  t.surface = lemma;
  t.lemma = std::move(lemma);
  t.pos = "NN";
  t.phonemes = {"x"};
  t.stress = "1";
  return t;
}

inline AnnotatedToken clause(std::string id, TokenKind kind, std::vector<std::size_t> members, std::size_t index) {
  AnnotatedToken t;
  t.index = index;
  t.kind = kind;
  t.surface = t.clause_id = std::move(id);
  t.members = std::move(members);
  return t;
}

// One feature test with weight 1 against threshold 1.
inline FeatureRegistry single(const std::string& id) {
  return FeatureRegistry{{FeatureTest{id, FeatureCategory::Semantic, 1.0, false, false}}, 1.0};
}

inline std::string data_path(const std::string& name) { return std::string(LOQ_DATA_DIR) + "/" + name; }

}  // namespace loq::test

#pragma once

// Scoring a stimulus against stored items and the outward, threshold-stopped
// search that classifies it as given or new.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loq/awm.hpp"
#include "loq/features.hpp"
#include "loq/token.hpp"

namespace loq {

using Memory = MemorySpace<AnnotatedToken>;

struct ComparisonResult {
  ItemId item = 0;
  std::vector<std::string> fired;
  double raw_score = 0.0;
  double scaled_score = 0.0;
  bool primed = false;
  int abstentions = 0;
  int distance = 0;
};

enum class InfoStatus { Given, New };

struct MatchOutcome {
  InfoStatus status = InfoStatus::New;
  int stop_distance = 0;
  int comparisons = 0;
  std::vector<ComparisonResult> results;
  std::optional<ItemId> matched;

  bool given() const { return status == InfoStatus::Given; }
  // One time step per city block searched, a quarter step per comparison.
  double search_time(double steps_per_comparison = 0.25) const {
    return stop_distance + steps_per_comparison * comparisons;
  }
};

inline double scale_by_prior(double raw, double freq_per_million) {
  if (freq_per_million < 0.0) throw std::invalid_argument("frequency must be non-negative");
  return raw / (1.0 + std::log10(1.0 + freq_per_million));
}

inline ComparisonResult compare(const AnnotatedToken& stimulus, const AnnotatedToken& stored,
                                const FeatureRegistry& registry) {
  if (!comparable(stimulus, stored))
    throw std::invalid_argument("word tokens compare only with words, clause tokens only with clauses");
  ComparisonResult r;
  double core = 0.0;
  double parasitic = 0.0;
  bool any_core = false;
  bool definitive = false;
  for (const auto& t : registry.tests) {
    const auto predicate = features::find(t.id);
    if (!predicate) throw ConfigError("unknown feature test '" + t.id + "'");
    const Verdict v = predicate(stimulus, stored);
    if (v == Verdict::Abstain) {
      ++r.abstentions;
      continue;
    }
    if (v == Verdict::NoMatch) continue;
    r.fired.push_back(t.id);
    if (t.parasitic) {
      parasitic += t.weight;
    } else {
      any_core = true;
      core += t.weight;
      definitive = definitive || t.definitive;
    }
  }
  r.raw_score = any_core ? core + parasitic : 0.0;
  r.primed = r.raw_score > 0.0;
  r.scaled_score = scale_by_prior(r.raw_score, stimulus.freq_per_million);
  if (definitive) r.scaled_score = std::max(r.scaled_score, registry.threshold);
  return r;
}

// Pure over memory: annotations are left for the caller to update.
inline MatchOutcome search_and_match(const Memory& space, const Coordinates& center, int radius,
                                     const AnnotatedToken& stimulus, const FeatureRegistry& registry) {
  const SearchRegion region = enumerate_region(center, radius, space.lattice());
  MatchOutcome out;
  out.stop_distance = radius + 1;
  for (std::size_t d = 0; d < region.shells.size(); ++d) {
    for (const auto& cell : region.shells[d]) {
      for (ItemId id : space.cell(cell)) {
        const auto& stored = space.item(id).payload;
        if (!comparable(stimulus, stored)) continue;
        auto r = compare(stimulus, stored, registry);
        r.item = id;
        r.distance = static_cast<int>(d);
        ++out.comparisons;
        const bool hit = r.scaled_score >= registry.threshold;
        out.results.push_back(std::move(r));
        if (hit) {
          out.status = InfoStatus::Given;
          out.stop_distance = static_cast<int>(d);
          out.matched = id;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace loq

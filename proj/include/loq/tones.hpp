#pragma once

// L/H region state and the pitch accent derived from how a stimulus changes
// it.

#include <array>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "loq/awm.hpp"
#include "loq/match.hpp"
#include "loq/token.hpp"

namespace loq {

struct RegionTally {
  int count_l = 0;
  int count_h = 0;
  int total = 0;

  friend bool operator==(const RegionTally&, const RegionTally&) = default;
};

inline RegionTally tally(std::span<const RegionEntry> snapshot) {
  RegionTally t;
  for (const auto& e : snapshot) {
    if (e.annotation == Annotation::L) ++t.count_l;
    if (e.annotation == Annotation::H) ++t.count_h;
  }
  t.total = t.count_l + t.count_h;
  return t;
}

inline RegionTally tally(std::span<const Annotation> annotations) {
  RegionTally t;
  for (auto a : annotations) {
    if (a == Annotation::L) ++t.count_l;
    if (a == Annotation::H) ++t.count_h;
  }
  t.total = t.count_l + t.count_h;
  return t;
}

inline Tone majority_tone(const RegionTally& t, Tone fallback) {
  if (t.count_l > t.count_h) return Tone::L;
  if (t.count_h > t.count_l) return Tone::H;
  return fallback;
}

enum class PitchAccent { Unaccented, LStar, HStar, LPlusHStar, LStarPlusH, HPlusLStar, HStarPlusL };

inline constexpr std::array<PitchAccent, 7> all_accents{
    PitchAccent::Unaccented, PitchAccent::LStar,      PitchAccent::HStar,      PitchAccent::LPlusHStar,
    PitchAccent::LStarPlusH, PitchAccent::HPlusLStar, PitchAccent::HStarPlusL};

inline std::string_view to_string(PitchAccent a) {
  switch (a) {
    case PitchAccent::Unaccented: return "_";
    case PitchAccent::LStar: return "L*";
    case PitchAccent::HStar: return "H*";
    case PitchAccent::LPlusHStar: return "L+H*";
    case PitchAccent::LStarPlusH: return "L*+H";
    case PitchAccent::HPlusLStar: return "H+L*";
    case PitchAccent::HStarPlusL: return "H*+L";
  }
  return "_";
}

inline bool is_bitonal(PitchAccent a) {
  return a != PitchAccent::Unaccented && a != PitchAccent::LStar && a != PitchAccent::HStar;
}

struct AccentForm {
  Tone first = Tone::H;
  Tone second = Tone::H;
  int main_tone = 1;  // 1 or 2

  PitchAccent render() const {
    if (first == second) return first == Tone::L ? PitchAccent::LStar : PitchAccent::HStar;
    if (first == Tone::L) return main_tone == 2 ? PitchAccent::LPlusHStar : PitchAccent::LStarPlusH;
    return main_tone == 2 ? PitchAccent::HPlusLStar : PitchAccent::HStarPlusL;
  }

  friend bool operator==(const AccentForm&, const AccentForm&) = default;
};

// The main tone moves to the second position only when a strict majority of
// the region changed annotation.
inline AccentForm derive_accent(const RegionTally& before, const RegionTally& after, int changed, int region_total,
                                Tone fallback = Tone::H) {
  if (changed > region_total) throw std::invalid_argument("changed count exceeds region size");
  AccentForm f;
  f.first = majority_tone(before, fallback);
  f.second = majority_tone(after, fallback);
  f.main_tone = 2 * changed > region_total ? 2 : 1;
  return f;
}

// Primed items record L, unprimed H; items the search never reached keep
// whatever they had.
template <class Payload>
void update_annotations(MemorySpace<Payload>& space, std::span<const ComparisonResult> results) {
  for (const auto& r : results) space.annotate(r.item, r.primed ? Annotation::L : Annotation::H);
}

struct DeaccentRules {
  bool closed_class = true;
  bool given = true;
  // Given words are de-accented only up to this stop distance; negative
  // means any distance within the radius.
  int given_max_stop = -1;
};

inline bool deaccented(const MatchOutcome& outcome, const AnnotatedToken& token, const DeaccentRules& rules) {
  if (token.is_empty_category()) return true;
  if (rules.closed_class && token.pos_class == PosClass::Closed) return true;
  if (rules.given && outcome.given() && (rules.given_max_stop < 0 || outcome.stop_distance <= rules.given_max_stop))
    return true;
  return false;
}

inline PitchAccent assign_accent(const MatchOutcome& outcome, const AccentForm& form, const AnnotatedToken& token,
                                 const DeaccentRules& rules = {}) {
  if (!token.is_word()) throw std::invalid_argument("clause tokens do not carry pitch accents");
  return deaccented(outcome, token, rules) ? PitchAccent::Unaccented : form.render();
}

}  // namespace loq

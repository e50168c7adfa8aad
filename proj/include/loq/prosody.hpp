#pragma once

// Mapping from search activity and region state to prominence, timing,
// phrasing and pitch range.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "loq/error.hpp"
#include "loq/match.hpp"
#include "loq/tones.hpp"

namespace loq {

struct Calibration {
  double prominence_c0 = 8.0;
  double ms_per_syllable = 80.0;
  double ms_per_step = 10.0;
  double steps_per_comparison = 0.25;
  double intermediate_pause_ms = 50.0;
  double full_pause_ms = 200.0;
  double baseline_hz = 80.0;
  double topline_floor_hz = 120.0;
  double topline_span_hz = 120.0;
  int min_words_per_phrase = 1;

  void validate() const {
    if (!(prominence_c0 > 0)) throw ConfigError("prominence_c0 must be positive");
    if (!(ms_per_syllable > 0)) throw ConfigError("ms_per_syllable must be positive");
    if (ms_per_step < 0 || steps_per_comparison < 0) throw ConfigError("search-time constants must be >= 0");
    if (intermediate_pause_ms < 0 || full_pause_ms < 0) throw ConfigError("pause bases must be >= 0");
    if (!(baseline_hz > 0) || !(topline_floor_hz > baseline_hz) || topline_span_hz < 0)
      throw ConfigError("pitch range needs 0 < baseline < topline floor and a non-negative span");
    if (min_words_per_phrase < 1) throw ConfigError("min_words_per_phrase must be >= 1");
  }

  friend bool operator==(const Calibration&, const Calibration&) = default;
};

inline double search_time(const MatchOutcome& o, const Calibration& cal = {}) {
  return o.search_time(cal.steps_per_comparison);
}

// Falls with every comparison made and rises with how far out the search
// stopped, relative to the radius.
inline double prominence(const MatchOutcome& o, int radius, const Calibration& cal = {}) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const double effort = cal.prominence_c0 / (cal.prominence_c0 + o.comparisons);
  const double reach = (1.0 + o.stop_distance) / (radius + 2.0);
  return std::clamp(100.0 * effort * reach, 0.0, 100.0);
}

inline double word_duration(const MatchOutcome& o, const AnnotatedToken& token, const Calibration& cal = {}) {
  const int syllables = token.syllables();
  if (syllables < 1) throw std::invalid_argument("word '" + token.surface + "' has no syllables");
  return cal.ms_per_syllable * syllables + cal.ms_per_step * search_time(o, cal);
}

enum class BreakLevel { Intermediate, Full };

struct PitchRange {
  double baseline_hz = 0.0;
  double topline_hz = 0.0;

  friend bool operator==(const PitchRange&, const PitchRange&) = default;
};

inline PitchRange phrase_pitch_range(const RegionTally& at_start, const Calibration& cal = {}) {
  const double h_share = at_start.total == 0 ? 1.0 : static_cast<double>(at_start.count_h) / at_start.total;
  return {cal.baseline_hz, cal.topline_floor_hz + cal.topline_span_hz * h_share};
}

struct PhraseEvent {
  std::size_t position = 0;  // stream index of the word it follows
  BreakLevel level = BreakLevel::Intermediate;
  Tone phrase_accent = Tone::H;
  std::optional<Tone> boundary_tone;  // full breaks only
  PitchRange pitch_range;
  double pause_ms = 0.0;

  friend bool operator==(const PhraseEvent&, const PhraseEvent&) = default;
};

inline double pause_duration(BreakLevel level, double clause_search_time, const Calibration& cal = {}) {
  const double base = level == BreakLevel::Full ? cal.full_pause_ms : cal.intermediate_pause_ms;
  return base + cal.ms_per_step * clause_search_time;
}

inline double pause_duration(BreakLevel level, const MatchOutcome& clause_outcome, const Calibration& cal = {}) {
  return pause_duration(level, search_time(clause_outcome, cal), cal);
}

// What phrasing needs to know about each processed token.
struct StepRecord {
  std::size_t index = 0;
  TokenKind kind = TokenKind::Word;
  bool uttered = false;
  std::vector<std::size_t> members;  // clause tokens only
  RegionTally before;
  RegionTally after;
  double search_time = 0.0;
};

// One event per clause token: intermediate for syntactic clauses, full for
// grammatical ones. A closing full event is appended when the stream does
// not already end on one.
inline std::vector<PhraseEvent> phrase_events(std::span<const StepRecord> steps, const Calibration& cal = {},
                                              Tone fallback = Tone::H) {
  std::map<std::size_t, const StepRecord*> by_index;
  std::optional<std::size_t> last_word;
  for (const auto& s : steps) {
    by_index[s.index] = &s;
    if (s.uttered) last_word = s.index;
  }

  auto uttered_members = [&](const StepRecord& clause) {
    std::vector<std::size_t> out;
    for (auto m : clause.members) {
      auto it = by_index.find(m);
      if (it == by_index.end() || m > clause.index || !is_clause(clause.kind) || it->second->kind != TokenKind::Word)
        throw ValidationError("clause token " + std::to_string(clause.index) + " has a member that does not precede it");
      if (it->second->uttered) out.push_back(m);
    }
    return out;
  };

  std::vector<PhraseEvent> events;
  std::optional<std::size_t> last_full;
  for (const auto& s : steps) {
    if (!is_clause(s.kind)) continue;
    const auto words = uttered_members(s);
    if (words.empty() || static_cast<int>(words.size()) < cal.min_words_per_phrase) continue;
    PhraseEvent e;
    e.position = words.back();
    e.level = s.kind == TokenKind::GrammaticalClause ? BreakLevel::Full : BreakLevel::Intermediate;
    const Tone t = majority_tone(s.after, fallback);
    e.phrase_accent = t;
    if (e.level == BreakLevel::Full) {
      e.boundary_tone = t;
      last_full = e.position;
    }
    e.pitch_range = phrase_pitch_range(by_index.at(words.front())->before, cal);
    e.pause_ms = pause_duration(e.level, s.search_time, cal);
    events.push_back(e);
  }

  if (last_word && last_full != last_word) {
    // Phrase runs from the word after the previous full break.
    std::optional<RegionTally> start;
    for (const auto& s : steps)
      if (s.uttered && (!last_full || s.index > *last_full)) {
        start = s.before;
        break;
      }
    PhraseEvent e;
    e.position = *last_word;
    e.level = BreakLevel::Full;
    e.phrase_accent = fallback;
    e.boundary_tone = fallback;
    e.pitch_range = phrase_pitch_range(start.value_or(RegionTally{}), cal);
    e.pause_ms = pause_duration(BreakLevel::Full, 0.0, cal);
    events.push_back(e);
  }
  return events;
}

struct ProsodicWord {
  std::size_t token_index = 0;
  std::string surface;
  PitchAccent accent = PitchAccent::Unaccented;
  double prominence = 0.0;
  double duration_ms = 0.0;
  double pause_ms = 0.0;
};

// Longest pause among the breaks that follow each word.
inline void attach_pauses(std::vector<ProsodicWord>& words, std::span<const PhraseEvent> events) {
  for (auto& w : words) {
    w.pause_ms = 0.0;
    for (const auto& e : events)
      if (e.position == w.token_index) w.pause_ms = std::max(w.pause_ms, e.pause_ms);
  }
}

}  // namespace loq

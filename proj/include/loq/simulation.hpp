#pragma once

// End-to-end simulation: each token is searched for, changes the region's
// annotations, receives its accent and timing, is stored, and the pointer
// walks on.

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "loq/awm.hpp"
#include "loq/config.hpp"
#include "loq/match.hpp"
#include "loq/prosody.hpp"
#include "loq/tones.hpp"
#include "loq/token.hpp"

namespace loq {

struct SimulationConfig {
  Lattice lattice{2, 22};
  int radius = 3;
  int walk_rate = 1;
  std::uint64_t seed = 1;
  int runs = 5;
  ModelConfig model;
  bool trace = false;

  void validate() const {
    lattice.validate();
    if (lattice.extent < 2) throw ConfigError("extent must be >= 2");
    if (radius < 0) throw ConfigError("radius must be >= 0");
    if (walk_rate < 0) throw ConfigError("walk rate must be >= 0");
    if (runs < 1) throw ConfigError("runs must be >= 1");
    model.validate();
  }
};

struct TraceEntry {
  std::size_t index = 0;
  TokenKind kind = TokenKind::Word;
  std::string surface;
  Coordinates position;
  MatchOutcome outcome;
  RegionTally before;
  RegionTally after;
  int changed = 0;
  int region_items = 0;
  AccentForm form;
  PitchAccent accent = PitchAccent::Unaccented;
};

struct RunStatistics {
  int radius = 0;
  int run = 0;
  std::uint64_t seed = 0;
  int words = 0;
  std::array<int, all_accents.size()> accent_counts{};
  double mean_prominence = 0.0;  // over accented words
  int phrase_breaks = 0;
  int given = 0;

  int count(PitchAccent a) const { return accent_counts[static_cast<std::size_t>(a)]; }
  int unaccented() const { return count(PitchAccent::Unaccented); }
  int accented() const { return words - unaccented(); }
  int bitonal() const {
    int n = 0;
    for (auto a : all_accents)
      if (is_bitonal(a)) n += count(a);
    return n;
  }
};

struct SimulationResult {
  std::vector<ProsodicWord> words;
  std::vector<PhraseEvent> events;
  RunStatistics stats;
  std::vector<TraceEntry> trace;
};

inline SimulationResult run_simulation(const SimulationConfig& cfg, const TokenStream& stream) {
  cfg.validate();
  const auto& model = cfg.model;
  const WalkOptions walk{cfg.walk_rate, model.stay_probability};
  Memory space(cfg.lattice);
  Pointer pointer = make_pointer(cfg.lattice, cfg.seed);

  SimulationResult result;
  std::vector<StepRecord> steps;
  steps.reserve(stream.size());
  double prominence_sum = 0.0;

  for (std::size_t step = 0; step < stream.size(); ++step) {
    const AnnotatedToken& tok = stream[step];
    const SearchRegion region = enumerate_region(pointer.position, cfg.radius, cfg.lattice);
    auto in_scope = [&](const AnnotatedToken& stored) {
      return model.tally_scope == TallyScope::Region || comparable(tok, stored);
    };

    const auto before_snap = snapshot_region(space, region, in_scope);
    MatchOutcome outcome = search_and_match(space, pointer.position, cfg.radius, tok, model.registry);
    update_annotations(space, std::span<const ComparisonResult>(outcome.results));
    const auto after_snap = snapshot_region(space, region, in_scope);

    int changed = 0;
    for (std::size_t i = 0; i < before_snap.size(); ++i)
      changed += before_snap[i].annotation != after_snap[i].annotation ? 1 : 0;
    const RegionTally before = tally(before_snap);
    const RegionTally after = tally(after_snap);
    const AccentForm form =
        derive_accent(before, after, changed, static_cast<int>(before_snap.size()), model.fallback);

    PitchAccent accent = PitchAccent::Unaccented;
    if (tok.is_uttered()) {
      accent = assign_accent(outcome, form, tok, model.deaccent);
      ProsodicWord w;
      w.token_index = tok.index;
      w.surface = tok.surface;
      w.accent = accent;
      w.prominence = accent == PitchAccent::Unaccented ? 0.0 : prominence(outcome, cfg.radius, model.calibration);
      w.duration_ms = word_duration(outcome, tok, model.calibration);
      result.stats.accent_counts[static_cast<std::size_t>(accent)]++;
      if (accent != PitchAccent::Unaccented) prominence_sum += w.prominence;
      if (outcome.given()) ++result.stats.given;
      result.words.push_back(std::move(w));
    }

    StepRecord rec;
    rec.index = tok.index;
    rec.kind = tok.kind;
    rec.uttered = tok.is_uttered();
    rec.members = tok.members;
    rec.before = before;
    rec.after = after;
    rec.search_time = search_time(outcome, model.calibration);
    steps.push_back(std::move(rec));

    if (cfg.trace) {
      TraceEntry e;
      e.index = tok.index;
      e.kind = tok.kind;
      e.surface = tok.surface;
      e.position = pointer.position;
      e.before = before;
      e.after = after;
      e.changed = changed;
      e.region_items = static_cast<int>(before_snap.size());
      e.form = form;
      e.accent = accent;
      e.outcome = outcome;
      result.trace.push_back(std::move(e));
    }

    store(space, pointer, tok, outcome.given() ? Annotation::L : Annotation::H, step);
    pointer = step_pointer(std::move(pointer), walk, cfg.lattice);
  }

  result.events = phrase_events(steps, model.calibration, model.fallback);
  attach_pauses(result.words, result.events);

  auto& st = result.stats;
  st.radius = cfg.radius;
  st.seed = cfg.seed;
  st.words = static_cast<int>(result.words.size());
  st.phrase_breaks = static_cast<int>(result.events.size());
  st.mean_prominence = st.accented() > 0 ? prominence_sum / st.accented() : 0.0;
  return result;
}

enum class Style { Child, AdultExpressive, Knowledgeable };

inline std::string_view to_string(Style s) {
  switch (s) {
    case Style::Child: return "child";
    case Style::AdultExpressive: return "adultExpressive";
    case Style::Knowledgeable: return "knowledgeable";
  }
  return "child";
}

// Radius 0 lies below the smallest band and is reported as child.
inline bool outside_style_bands(int radius) { return radius < 1; }

inline Style style_label(int radius) {
  if (radius <= 2) return Style::Child;
  if (radius <= 8) return Style::AdultExpressive;
  return Style::Knowledgeable;
}

inline std::uint64_t run_seed(std::uint64_t base, int run) { return base + static_cast<std::uint64_t>(run); }

struct RadiusSummary {
  int radius = 0;
  Style style = Style::Child;
  double mean_unaccented = 0.0;
  double mean_hstar = 0.0;
  double mean_lstar = 0.0;
  double mean_bitonal = 0.0;
  double mean_prominence = 0.0;
  double mean_breaks = 0.0;
};

struct SweepResult {
  std::vector<RunStatistics> rows;  // ordered by (radius, run)
  std::vector<RadiusSummary> summary;
};

inline SweepResult sweep(const SimulationConfig& base, const std::vector<int>& radii, const TokenStream& stream) {
  if (radii.empty()) throw ConfigError("sweep needs at least one radius");
  base.validate();
  std::vector<SimulationConfig> configs;
  for (int r : radii)
    for (int run = 0; run < base.runs; ++run) {
      SimulationConfig cfg = base;
      cfg.radius = r;
      cfg.seed = run_seed(base.seed, run);
      cfg.trace = false;
      configs.push_back(cfg);
    }

  SweepResult out;
  out.rows.resize(configs.size());
  const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < configs.size(); first += batch) {
    std::vector<std::future<RunStatistics>> jobs;
    for (std::size_t k = first; k < std::min(configs.size(), first + batch); ++k)
      jobs.push_back(std::async(std::launch::async, [&cfg = configs[k], &stream] {
        return run_simulation(cfg, stream).stats;
      }));
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      out.rows[first + k] = jobs[k].get();
      out.rows[first + k].run = static_cast<int>((first + k) % static_cast<std::size_t>(base.runs));
    }
  }

  for (std::size_t i = 0; i < radii.size(); ++i) {
    RadiusSummary s;
    s.radius = radii[i];
    s.style = style_label(radii[i]);
    const auto n = static_cast<double>(base.runs);
    for (int run = 0; run < base.runs; ++run) {
      const auto& row = out.rows[i * static_cast<std::size_t>(base.runs) + static_cast<std::size_t>(run)];
      s.mean_unaccented += row.unaccented() / n;
      s.mean_hstar += row.count(PitchAccent::HStar) / n;
      s.mean_lstar += row.count(PitchAccent::LStar) / n;
      s.mean_bitonal += row.bitonal() / n;
      s.mean_prominence += row.mean_prominence / n;
      s.mean_breaks += row.phrase_breaks / n;
    }
    out.summary.push_back(s);
  }
  return out;
}

}  // namespace loq

#pragma once

// Text renderings of simulation output: ToBI-style listing, speech markup,
// per-run CSV and a JSON-lines trace.

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "loq/prosody.hpp"
#include "loq/simulation.hpp"

namespace loq {

inline constexpr const char* tobi_header = "#loq-tobi 1";
inline constexpr const char* markup_version = "loq-markup 1";
inline constexpr const char* csv_header =
    "radius,run,seed,words,unaccented,hstar,lstar,bitonal,meanProminence,phraseBreaks";

namespace emit_detail {

inline std::string fixed(double v, int decimals = 1) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* level_name(BreakLevel l) { return l == BreakLevel::Full ? "full" : "intermediate"; }

inline const char* emphasis_level(double prominence) {
  if (prominence <= 0.0) return "none";
  if (prominence < 100.0 / 3.0) return "reduced";
  if (prominence < 200.0 / 3.0) return "moderate";
  return "strong";
}

}  // namespace emit_detail

inline std::string format_break(const PhraseEvent& e) {
  using emit_detail::fixed;
  std::string line = "%break ";
  line += emit_detail::level_name(e.level);
  line += ' ';
  line += tone_char(e.phrase_accent);
  line += "- ";
  if (e.boundary_tone) {
    line += tone_char(*e.boundary_tone);
    line += '%';
  } else {
    line += '_';
  }
  line += ' ' + fixed(e.pitch_range.baseline_hz) + '-' + fixed(e.pitch_range.topline_hz);
  return line;
}

inline std::string format_word(const ProsodicWord& w) {
  using emit_detail::fixed;
  return std::to_string(w.token_index) + ' ' + w.surface + ' ' + std::string(to_string(w.accent)) + ' ' +
         fixed(w.prominence) + ' ' + fixed(w.duration_ms) + ' ' + fixed(w.pause_ms);
}

inline std::string emit_tobi(std::span<const ProsodicWord> words, std::span<const PhraseEvent> events) {
  std::string out = std::string(tobi_header) + "\n";
  for (const auto& w : words) {
    out += format_word(w) + '\n';
    for (const auto& e : events)
      if (e.position == w.token_index) out += format_break(e) + '\n';
  }
  return out;
}

inline std::string emit_markup(std::span<const ProsodicWord> words, std::span<const PhraseEvent> events) {
  using emit_detail::fixed;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- " + std::string(markup_version) + " -->\n";
  out += "<speak version=\"1.1\" xmlns=\"http://www.w3.org/2001/10/synthesis\" xml:lang=\"en-US\">\n";

  auto closing_full = [&](std::size_t from) -> const PhraseEvent* {
    for (const auto& e : events)
      if (e.level == BreakLevel::Full && e.position >= from) return &e;
    return nullptr;
  };

  bool in_phrase = false;
  for (const auto& w : words) {
    if (!in_phrase) {
      const PhraseEvent* full = closing_full(w.token_index);
      const PitchRange range = full ? full->pitch_range : PitchRange{};
      out += "<prosody pitch=\"" + fixed(range.baseline_hz) + "Hz\" range=\"" +
             fixed(range.topline_hz - range.baseline_hz) + "Hz\">\n";
      in_phrase = true;
    }
    out += "  <emphasis level=\"" + std::string(emit_detail::emphasis_level(w.prominence)) + "\">";
    out += "<prosody duration=\"" + fixed(w.duration_ms) + "ms\">";
    if (w.accent != PitchAccent::Unaccented) out += "<mark name=\"accent:" + std::string(to_string(w.accent)) + "\"/>";
    out += "<w>" + emit_detail::xml_escape(w.surface) + "</w></prosody></emphasis>\n";

    bool ends_phrase = false;
    for (const auto& e : events)
      if (e.position == w.token_index && e.level == BreakLevel::Full) ends_phrase = true;
    if (ends_phrase) {
      out += "</prosody>\n";
      in_phrase = false;
    }
    if (w.pause_ms > 0.0) out += std::string(ends_phrase ? "" : "  ") + "<break time=\"" + fixed(w.pause_ms) + "ms\"/>\n";
  }
  if (in_phrase) out += "</prosody>\n";
  out += "</speak>\n";
  return out;
}

inline std::string csv_row(const RunStatistics& s) {
  return std::to_string(s.radius) + ',' + std::to_string(s.run) + ',' + std::to_string(s.seed) + ',' +
         std::to_string(s.words) + ',' + std::to_string(s.unaccented()) + ',' +
         std::to_string(s.count(PitchAccent::HStar)) + ',' + std::to_string(s.count(PitchAccent::LStar)) + ',' +
         std::to_string(s.bitonal()) + ',' + emit_detail::fixed(s.mean_prominence, 4) + ',' +
         std::to_string(s.phrase_breaks);
}

inline std::string emit_csv(std::span<const RunStatistics> rows) {
  std::string out = std::string(csv_header) + "\n";
  for (const auto& r : rows) out += csv_row(r) + '\n';
  return out;
}

inline std::string emit_trace(std::span<const TraceEntry> trace) {
  using nlohmann::json;
  std::string out;
  for (const auto& t : trace) {
    json comparisons = json::array();
    for (const auto& c : t.outcome.results)
      comparisons.push_back({{"item", c.item},
                             {"distance", c.distance},
                             {"fired", c.fired},
                             {"raw", c.raw_score},
                             {"scaled", c.scaled_score},
                             {"primed", c.primed},
                             {"abstained", c.abstentions}});
    json j = {{"index", t.index},
              {"kind", t.kind == TokenKind::Word ? "word"
                       : t.kind == TokenKind::SyntacticClause ? "syntactic"
                                                              : "grammatical"},
              {"surface", t.surface},
              {"position", t.position.axes},
              {"status", t.outcome.given() ? "given" : "new"},
              {"stopDistance", t.outcome.stop_distance},
              {"comparisons", t.outcome.comparisons},
              {"before", {t.before.count_l, t.before.count_h}},
              {"after", {t.after.count_l, t.after.count_h}},
              {"changed", t.changed},
              {"regionItems", t.region_items},
              {"form", std::string(to_string(t.form.render()))},
              {"accent", std::string(to_string(t.accent))},
              {"results", comparisons}};
    if (t.outcome.matched) j["matched"] = *t.outcome.matched;
    out += j.dump() + '\n';
  }
  return out;
}

inline std::string emit_summary(std::span<const RadiusSummary> summary) {
  using emit_detail::fixed;
  std::string out = "radius  style            unaccented  H*      L*      bitonal  prominence  breaks\n";
  for (const auto& s : summary) {
    char line[160];
    std::snprintf(line, sizeof line, "%6d  %-15s  %10.2f  %6.2f  %6.2f  %7.2f  %10.2f  %6.2f\n", s.radius,
                  std::string(to_string(s.style)).c_str(), s.mean_unaccented, s.mean_hstar, s.mean_lstar,
                  s.mean_bitonal, s.mean_prominence, s.mean_breaks);
    out += line;
  }
  return out;
}

}  // namespace loq

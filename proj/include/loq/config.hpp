#pragma once

// Model configuration file: feature registry, threshold, calibration
// constants and accent rules in one versioned JSON document. Any section
// left out keeps its defaults.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "loq/awm.hpp"
#include "loq/error.hpp"
#include "loq/features.hpp"
#include "loq/prosody.hpp"
#include "loq/tones.hpp"

namespace loq {

inline constexpr const char* config_format = "loq-config";
inline constexpr int config_version = 1;

// Which stored items count towards the before/after tone tallies: every
// item in the search region, or only those of the token's own kind.
enum class TallyScope { Region, Comparable };

inline std::string to_string(TallyScope s) { return s == TallyScope::Region ? "region" : "comparable"; }

inline TallyScope parse_tally_scope(const std::string& s) {
  if (s == "region") return TallyScope::Region;
  if (s == "comparable") return TallyScope::Comparable;
  throw ConfigError("tally_scope must be region or comparable, got '" + s + "'");
}

struct ModelConfig {
  FeatureRegistry registry = FeatureRegistry::defaults();
  Calibration calibration;
  DeaccentRules deaccent;
  Tone fallback = Tone::H;
  TallyScope tally_scope = TallyScope::Region;
  double stay_probability = 0.0;

  void validate() const {
    registry.validate();
    calibration.validate();
    if (stay_probability < 0.0 || stay_probability >= 1.0) throw ConfigError("stay_probability must be in [0, 1)");
  }

  friend bool operator==(const ModelConfig& a, const ModelConfig& b) {
    return a.registry == b.registry && a.calibration == b.calibration && a.deaccent.closed_class == b.deaccent.closed_class &&
           a.deaccent.given == b.deaccent.given && a.deaccent.given_max_stop == b.deaccent.given_max_stop &&
           a.fallback == b.fallback && a.tally_scope == b.tally_scope && a.stay_probability == b.stay_probability;
  }
};

namespace config_detail {

using nlohmann::json;

template <class T>
void read(const json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

inline Tone parse_tone(const std::string& s) {
  if (s == "L") return Tone::L;
  if (s == "H") return Tone::H;
  throw ConfigError("tone must be L or H, got '" + s + "'");
}

}  // namespace config_detail

inline ModelConfig parse_config(const std::string& text) {
  using config_detail::json;
  using config_detail::read;
  ModelConfig cfg;
  try {
    const json j = json::parse(text);
    if (j.value("format", std::string{}) != config_format) throw ConfigError("not a loq-config document");
    if (j.value("version", 0) != config_version)
      throw ConfigError("unsupported config version " + std::to_string(j.value("version", 0)));
    read(j, "threshold", cfg.registry.threshold);
    if (j.contains("features")) {
      cfg.registry.tests.clear();
      for (const auto& f : j.at("features")) {
        FeatureTest t;
        t.id = f.at("id").get<std::string>();
        t.category = parse_category(f.at("category").get<std::string>());
        t.weight = f.at("weight").get<double>();
        t.parasitic = f.value("parasitic", false);
        t.definitive = f.value("definitive", false);
        cfg.registry.tests.push_back(std::move(t));
      }
    }
    if (j.contains("calibration")) {
      const auto& c = j.at("calibration");
      auto& cal = cfg.calibration;
      read(c, "prominence_c0", cal.prominence_c0);
      read(c, "ms_per_syllable", cal.ms_per_syllable);
      read(c, "ms_per_step", cal.ms_per_step);
      read(c, "steps_per_comparison", cal.steps_per_comparison);
      read(c, "intermediate_pause_ms", cal.intermediate_pause_ms);
      read(c, "full_pause_ms", cal.full_pause_ms);
      read(c, "baseline_hz", cal.baseline_hz);
      read(c, "topline_floor_hz", cal.topline_floor_hz);
      read(c, "topline_span_hz", cal.topline_span_hz);
      read(c, "min_words_per_phrase", cal.min_words_per_phrase);
    }
    if (j.contains("accent")) {
      const auto& a = j.at("accent");
      if (a.contains("fallback_tone")) cfg.fallback = config_detail::parse_tone(a.at("fallback_tone").get<std::string>());
      read(a, "deaccent_closed_class", cfg.deaccent.closed_class);
      read(a, "deaccent_given", cfg.deaccent.given);
      read(a, "given_max_stop", cfg.deaccent.given_max_stop);
      if (a.contains("tally_scope")) cfg.tally_scope = parse_tally_scope(a.at("tally_scope").get<std::string>());
    }
    if (j.contains("walk")) read(j.at("walk"), "stay_probability", cfg.stay_probability);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

inline ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

inline std::string serialize_config(const ModelConfig& cfg) {
  using config_detail::json;
  json j;
  j["format"] = config_format;
  j["version"] = config_version;
  j["threshold"] = cfg.registry.threshold;
  j["features"] = json::array();
  for (const auto& t : cfg.registry.tests)
    j["features"].push_back({{"id", t.id},
                             {"category", to_string(t.category)},
                             {"weight", t.weight},
                             {"parasitic", t.parasitic},
                             {"definitive", t.definitive}});
  const auto& cal = cfg.calibration;
  j["calibration"] = {{"prominence_c0", cal.prominence_c0},
                      {"ms_per_syllable", cal.ms_per_syllable},
                      {"ms_per_step", cal.ms_per_step},
                      {"steps_per_comparison", cal.steps_per_comparison},
                      {"intermediate_pause_ms", cal.intermediate_pause_ms},
                      {"full_pause_ms", cal.full_pause_ms},
                      {"baseline_hz", cal.baseline_hz},
                      {"topline_floor_hz", cal.topline_floor_hz},
                      {"topline_span_hz", cal.topline_span_hz},
                      {"min_words_per_phrase", cal.min_words_per_phrase}};
  j["accent"] = {{"fallback_tone", std::string(1, tone_char(cfg.fallback))},
                 {"deaccent_closed_class", cfg.deaccent.closed_class},
                 {"deaccent_given", cfg.deaccent.given},
                 {"given_max_stop", cfg.deaccent.given_max_stop},
                 {"tally_scope", to_string(cfg.tally_scope)}};
  j["walk"] = {{"stay_probability", cfg.stay_probability}};
  return j.dump(2) + "\n";
}

}  // namespace loq

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace loq;

TEST(Config, DefaultsRoundTrip) {
  const ModelConfig def;
  EXPECT_EQ(parse_config(serialize_config(def)), def);
}

TEST(Config, BundledDefaultFileMatchesBuiltIn) {
  EXPECT_EQ(load_config(test::data_path("default_config.json")), ModelConfig{});
}

TEST(Config, ModifiedRoundTrip) {
  ModelConfig c;
  c.registry.threshold = 0.8;
  c.registry.tests.pop_back();
  c.calibration.full_pause_ms = 300;
  c.deaccent.given_max_stop = 1;
  c.fallback = Tone::L;
  c.tally_scope = TallyScope::Comparable;
  c.stay_probability = 0.25;
  EXPECT_EQ(parse_config(serialize_config(c)), c);
}

TEST(Config, MissingSectionsKeepDefaults) {
  const auto c = parse_config(R"({"format":"loq-config","version":1,"threshold":0.8})");
  EXPECT_DOUBLE_EQ(c.registry.threshold, 0.8);
  EXPECT_EQ(c.registry.tests.size(), 24u);
  EXPECT_EQ(c.calibration, Calibration{});
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"other","version":1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"loq-config","version":2})"), ConfigError);
  EXPECT_THROW(load_config(std::string(LOQ_TEST_DATA) + "/bad_config.json"), ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"loq-config","version":1,"features":[{"id":"nope","category":"semantic","weight":1}]})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"loq-config","version":1,"accent":{"fallback_tone":"M"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"loq-config","version":1,"accent":{"tally_scope":"all"}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"format":"loq-config","version":1,"walk":{"stay_probability":1.0}})"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/loq.json"), ConfigError);
}

TEST(Registry, DefaultsAreValid) {
  const auto r = FeatureRegistry::defaults();
  EXPECT_NO_THROW(r.validate());
  EXPECT_EQ(r.tests.size(), 24u);
  int parasitic = 0, definitive = 0;
  for (const auto& t : r.tests) {
    parasitic += t.parasitic;
    definitive += t.definitive;
    EXPECT_TRUE(features::find(t.id)) << t.id;
  }
  EXPECT_EQ(parasitic, 3);
  EXPECT_EQ(definitive, 1);
  EXPECT_EQ(r.find("coref-identity")->weight, 1.0);
}

TEST(Registry, ValidationErrors) {
  auto r = FeatureRegistry::defaults();
  r.tests.push_back(r.tests.front());
  EXPECT_THROW(r.validate(), ConfigError);

  r = FeatureRegistry::defaults();
  r.tests[1].weight = -0.1;
  EXPECT_THROW(r.validate(), ConfigError);

  r = FeatureRegistry::defaults();
  r.tests[0].parasitic = true;
  EXPECT_THROW(r.validate(), ConfigError);

  r = FeatureRegistry::defaults();
  r.threshold = 2.0;
  EXPECT_THROW(r.validate(), ConfigError);

  r = FeatureRegistry::defaults();
  r.threshold = 0.0;
  EXPECT_THROW(r.validate(), ConfigError);
}

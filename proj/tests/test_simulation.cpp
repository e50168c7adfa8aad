#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace loq;

namespace {

TokenStream words(std::initializer_list<const char*> lemmas) {
  TokenStream s;
  for (const char* l : lemmas) s.tokens.push_back(test::word(l, s.tokens.size()));
  return s;
}

SimulationConfig lemma_only(int radius, int walk_rate = 1) {
  SimulationConfig cfg;
  cfg.radius = radius;
  cfg.walk_rate = walk_rate;
  cfg.model.registry = test::single("lemma-identity");
  return cfg;
}

}  // namespace

TEST(Simulation, UniqueLemmasAreAllHStar) {
  const auto s = words({"a", "b", "c", "d"});
  for (int r : {0, 3}) {
    const auto res = run_simulation(lemma_only(r), s);
    ASSERT_EQ(res.words.size(), 4u);
    for (const auto& w : res.words) EXPECT_EQ(w.accent, PitchAccent::HStar);
    EXPECT_EQ(res.stats.given, 0);
  }
}

TEST(Simulation, ImmediateRepetitionIsGiven) {
  const auto res = run_simulation(lemma_only(0, 0), words({"a", "a"}));
  EXPECT_EQ(res.words[0].accent, PitchAccent::HStar);
  EXPECT_EQ(res.words[1].accent, PitchAccent::Unaccented);
  EXPECT_DOUBLE_EQ(res.words[1].prominence, 0.0);
  EXPECT_EQ(res.stats.given, 1);
  // search stopped at distance 0 after one comparison
  EXPECT_DOUBLE_EQ(res.words[1].duration_ms, 80.0 + 10.0 * 0.25);
}

TEST(Simulation, EndsWithFullBreak) {
  const auto res = run_simulation(lemma_only(2), words({"a", "b"}));
  ASSERT_FALSE(res.events.empty());
  EXPECT_EQ(res.events.back().level, BreakLevel::Full);
  EXPECT_EQ(res.events.back().position, 1u);
  EXPECT_DOUBLE_EQ(res.words.back().pause_ms, 200.0);
}

TEST(Simulation, DeterministicPerSeed) {
  const auto corpus = load_corpus(test::data_path("news.loq"));
  SimulationConfig cfg;
  const auto a = run_simulation(cfg, corpus.stream);
  const auto b = run_simulation(cfg, corpus.stream);
  EXPECT_EQ(emit_tobi(a.words, a.events), emit_tobi(b.words, b.events));
  cfg.seed = 99;
  const auto c = run_simulation(cfg, corpus.stream);
  EXPECT_NE(emit_tobi(a.words, a.events), emit_tobi(c.words, c.events));
}

TEST(Simulation, PartitionAndRanges) {
  const auto corpus = load_corpus(test::data_path("news.loq"));
  SimulationConfig cfg;
  for (int r : {0, 1, 5, 12}) {
    cfg.radius = r;
    const auto res = run_simulation(cfg, corpus.stream);
    int total = 0;
    for (auto n : res.stats.accent_counts) total += n;
    EXPECT_EQ(total, 68);
    EXPECT_EQ(res.stats.words, 68);
    for (const auto& w : res.words) {
      EXPECT_GT(w.duration_ms, 0.0);
      EXPECT_GE(w.pause_ms, 0.0);
      EXPECT_GE(w.prominence, 0.0);
      EXPECT_LE(w.prominence, 100.0);
      if (w.accent == PitchAccent::Unaccented) {
        EXPECT_EQ(w.prominence, 0.0);
      }
    }
  }
}

TEST(Simulation, ConfigValidation) {
  SimulationConfig cfg;
  cfg.radius = -1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.lattice.extent = 1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.runs = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_THROW(sweep(SimulationConfig{}, {}, TokenStream{}), ConfigError);
}

TEST(Simulation, SweepRowsMatchSingleRuns) {
  const auto corpus = load_corpus(test::data_path("news.loq"));
  SimulationConfig cfg;
  cfg.runs = 3;
  const auto res = sweep(cfg, {2, 7}, corpus.stream);
  ASSERT_EQ(res.rows.size(), 6u);
  for (std::size_t i = 0; i < res.rows.size(); ++i) {
    SimulationConfig one = cfg;
    one.radius = i < 3 ? 2 : 7;
    one.seed = run_seed(cfg.seed, static_cast<int>(i % 3));
    const auto single = run_simulation(one, corpus.stream).stats;
    EXPECT_EQ(res.rows[i].radius, one.radius);
    EXPECT_EQ(res.rows[i].run, static_cast<int>(i % 3));
    EXPECT_EQ(res.rows[i].accent_counts, single.accent_counts);
    EXPECT_EQ(res.rows[i].mean_prominence, single.mean_prominence);
  }
}

TEST(Style, Bands) {
  EXPECT_EQ(style_label(2), Style::Child);
  EXPECT_EQ(style_label(5), Style::AdultExpressive);
  EXPECT_EQ(style_label(11), Style::Knowledgeable);
  EXPECT_EQ(style_label(8), Style::AdultExpressive);
  EXPECT_EQ(style_label(9), Style::Knowledgeable);
  EXPECT_EQ(style_label(0), Style::Child);
  EXPECT_TRUE(outside_style_bands(0));
  EXPECT_FALSE(outside_style_bands(1));
  EXPECT_EQ(to_string(Style::AdultExpressive), "adultExpressive");
}

TEST(Stats, SpearmanWithTies) {
  const std::vector<double> x{1, 2, 3, 4}, y{10, 20, 20, 40};
  EXPECT_EQ(average_ranks(std::span<const double>(y)), (std::vector<double>{1, 2.5, 2.5, 4}));
  EXPECT_NEAR(spearman(x, y), 0.9486832980505138, 1e-12);
  const std::vector<double> down{4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman(x, down), -1.0);
}

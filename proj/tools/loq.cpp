// loq: run prosody simulations over an annotated corpus.
//
//   loq run      --corpus data/news.loq --radius 3 --emit tobi
//   loq sweep    --corpus data/news.loq --radii 1..12 --runs 5 --csv out.csv
//   loq validate --corpus data/news.loq
//   loq config   > my_config.json
//
// Exit status: 0 success, 1 invalid corpus, 2 invalid configuration.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loq/loq.hpp"

namespace {

constexpr int kValidationFailure = 1;
constexpr int kConfigFailure = 2;

std::vector<int> parse_radii(const std::string& spec) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw loq::ConfigError("bad radius list '" + spec + "'");
    return v;
  };
  std::vector<int> out;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int lo = to_int(item.substr(0, dots));
      const int hi = to_int(item.substr(dots + 2));
      if (hi < lo) throw loq::ConfigError("empty radius range '" + std::string(item) + "'");
      for (int r = lo; r <= hi; ++r) out.push_back(r);
    } else {
      out.push_back(to_int(item));
    }
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (out.empty()) throw loq::ConfigError("no radii given");
  return out;
}

struct CommonOptions {
  std::string corpus;
  std::string config;
  int dims = 2;
  int extent = 22;
  int walk_rate = 1;
  std::uint64_t seed = 1;
  double threshold = 0.0;  // 0 keeps the config value
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--corpus", o.corpus, "Annotated corpus file")->required();
  cmd->add_option("--config", o.config, "Model configuration (JSON); built-in defaults when omitted");
  cmd->add_option("--dims", o.dims, "Memory dimensions (2 or 3)")->capture_default_str();
  cmd->add_option("--extent", o.extent, "Cells per axis")->capture_default_str();
  cmd->add_option("--walk-rate", o.walk_rate, "Pointer steps per token")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Base random seed")->capture_default_str();
  cmd->add_option("--threshold", o.threshold, "Match threshold override");
}

loq::SimulationConfig make_config(const CommonOptions& o) {
  loq::SimulationConfig cfg;
  cfg.model = o.config.empty() ? loq::ModelConfig{} : loq::load_config(o.config);
  if (o.threshold != 0.0) cfg.model.registry.threshold = o.threshold;
  cfg.lattice = {o.dims, o.extent};
  cfg.walk_rate = o.walk_rate;
  cfg.seed = o.seed;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw loq::ConfigError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Working-memory driven prosody simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  int radius = 3;
  std::string emit = "tobi";
  std::string run_out;
  auto* run = app.add_subcommand("run", "Simulate one reading and print its prosody");
  add_common(run, run_opts);
  run->add_option("--radius", radius, "Search radius")->capture_default_str();
  run->add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"tobi", "markup", "csv", "trace"}))
      ->capture_default_str();
  run->add_option("--out", run_out, "Output file (stdout when omitted)");

  CommonOptions sweep_opts;
  std::string radii_spec = "1..12";
  int runs = 5;
  std::string csv_out;
  auto* sweep = app.add_subcommand("sweep", "Run seeded simulations across search radii");
  add_common(sweep, sweep_opts);
  sweep->add_option("--radii", radii_spec, "Radii as a list and/or ranges, e.g. 1..12 or 1,2,5")->capture_default_str();
  sweep->add_option("--runs", runs, "Simulations per radius")->capture_default_str();
  sweep->add_option("--csv", csv_out, "Write per-run rows to this CSV file");

  std::string validate_corpus;
  auto* validate = app.add_subcommand("validate", "Check a corpus file");
  validate->add_option("--corpus", validate_corpus, "Annotated corpus file")->required();

  auto* config = app.add_subcommand("config", "Print the default model configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigFailure;
  }

  try {
    if (*config) {
      std::cout << loq::serialize_config(loq::ModelConfig{});
      return 0;
    }
    if (*validate) {
      const auto corpus = loq::load_corpus(validate_corpus);
      std::size_t clauses = 0;
      int sentences = 0;
      for (const auto& t : corpus.stream.tokens) {
        clauses += t.is_word() ? 0 : 1;
        sentences = std::max(sentences, t.sentence);
      }
      std::cout << validate_corpus << ": ok, " << corpus.stream.word_count() << " words, " << clauses
                << " clause tokens, " << sentences << " sentences\n";
      return 0;
    }
    if (*run) {
      auto cfg = make_config(run_opts);
      cfg.radius = radius;
      cfg.trace = emit == "trace";
      const auto corpus = loq::load_corpus(run_opts.corpus);
      if (loq::outside_style_bands(radius))
        std::cerr << "warning: radius " << radius << " is below the child-like band; reported as child\n";
      const auto result = loq::run_simulation(cfg, corpus.stream);
      std::string text;
      if (emit == "tobi") text = loq::emit_tobi(result.words, result.events);
      else if (emit == "markup") text = loq::emit_markup(result.words, result.events);
      else if (emit == "csv") text = loq::emit_csv(std::vector{result.stats});
      else text = loq::emit_trace(result.trace);
      write_output(run_out, text);
      std::cerr << "style: " << loq::to_string(loq::style_label(radius)) << "\n";
      return 0;
    }
    if (*sweep) {
      auto cfg = make_config(sweep_opts);
      cfg.runs = runs;
      const auto radii = parse_radii(radii_spec);
      const auto corpus = loq::load_corpus(sweep_opts.corpus);
      for (int r : radii)
        if (loq::outside_style_bands(r))
          std::cerr << "warning: radius " << r << " is below the child-like band; reported as child\n";
      const auto result = loq::sweep(cfg, radii, corpus.stream);
      if (!csv_out.empty()) write_output(csv_out, loq::emit_csv(result.rows));
      std::cout << loq::emit_summary(result.summary);
      return 0;
    }
  } catch (const loq::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const loq::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigFailure;
  }
  return 0;
}

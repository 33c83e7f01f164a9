// Command-line front end: ingest normalizes the corpora, analyze runs
// the full scoring -> series -> ADF -> Granger pipeline, the remaining
// subcommands run single stages. Exit codes: 0 success, 1 analysis
// error, 2 I/O or configuration error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emolag/errors.hpp"
#include "emolag/run.hpp"

namespace {

struct Cli {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override_options(CLI::App* cmd, Cli& cli) {
  cmd->add_option("-c,--config", cli.config_path, "run configuration file")->required();
  // every flag maps onto a config key
  static const std::vector<std::pair<const char*, const char*>> kFlags = {
      {"--out-dir", "out_dir"},
      {"--store", "store"},
      {"--tweets", "tweets"},
      {"--tweets-format", "tweets_format"},
      {"--bulletins", "bulletins"},
      {"--lexicon", "lexicon"},
      {"--modifications", "modifications"},
      {"--sentiment", "sentiment"},
      {"--stopwords", "stopwords"},
      {"--lemmas", "lemmas"},
      {"--regions", "regions"},
      {"--window-start", "window_start"},
      {"--window-end", "window_end"},
      {"--aggregate", "aggregate"},
      {"--gap-policy", "gap_policy"},
      {"--adf-max-lag", "adf_max_lag"},
      {"--granger-max-lag", "granger_max_lag"},
      {"--timezone-offset-minutes", "timezone_offset_minutes"},
      {"--country-key", "country_key"},
      {"--dedup", "dedup"},
      {"--keep-hashtag-bodies", "keep_hashtag_bodies"},
      {"--chatter-top", "chatter_top"},
      {"--chatter-exclude", "chatter_exclude"},
      {"--parallel", "parallel"},
  };
  for (const auto& [flag, key] : kFlags) {
    const std::string key_copy = key;
    cmd->add_option_function<std::string>(
        flag,
        [&cli, key_copy](const std::string& value) { cli.overrides.emplace_back(key_copy, value); },
        std::string("override config key ") + key);
  }
}

emolag::RunConfig build_config(const Cli& cli) {
  auto cfg = emolag::load_config(cli.config_path);
  const auto base = std::filesystem::current_path();
  for (const auto& [key, value] : cli.overrides) emolag::set_key(cfg, key, value, base);
  return cfg;
}

void print_outputs(const emolag::RunOutputs& outputs, const emolag::RunConfig& cfg) {
  for (const auto& warning : outputs.warnings) std::cerr << "warning: " << warning << "\n";
  for (const auto& [name, content] : outputs.files)
    std::cout << "wrote " << (cfg.out_dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"emotion time-series coupling pipeline"};
  app.require_subcommand(1);

  Cli cli;
  auto* ingest = app.add_subcommand("ingest", "normalize corpora into the document store");
  auto* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
  auto* adf = app.add_subcommand("adf", "unit-root tables only");
  auto* granger = app.add_subcommand("granger", "causality tables only");
  auto* chatter = app.add_subcommand("chatterplot", "word frequency x sentiment export");
  auto* stats = app.add_subcommand("stats", "document counts per region");
  for (auto* cmd : {ingest, analyze, adf, granger, chatter, stats})
    add_override_options(cmd, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto cfg = build_config(cli);
    if (ingest->parsed()) {
      const auto rep = emolag::run_ingest(cfg);
      std::cout << "store documents: " << rep.store_documents << "\n";
      for (const auto& [region, n] : rep.per_region)
        std::cout << "  " << region << ": " << n << "\n";
      std::cout << "skipped records: " << rep.tweets_skipped + rep.bulletins_skipped << "\n";
    } else if (analyze->parsed()) {
      print_outputs(emolag::run_analyze(cfg), cfg);
    } else if (adf->parsed()) {
      print_outputs(emolag::run_adf(cfg), cfg);
    } else if (granger->parsed()) {
      print_outputs(emolag::run_granger(cfg), cfg);
    } else if (chatter->parsed()) {
      print_outputs(emolag::run_chatterplot(cfg), cfg);
    } else if (stats->parsed()) {
      print_outputs(emolag::run_stats(cfg), cfg);
    }
  } catch (const emolag::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const emolag::AnalysisError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

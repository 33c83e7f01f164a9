#include "emolag/run.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "emolag/corpus.hpp"
#include "emolag/errors.hpp"
#include "emolag/pipeline.hpp"
#include "emolag/report.hpp"
#include "emolag/strings.hpp"

namespace emolag {

namespace fs = std::filesystem;

namespace {

void require_file(const fs::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string("config is missing the ") + what + " path");
  if (!fs::exists(p))
    throw UnreadablePath(std::string(what) + " path does not exist: " + p.string());
}

fs::path store_path(const RunConfig& cfg) {
  return cfg.store_path.empty() ? cfg.out_dir / "documents.jsonl" : cfg.store_path;
}

std::string region_slug(const std::string& region) {
  std::string out;
  for (char c : region) out += (c == ' ' || c == '/' ? '_' : c);
  return out.empty() ? "national" : out;
}

bool in_window(const RunConfig& cfg, const corpus::Document& d) {
  if (!cfg.window_start) return true;
  const Day day = day_of_timestamp(d.timestamp, cfg.utc_offset_minutes);
  return day >= *cfg.window_start && day <= *cfg.window_end;
}

textprep::PrepConfig make_prep_config(const RunConfig& cfg) {
  textprep::PrepConfig prep;
  require_file(cfg.lemma_path, "lemmas");
  if (cfg.stopword_paths.empty()) throw ConfigError("config is missing stopword files");
  for (const auto& p : cfg.stopword_paths) {
    require_file(p, "stopwords");
    textprep::load_stopwords(p, prep.stopwords);
  }
  prep.lemmas = textprep::load_lemma_dict(cfg.lemma_path);
  prep.keep_hashtag_bodies = cfg.keep_hashtag_bodies;
  return prep;
}

lexicon::Lexicon make_lexicon(const RunConfig& cfg) {
  require_file(cfg.lexicon_path, "lexicon");
  auto lex = lexicon::load_lexicon(cfg.lexicon_path);
  if (!cfg.modifications_path.empty()) {
    require_file(cfg.modifications_path, "modifications");
    const auto mods = lexicon::load_modifications(cfg.modifications_path);
    lex = lexicon::apply_modifications(lex, mods);
  }
  return lex;
}

std::vector<corpus::Document> load_store(const RunConfig& cfg) {
  const auto path = store_path(cfg);
  if (!fs::exists(path))
    throw UnreadablePath("document store not found (run ingest first): " + path.string());
  auto loaded = corpus::load_documents(path, corpus::CorpusFormat::Jsonl,
                                       corpus::Source::Tweet);
  return std::move(loaded.documents);
}

// Writes every staged file, appending the config-hash footer; removes
// whatever was written when any single write fails.
void commit_outputs(const RunConfig& cfg, RunOutputs& outputs) {
  const std::string footer = std::string(kConfigHashPrefix) + config_hash(cfg) + "\n";
  fs::create_directories(cfg.out_dir);
  std::vector<fs::path> written;
  try {
    for (auto& [name, content] : outputs.files) {
      content += footer;
      const fs::path target = cfg.out_dir / name;
      std::ofstream out(target, std::ios::binary | std::ios::trunc);
      if (!out) throw UnreadablePath("cannot write " + target.string());
      out << content;
      if (!out) throw UnreadablePath("short write on " + target.string());
      written.push_back(target);
    }
  } catch (...) {
    for (const auto& p : written) {
      std::error_code ec;
      fs::remove(p, ec);
    }
    throw;
  }
}

struct Stages {
  bool series = false;
  bool adf = false;
  bool granger = false;
  bool chatter = false;
  bool stats = false;
};

// Rethrows with the failing stage named, preserving the exit-code
// category the CLI keys on.
template <typename F>
auto with_stage(const char* stage, F&& f) {
  try {
    return f();
  } catch (const IoError& e) {
    throw UnreadablePath(std::string(stage) + ": " + e.what());
  } catch (const AnalysisError& e) {
    throw AnalysisError(std::string(stage) + ": " + e.what());
  }
}

void note_gaps(RunOutputs& outputs, const std::string& region, corpus::Source source,
               const std::map<std::string, series::EmotionSeries>& all) {
  std::size_t gaps = 0;
  for (const auto& [category, s] : all) gaps = std::max(gaps, s.gap_days);
  if (gaps > 0)
    outputs.warnings.push_back("gap policy filled " + std::to_string(gaps) + " day(s) for " +
                               region + " " + corpus::source_name(source));
}

RunOutputs run_stages(const RunConfig& cfg, const Stages& stages) {
  const auto docs = load_store(cfg);
  RunOutputs outputs;

  if (stages.stats) {
    const auto counts = report::corpus_stats(docs);
    outputs.files["stats.csv"] = report::corpus_stats_csv(counts);
  }

  const bool need_prep = stages.series || stages.adf || stages.granger || stages.chatter;
  if (!need_prep) {
    commit_outputs(cfg, outputs);
    return outputs;
  }
  const auto prep = with_stage("preprocess", [&] { return make_prep_config(cfg); });

  if (stages.chatter) {
    with_stage("chatterplot", [&] {
      require_file(cfg.sentiment_path, "sentiment lexicon");
      const auto slex = lexicon::load_sentiment_lexicon(cfg.sentiment_path);
      std::vector<corpus::Document> tweets;
      for (const auto& d : docs)
        if (d.source == corpus::Source::Tweet) tweets.push_back(d);
      const auto counts = cfg.parallel ? pipeline::count_tokens(tweets, prep)
                                       : pipeline::count_tokens_serial(tweets, prep);
      const auto records =
          report::chatterplot_from_counts(counts, slex, cfg.chatter_top, cfg.chatter_exclude);
      outputs.files["chatterplot.csv"] = report::chatterplot_csv(records);
      return 0;
    });
  }

  if (stages.series || stages.adf || stages.granger) {
    const auto lex = with_stage("lexicon", [&] { return make_lexicon(cfg); });
    const auto scores = with_stage("score", [&] {
      return cfg.parallel
                 ? pipeline::score_documents(docs, prep, lex, cfg.utc_offset_minutes)
                 : pipeline::score_documents_serial(docs, prep, lex, cfg.utc_offset_minutes);
    });

    series::AggregateOptions agg;
    agg.mode = cfg.aggregate_mode;
    agg.gap = cfg.gap_policy;
    agg.utc_offset_minutes = cfg.utc_offset_minutes;
    if (cfg.window_start) agg.window = series::DateRange{*cfg.window_start, *cfg.window_end};

    // region "" is the national bucket
    std::set<std::string> tweet_regions, bulletin_regions;
    for (const auto& d : docs)
      (d.source == corpus::Source::Tweet ? tweet_regions : bulletin_regions).insert(d.region);

    for (const auto& region : tweet_regions) {
      const std::string slug = region_slug(region);
      const auto tser = with_stage("aggregate", [&] {
        return pipeline::build_all_series(docs, scores, lex, region, corpus::Source::Tweet,
                                          agg);
      });
      note_gaps(outputs, slug, corpus::Source::Tweet, tser);
      if (stages.series) {
        std::vector<series::EmotionSeries> flat;
        for (const auto& [cat, s] : tser) flat.push_back(s);
        outputs.files["series_" + slug + "_tweet.csv"] = report::series_csv(flat);
      }
      if (!bulletin_regions.contains(region)) continue;
      const auto bser = with_stage("aggregate", [&] {
        return pipeline::build_all_series(docs, scores, lex, region, corpus::Source::Bulletin,
                                          agg);
      });
      note_gaps(outputs, slug, corpus::Source::Bulletin, bser);
      if (stages.series) {
        std::vector<series::EmotionSeries> flat;
        for (const auto& [cat, s] : bser) flat.push_back(s);
        outputs.files["series_" + slug + "_bulletin.csv"] = report::series_csv(flat);
      }

      if (stages.adf) {
        std::vector<report::AdfTableRow> rows;
        econ::AdfOptions opts;
        opts.max_lag = cfg.adf_max_lag;
        for (const auto& category : lex.categories()) {
          report::AdfTableRow row;
          row.variable = category;
          auto cell = [&](const series::EmotionSeries& s,
                          econ::AdfStage stage) -> std::optional<econ::AdfResult> {
            try {
              if (stage == econ::AdfStage::AtLevels)
                return econ::adf_test(s.values, stage, opts);
              return econ::adf_test(series::difference(s).values, stage, opts);
            } catch (const AnalysisError&) {
              return std::nullopt;
            }
          };
          row.bulletin_levels = cell(bser.at(category), econ::AdfStage::AtLevels);
          row.bulletin_diff = cell(bser.at(category), econ::AdfStage::FirstDifferenced);
          row.tweet_levels = cell(tser.at(category), econ::AdfStage::AtLevels);
          row.tweet_diff = cell(tser.at(category), econ::AdfStage::FirstDifferenced);
          rows.push_back(std::move(row));
        }
        const auto table = report::render_adf_table(rows);
        outputs.files["adf_" + slug + ".txt"] = table.text;
        outputs.files["adf_" + slug + ".csv"] = table.csv;
      }

      if (stages.granger) {
        const auto records = with_stage("granger", [&] {
          return cfg.parallel
                     ? pipeline::granger_pairwise_parallel(bser, tser, cfg.granger_max_lag)
                     : econ::granger_pairwise(bser, tser, cfg.granger_max_lag);
        });
        const auto table = report::render_granger_table(records);
        outputs.files["granger_" + slug + ".txt"] = table.text;
        outputs.files["granger_" + slug + ".csv"] = table.csv;
      }
    }
  }

  commit_outputs(cfg, outputs);
  return outputs;
}

}  // namespace

IngestReport run_ingest(const RunConfig& cfg) {
  require_file(cfg.tweets_path, "tweets");
  require_file(cfg.bulletins_dir, "bulletins");
  require_file(cfg.regions_path, "regions");
  const auto specs = corpus::load_region_specs(cfg.regions_path);

  const auto tweet_format = cfg.tweets_format == "csv" ? corpus::CorpusFormat::Csv
                                                       : corpus::CorpusFormat::Jsonl;
  auto tweets = corpus::load_documents(cfg.tweets_path, tweet_format, corpus::Source::Tweet);
  auto bulletins = corpus::load_documents(cfg.bulletins_dir,
                                          corpus::CorpusFormat::BulletinTextDir,
                                          corpus::Source::Bulletin);

  IngestReport rep;
  rep.tweets_loaded = tweets.documents.size();
  rep.bulletins_loaded = bulletins.documents.size();
  rep.tweets_skipped = tweets.skipped;
  rep.bulletins_skipped = bulletins.skipped;

  std::vector<corpus::Document> store;
  auto add_tweet = [&](corpus::Document&& d) { store.push_back(std::move(d)); };
  for (auto& d : tweets.documents) {
    if (!in_window(cfg, d)) {
      ++rep.window_dropped;
      continue;
    }
    if (!d.region.empty()) {
      add_tweet(std::move(d));
      continue;
    }
    if (!d.user_location) {
      add_tweet(std::move(d));  // national bucket, region stays empty
      continue;
    }
    // location-based assignment: country filter first, then region keys
    const std::string loc = to_lower_ascii(*d.user_location);
    if (!corpus::contains_word_bounded(loc, cfg.country_key)) {
      ++rep.foreign_dropped;
      continue;
    }
    bool assigned = false;
    for (const auto& spec : specs) {
      bool hit = corpus::contains_word_bounded(loc, to_lower_ascii(spec.canonical_name));
      for (const auto& a : spec.aliases)
        if (!hit) hit = corpus::contains_word_bounded(loc, to_lower_ascii(a));
      for (const auto& c : spec.cities)
        if (!hit) hit = corpus::contains_word_bounded(loc, to_lower_ascii(c));
      if (hit) {
        corpus::Document copy = d;
        copy.region = to_lower_ascii(spec.canonical_name);
        add_tweet(std::move(copy));
        assigned = true;
      }
    }
    if (!assigned) add_tweet(std::move(d));
  }
  for (auto& d : bulletins.documents) {
    if (!in_window(cfg, d)) {
      ++rep.window_dropped;
      continue;
    }
    store.push_back(std::move(d));
  }

  if (cfg.dedup) {
    std::unordered_set<std::string> seen;
    std::vector<corpus::Document> unique;
    unique.reserve(store.size());
    for (auto& d : store) {
      if (seen.insert(d.id + "\x1f" + d.region).second)
        unique.push_back(std::move(d));
      else
        ++rep.dedup_dropped;
    }
    store = std::move(unique);
  }
  if (store.empty()) throw EmptyCorpus("ingest produced no documents");

  rep.store_documents = store.size();
  rep.per_region = report::corpus_stats(store);

  const auto path = store_path(cfg);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write store " + path.string());
  for (const auto& d : store) {
    nlohmann::json j;
    j["id"] = d.id;
    j["created_at"] = format_timestamp(d.timestamp);
    j["region"] = d.region;
    j["source"] = corpus::source_name(d.source);
    j["text"] = d.text;
    if (d.user_location) j["user_location"] = *d.user_location;
    out << j.dump() << "\n";
  }

  std::string report_text = "ingest report\n";
  report_text += "tweets loaded: " + std::to_string(rep.tweets_loaded) +
                 " (skipped " + std::to_string(rep.tweets_skipped) + ")\n";
  report_text += "bulletins loaded: " + std::to_string(rep.bulletins_loaded) +
                 " (skipped " + std::to_string(rep.bulletins_skipped) + ")\n";
  report_text += "dropped outside window: " + std::to_string(rep.window_dropped) + "\n";
  report_text += "dropped by country filter: " + std::to_string(rep.foreign_dropped) + "\n";
  report_text += "duplicate ids dropped: " + std::to_string(rep.dedup_dropped) + "\n";
  report_text += "store documents: " + std::to_string(rep.store_documents) + "\n";
  report_text += "documents per region:\n";
  for (const auto& [region, n] : rep.per_region)
    report_text += "  " + region + ": " + std::to_string(n) + "\n";

  RunOutputs outputs;
  outputs.files["ingest_report.txt"] = std::move(report_text);
  commit_outputs(cfg, outputs);
  return rep;
}

RunOutputs run_analyze(const RunConfig& cfg) {
  Stages all;
  all.series = all.adf = all.granger = all.chatter = all.stats = true;
  return run_stages(cfg, all);
}

RunOutputs run_adf(const RunConfig& cfg) {
  Stages s;
  s.adf = true;
  return run_stages(cfg, s);
}

RunOutputs run_granger(const RunConfig& cfg) {
  Stages s;
  s.granger = true;
  return run_stages(cfg, s);
}

RunOutputs run_chatterplot(const RunConfig& cfg) {
  Stages s;
  s.chatter = true;
  return run_stages(cfg, s);
}

RunOutputs run_stats(const RunConfig& cfg) {
  Stages s;
  s.stats = true;
  return run_stages(cfg, s);
}

}  // namespace emolag

#ifndef EMOLAG_CONFIG_HPP
#define EMOLAG_CONFIG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emolag/date.hpp"
#include "emolag/series.hpp"

namespace emolag {

// Everything a run needs, parsed from a "key = value" config file.
// Relative paths resolve against the config file's directory; CLI
// flags override individual keys before validation.
struct RunConfig {
  // inputs
  std::filesystem::path tweets_path;
  std::string tweets_format = "jsonl";  // jsonl | csv
  std::filesystem::path bulletins_dir;
  std::filesystem::path lexicon_path;
  std::filesystem::path modifications_path;  // optional
  std::filesystem::path sentiment_path;
  std::vector<std::filesystem::path> stopword_paths;
  std::filesystem::path lemma_path;
  std::filesystem::path regions_path;
  std::filesystem::path store_path;  // normalized store (ingest writes, analyze reads)
  std::filesystem::path out_dir = "out";

  // study window (optional; both or neither)
  std::optional<Day> window_start;
  std::optional<Day> window_end;

  series::AggregateMode aggregate_mode = series::AggregateMode::MeanNormalized;
  series::GapPolicy gap_policy = series::GapPolicy::Zero;
  int adf_max_lag = 4;
  int granger_max_lag = 4;
  int utc_offset_minutes = 0;
  std::string country_key = "india";
  bool dedup = true;
  bool keep_hashtag_bodies = true;
  std::size_t chatter_top = 200;
  std::vector<std::string> chatter_exclude;
  bool parallel = true;

  // canonical key -> value view of everything above, kept in sync by
  // the parser and by set_key(); hashed into output footers
  std::map<std::string, std::string> keys;
};

RunConfig load_config(const std::filesystem::path& path);

// Applies one "key" to cfg (same names as the config file). Paths are
// resolved against base_dir. Throws ConfigError on unknown keys or bad
// values.
void set_key(RunConfig& cfg, const std::string& key, const std::string& value,
             const std::filesystem::path& base_dir);

// FNV-1a over the canonical "key=value" serialization, 16 hex digits.
std::string config_hash(const RunConfig& cfg);

inline constexpr const char* kConfigHashPrefix = "# config_hash=";

}  // namespace emolag

#endif  // EMOLAG_CONFIG_HPP

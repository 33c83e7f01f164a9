#include "emolag/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "emolag/errors.hpp"
#include "emolag/strings.hpp"

namespace emolag {

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, std::string_view value) {
  std::filesystem::path p{std::string(value)};
  return p.is_absolute() ? p : base / p;
}

int parse_int(const std::string& key, std::string_view value) {
  try {
    return std::stoi(std::string(value));
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not an integer: " + std::string(value));
  }
}

bool parse_bool(const std::string& key, std::string_view value) {
  const auto v = to_lower_ascii(value);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ConfigError("config key '" + key + "': not a boolean: " + std::string(value));
}

Day parse_day(const std::string& key, std::string_view value) {
  const auto d = parse_date(value);
  if (!d) throw ConfigError("config key '" + key + "': not a date: " + std::string(value));
  return *d;
}

}  // namespace

void set_key(RunConfig& cfg, const std::string& key, const std::string& value,
             const std::filesystem::path& base_dir) {
  const std::string v(trim(value));
  if (key == "tweets") {
    cfg.tweets_path = resolve(base_dir, v);
  } else if (key == "tweets_format") {
    const auto f = to_lower_ascii(v);
    if (f != "jsonl" && f != "csv")
      throw ConfigError("tweets_format must be jsonl or csv, got '" + v + "'");
    cfg.tweets_format = f;
  } else if (key == "bulletins") {
    cfg.bulletins_dir = resolve(base_dir, v);
  } else if (key == "lexicon") {
    cfg.lexicon_path = resolve(base_dir, v);
  } else if (key == "modifications") {
    cfg.modifications_path = resolve(base_dir, v);
  } else if (key == "sentiment") {
    cfg.sentiment_path = resolve(base_dir, v);
  } else if (key == "stopwords") {
    cfg.stopword_paths.clear();
    for (const auto& item : split_list(v)) cfg.stopword_paths.push_back(resolve(base_dir, item));
  } else if (key == "lemmas") {
    cfg.lemma_path = resolve(base_dir, v);
  } else if (key == "regions") {
    cfg.regions_path = resolve(base_dir, v);
  } else if (key == "store") {
    cfg.store_path = resolve(base_dir, v);
  } else if (key == "out_dir") {
    cfg.out_dir = resolve(base_dir, v);
  } else if (key == "window_start") {
    cfg.window_start = parse_day(key, v);
  } else if (key == "window_end") {
    cfg.window_end = parse_day(key, v);
  } else if (key == "aggregate") {
    const auto m = to_lower_ascii(v);
    if (m == "mean_normalized")
      cfg.aggregate_mode = series::AggregateMode::MeanNormalized;
    else if (m == "pooled")
      cfg.aggregate_mode = series::AggregateMode::Pooled;
    else
      throw ConfigError("aggregate must be mean_normalized or pooled, got '" + v + "'");
  } else if (key == "gap_policy") {
    const auto g = to_lower_ascii(v);
    if (g == "zero")
      cfg.gap_policy = series::GapPolicy::Zero;
    else if (g == "carry_forward")
      cfg.gap_policy = series::GapPolicy::CarryForward;
    else
      throw ConfigError("gap_policy must be zero or carry_forward, got '" + v + "'");
  } else if (key == "adf_max_lag") {
    cfg.adf_max_lag = parse_int(key, v);
    if (cfg.adf_max_lag < 1) throw ConfigError("adf_max_lag must be >= 1");
  } else if (key == "granger_max_lag") {
    cfg.granger_max_lag = parse_int(key, v);
    if (cfg.granger_max_lag < 1) throw ConfigError("granger_max_lag must be >= 1");
  } else if (key == "timezone_offset_minutes") {
    cfg.utc_offset_minutes = parse_int(key, v);
  } else if (key == "country_key") {
    cfg.country_key = to_lower_ascii(v);
  } else if (key == "dedup") {
    cfg.dedup = parse_bool(key, v);
  } else if (key == "keep_hashtag_bodies") {
    cfg.keep_hashtag_bodies = parse_bool(key, v);
  } else if (key == "chatter_top") {
    const int n = parse_int(key, v);
    if (n < 1) throw ConfigError("chatter_top must be >= 1");
    cfg.chatter_top = static_cast<std::size_t>(n);
  } else if (key == "chatter_exclude") {
    cfg.chatter_exclude.clear();
    for (const auto& w : split_list(v)) cfg.chatter_exclude.push_back(to_lower_ascii(w));
  } else if (key == "parallel") {
    cfg.parallel = parse_bool(key, v);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
  cfg.keys[key] = v;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key{trim(t.substr(0, eq))};
    const std::string value{trim(t.substr(eq + 1))};
    try {
      set_key(cfg, key, value, base);
    } catch (const ConfigError& e) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }

  if (cfg.window_start && cfg.window_end && *cfg.window_end < *cfg.window_start)
    throw ConfigError("window_start is after window_end");
  if (cfg.window_start.has_value() != cfg.window_end.has_value())
    throw ConfigError("window_start and window_end must be set together");
  return cfg;
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view s) {
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [key, value] : cfg.keys) {
    mix(key);
    mix("=");
    mix(value);
    mix("\n");
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace emolag

#include "emolag/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emolag/date.hpp"
#include "emolag/errors.hpp"
#include "emolag/strings.hpp"

namespace emolag::corpus {

namespace fs = std::filesystem;
using nlohmann::json;

const char* source_name(Source s) { return s == Source::Tweet ? "Tweet" : "Bulletin"; }

namespace {

constexpr std::size_t kMaxWarnings = 20;

void note_skip(LoadResult& out, const std::string& what) {
  ++out.skipped;
  if (out.warnings.size() < kMaxWarnings) out.warnings.push_back(what);
}

std::string json_id(const json& j) {
  const auto it = j.find("id");
  if (it == j.end()) return {};
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
  if (it->is_number_unsigned()) return std::to_string(it->get<std::uint64_t>());
  return {};
}

void load_jsonl(const fs::path& path, Source source, LoadResult& out) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      note_skip(out, "line " + std::to_string(lineno) + ": not a JSON object");
      continue;
    }
    std::vector<std::string> missing;
    const std::string id = json_id(j);
    if (id.empty()) missing.push_back("id");
    if (!j.contains("created_at") || !j["created_at"].is_string()) missing.push_back("created_at");
    if (!j.contains("text") || !j["text"].is_string()) missing.push_back("text");
    if (!missing.empty()) {
      std::string fields;
      for (const auto& f : missing) fields += (fields.empty() ? "" : ",") + f;
      note_skip(out, "line " + std::to_string(lineno) + ": missing " + fields);
      continue;
    }
    const auto ts = parse_timestamp(j["created_at"].get<std::string>());
    if (!ts) {
      note_skip(out, "line " + std::to_string(lineno) + ": bad created_at");
      continue;
    }
    Document d;
    d.id = id;
    d.timestamp = *ts;
    d.source = source;
    d.text = j["text"].get<std::string>();
    if (j.contains("region") && j["region"].is_string())
      d.region = to_lower_ascii(j["region"].get<std::string>());
    if (j.contains("user_location") && j["user_location"].is_string())
      d.user_location = j["user_location"].get<std::string>();
    // normalized-store records carry their own source
    if (j.contains("source") && j["source"].is_string())
      d.source = j["source"].get<std::string>() == "Bulletin" ? Source::Bulletin
                                                              : Source::Tweet;
    out.documents.push_back(std::move(d));
  }
}

// RFC4180: quoted fields may hold commas, quotes ("" escape) and newlines.
std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && in.peek() == '\n') in.get();
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += c;
    }
  }
  if (any && (!field.empty() || !row.empty())) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void load_csv(const fs::path& path, Source source, LoadResult& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  const auto rows = parse_csv(in);
  if (rows.empty()) throw EmptyCorpus("empty csv: " + path.string());

  const auto& header = rows.front();
  auto col = [&](std::string_view name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == name) return static_cast<int>(i);
    return -1;
  };
  const int c_id = col("id"), c_ts = col("created_at"), c_text = col("text");
  const int c_loc = col("user_location"), c_region = col("region");
  {
    std::string missing;
    if (c_id < 0) missing += "id ";
    if (c_ts < 0) missing += "created_at ";
    if (c_text < 0) missing += "text ";
    if (!missing.empty())
      throw SchemaError("csv header missing required fields: " + missing + "in " +
                        path.string());
  }

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto cell = [&](int c) -> std::string {
      return (c >= 0 && static_cast<std::size_t>(c) < row.size()) ? row[c] : std::string{};
    };
    const std::string id = cell(c_id);
    const auto ts = parse_timestamp(cell(c_ts));
    if (id.empty() || !ts) {
      note_skip(out, "csv row " + std::to_string(r + 1) + ": bad id or created_at");
      continue;
    }
    if (static_cast<std::size_t>(c_text) >= row.size()) {
      note_skip(out, "csv row " + std::to_string(r + 1) + ": missing text");
      continue;
    }
    Document d;
    d.id = id;
    d.timestamp = *ts;
    d.source = source;
    d.text = cell(c_text);
    d.region = to_lower_ascii(cell(c_region));
    const std::string loc = cell(c_loc);
    if (!loc.empty()) d.user_location = loc;
    out.documents.push_back(std::move(d));
  }
}

void load_bulletin_dir(const fs::path& path, Source source, LoadResult& out) {
  if (!fs::is_directory(path)) throw UnreadablePath("not a directory: " + path.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  for (const auto& f : files) {
    const std::string stem = f.stem().string();  // YYYY-MM-DD_<region>
    const auto date = stem.size() > 11 ? parse_date(stem.substr(0, 10)) : std::nullopt;
    if (!date || stem[10] != '_') {
      note_skip(out, "bulletin filename not YYYY-MM-DD_<region>.txt: " + f.filename().string());
      continue;
    }
    std::ifstream in(f, std::ios::binary);
    if (!in) {
      note_skip(out, "unreadable bulletin: " + f.filename().string());
      continue;
    }
    std::ostringstream text;
    text << in.rdbuf();
    Document d;
    d.id = stem;
    d.timestamp = static_cast<std::int64_t>(*date) * 86400;
    d.region = to_lower_ascii(stem.substr(11));
    d.source = source;
    d.text = text.str();
    out.documents.push_back(std::move(d));
  }
}

}  // namespace

LoadResult load_documents(const fs::path& path, CorpusFormat format, Source source) {
  if (!fs::exists(path)) throw UnreadablePath("no such path: " + path.string());
  LoadResult out;
  switch (format) {
    case CorpusFormat::Jsonl:
      load_jsonl(path, source, out);
      break;
    case CorpusFormat::Csv:
      load_csv(path, source, out);
      break;
    case CorpusFormat::BulletinTextDir:
      load_bulletin_dir(path, source, out);
      break;
  }
  if (out.documents.empty())
    throw EmptyCorpus("no valid documents in " + path.string() + " (" +
                      std::to_string(out.skipped) + " skipped)");
  return out;
}

namespace {

std::string squeeze_token(std::string_view name) {
  std::string out;
  for (char c : name)
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

QuerySet generate_queries(const RegionSpec& region, std::span<const std::string> prefixes,
                          std::span<const std::string> hashtag_prefixes) {
  if (trim(region.canonical_name).empty())
    throw EmptyRegionSpec("region spec has no canonical name");
  if (prefixes.empty()) throw std::invalid_argument("generate_queries: prefixes empty");

  std::vector<std::string> names;
  names.push_back(to_lower_ascii(region.canonical_name));
  for (const auto& a : region.aliases) names.push_back(to_lower_ascii(a));

  std::set<std::string> plain, tags;
  for (const auto& p : prefixes)
    for (const auto& name : names) plain.insert(to_lower_ascii(p) + name);
  for (const auto& name : names) {
    const std::string compact = squeeze_token(name);
    for (const auto& hp : hashtag_prefixes) tags.insert("#" + to_lower_ascii(hp) + compact);
    tags.insert("#" + compact + "fightscorona");
  }

  QuerySet qs;
  qs.region = names.front();
  qs.plain_queries.assign(plain.begin(), plain.end());
  qs.hashtags.assign(tags.begin(), tags.end());
  return qs;
}

bool contains_word_bounded(std::string_view haystack, std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  for (std::size_t pos = 0; (pos = haystack.find(needle, pos)) != std::string_view::npos;
       ++pos) {
    const bool left_ok = pos == 0 || !is_word(haystack[pos - 1]);
    const std::size_t end = pos + needle.size();
    const bool right_ok = end == haystack.size() || !is_word(haystack[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

std::map<std::string, std::vector<Document>> filter_by_location(
    std::span<const Document> docs, const std::string& country_key,
    std::span<const RegionSpec> regions) {
  const std::string country = to_lower_ascii(country_key);
  std::map<std::string, std::vector<Document>> buckets;
  for (const auto& doc : docs) {
    if (!doc.user_location) continue;
    const std::string loc = to_lower_ascii(*doc.user_location);
    if (!contains_word_bounded(loc, country)) continue;
    bool assigned = false;
    for (const auto& spec : regions) {
      bool hit = contains_word_bounded(loc, to_lower_ascii(spec.canonical_name));
      for (const auto& a : spec.aliases)
        if (!hit) hit = contains_word_bounded(loc, to_lower_ascii(a));
      for (const auto& c : spec.cities)
        if (!hit) hit = contains_word_bounded(loc, to_lower_ascii(c));
      if (hit) {
        Document copy = doc;
        copy.region = to_lower_ascii(spec.canonical_name);
        buckets[copy.region].push_back(std::move(copy));
        assigned = true;
      }
    }
    if (!assigned) buckets[kNationalBucket].push_back(doc);
  }
  return buckets;
}

std::vector<RegionSpec> load_region_specs(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  std::vector<RegionSpec> specs;
  RegionSpec cur;
  auto flush = [&]() {
    if (!cur.canonical_name.empty()) specs.push_back(std::move(cur));
    cur = RegionSpec{};
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected key: value");
    const auto key = trim(t.substr(0, colon));
    const auto value = t.substr(colon + 1);
    if (key == "name") {
      flush();
      cur.canonical_name = to_lower_ascii(trim(value));
    } else if (key == "aliases") {
      for (auto& a : split_list(value)) cur.aliases.push_back(to_lower_ascii(a));
    } else if (key == "cities") {
      for (auto& c : split_list(value)) cur.cities.push_back(to_lower_ascii(c));
    } else {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  flush();
  if (specs.empty()) throw EmptyRegionSpec("no regions in " + path.string());
  return specs;
}

}  // namespace emolag::corpus

#ifndef EMOLAG_CORPUS_HPP
#define EMOLAG_CORPUS_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emolag/document.hpp"

namespace emolag::corpus {

struct RegionSpec {
  std::string canonical_name;
  std::vector<std::string> aliases;  // misspellings, abbreviations
  std::vector<std::string> cities;
};

struct QuerySet {
  std::vector<std::string> plain_queries;
  std::vector<std::string> hashtags;
  std::string region;
};

enum class CorpusFormat { Jsonl, Csv, BulletinTextDir };

struct LoadResult {
  std::vector<Document> documents;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;  // one note per skipped record, capped
};

// Reads a tweet file (jsonl/csv: required fields id, created_at, text)
// or a bulletin directory (one YYYY-MM-DD_<region>.txt per bulletin).
// Malformed records are counted and skipped, not fatal.
LoadResult load_documents(const std::filesystem::path& path, CorpusFormat format,
                          Source source);

// Builds the collection query set for one region: every prefix is
// prepended to the canonical name and each alias; hashtag prefixes
// likewise (with spaces squeezed out), plus "#<name>fightscorona".
// Output is lowercase, deduplicated and sorted.
QuerySet generate_queries(const RegionSpec& region, std::span<const std::string> prefixes,
                          std::span<const std::string> hashtag_prefixes);

// Bucket for kept documents whose location matched no region.
inline constexpr const char* kNationalBucket = "national";

// Keeps documents whose lowercased user_location contains country_key
// (whole-word), then assigns each to every region with a matching
// name/alias/city token. Documents without a location are dropped.
std::map<std::string, std::vector<Document>> filter_by_location(
    std::span<const Document> docs, const std::string& country_key,
    std::span<const RegionSpec> regions);

// Region spec file: blocks of "name:", "aliases:", "cities:" lines,
// comma-separated lists, blank line between regions.
std::vector<RegionSpec> load_region_specs(const std::filesystem::path& path);

// True when needle occurs in haystack bounded by non-alphanumerics.
bool contains_word_bounded(std::string_view haystack, std::string_view needle);

}  // namespace emolag::corpus

#endif  // EMOLAG_CORPUS_HPP

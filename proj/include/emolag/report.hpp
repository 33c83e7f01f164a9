#ifndef EMOLAG_REPORT_HPP
#define EMOLAG_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emolag/document.hpp"
#include "emolag/econ.hpp"
#include "emolag/lexicon.hpp"
#include "emolag/series.hpp"

namespace emolag::report {

// "***" p<0.001, "**" p<0.01, "*" p<0.05, "NS" otherwise (strict
// inequalities). Non-computable entries render as "NC" elsewhere.
std::string significance_code(double p_value);

struct RenderedTable {
  std::string text;
  std::string csv;
};

// One variable of the ADF table; nullopt cells render "NC".
struct AdfTableRow {
  std::string variable;
  std::optional<econ::AdfResult> bulletin_levels;
  std::optional<econ::AdfResult> bulletin_diff;
  std::optional<econ::AdfResult> tweet_levels;
  std::optional<econ::AdfResult> tweet_diff;
};

RenderedTable render_adf_table(std::span<const AdfTableRow> rows);

RenderedTable render_granger_table(std::span<const econ::GrangerRecord> records);

// Documents per region ("" counts under the national bucket).
std::map<std::string, std::size_t> corpus_stats(std::span<const corpus::Document> docs);

std::string corpus_stats_csv(const std::map<std::string, std::size_t>& counts);

struct ChatterRecord {
  std::string word;
  std::uint64_t frequency = 0;
  int sentiment = 0;  // -1, 0, +1
};

// Token frequencies over preprocessed documents, exclusions dropped,
// top_n kept, sorted by frequency descending (ties by word).
std::vector<ChatterRecord> chatterplot_export(
    std::span<const std::vector<std::string>> token_lists,
    const lexicon::SentimentLexicon& slex, std::size_t top_n,
    std::span<const std::string> exclude);

// Same, from a precomputed frequency table.
std::vector<ChatterRecord> chatterplot_from_counts(
    const std::map<std::string, std::uint64_t>& counts,
    const lexicon::SentimentLexicon& slex, std::size_t top_n,
    std::span<const std::string> exclude);

std::string chatterplot_csv(std::span<const ChatterRecord> records);

// date,region,source,category,value rows for one or more series.
std::string series_csv(std::span<const series::EmotionSeries> all);

std::string csv_escape(std::string_view field);

}  // namespace emolag::report

#endif  // EMOLAG_REPORT_HPP

#ifndef EMOLAG_SERIES_HPP
#define EMOLAG_SERIES_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emolag/date.hpp"
#include "emolag/document.hpp"
#include "emolag/lexicon.hpp"

namespace emolag::series {

// Daily values for one (region, source, category); days are contiguous
// starting at start_date.
struct EmotionSeries {
  std::string region;
  corpus::Source source = corpus::Source::Tweet;
  std::string category;
  Day start_date = 0;
  std::vector<double> values;
  std::size_t gap_days = 0;  // days filled by the gap policy
};

struct PairedSeries {
  EmotionSeries y;
  EmotionSeries x;
  std::size_t n = 0;  // common length
};

enum class AggregateMode { MeanNormalized, Pooled };
enum class GapPolicy { Zero, CarryForward };

struct DateRange {
  Day first;
  Day last;  // inclusive
};

struct AggregateOptions {
  AggregateMode mode = AggregateMode::MeanNormalized;
  GapPolicy gap = GapPolicy::Zero;
  std::optional<DateRange> window;  // default: observed min..max day
  int utc_offset_minutes = 0;
};

// Per-day running sums for one category over a contiguous day span.
// Shared by the serial aggregate below and the pipeline kernels so
// both take the exact same arithmetic path.
struct DailyAccum {
  Day lo = 0;
  std::vector<double> norm_sum;
  std::vector<double> raw_sum;
  std::vector<double> tok_sum;
  std::vector<std::size_t> count;

  explicit DailyAccum(Day lo_, std::size_t days)
      : lo(lo_), norm_sum(days, 0.0), raw_sum(days, 0.0), tok_sum(days, 0.0), count(days, 0) {}

  void add(Day day, double normalized, double raw, double total_tokens) {
    if (day < lo || day >= lo + static_cast<Day>(count.size())) return;
    const auto d = static_cast<std::size_t>(day - lo);
    norm_sum[d] += normalized;
    raw_sum[d] += raw;
    tok_sum[d] += total_tokens;
    ++count[d];
  }
};

// Turns accumulated sums into daily values per the mode and gap policy.
EmotionSeries reduce_daily(const DailyAccum& acc, const std::string& region,
                           corpus::Source source, const std::string& category,
                           const AggregateOptions& opts);

// Serial reference aggregation. Selects documents matching (region,
// source), buckets them by calendar day and reduces per the mode:
// mean of per-document normalized scores, or pooled sum(raw)/sum(total).
EmotionSeries aggregate(
    std::span<const std::pair<corpus::Document, lexicon::CategoryScores>> scored,
    const std::string& category, const std::string& region, corpus::Source source,
    const AggregateOptions& opts = {});

// One-day difference: out[i] = in[i+1] - in[i].
EmotionSeries difference(const EmotionSeries& s);

// Truncates both series to the intersection of their date ranges.
// Categories must agree unless allow_category_mismatch.
PairedSeries align(const EmotionSeries& a, const EmotionSeries& b,
                   bool allow_category_mismatch = false);

}  // namespace emolag::series

#endif  // EMOLAG_SERIES_HPP

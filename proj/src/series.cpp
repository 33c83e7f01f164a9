#include "emolag/series.hpp"

#include <algorithm>

#include "emolag/errors.hpp"

namespace emolag::series {

EmotionSeries reduce_daily(const DailyAccum& acc, const std::string& region,
                           corpus::Source source, const std::string& category,
                           const AggregateOptions& opts) {
  EmotionSeries out;
  out.region = region;
  out.source = source;
  out.category = category;
  out.start_date = acc.lo;
  out.values.resize(acc.count.size(), 0.0);
  double prev = 0.0;
  for (std::size_t d = 0; d < acc.count.size(); ++d) {
    if (acc.count[d] == 0) {
      out.values[d] = opts.gap == GapPolicy::CarryForward ? prev : 0.0;
      ++out.gap_days;
    } else if (opts.mode == AggregateMode::MeanNormalized) {
      out.values[d] = acc.norm_sum[d] / static_cast<double>(acc.count[d]);
    } else {
      out.values[d] = acc.tok_sum[d] > 0.0 ? acc.raw_sum[d] / acc.tok_sum[d] : 0.0;
    }
    prev = out.values[d];
  }
  return out;
}

EmotionSeries aggregate(
    std::span<const std::pair<corpus::Document, lexicon::CategoryScores>> scored,
    const std::string& category, const std::string& region, corpus::Source source,
    const AggregateOptions& opts) {
  Day lo = 0, hi = 0;
  bool seen = false;
  std::vector<std::pair<Day, const lexicon::CategoryScores*>> rows;
  for (const auto& [doc, scores] : scored) {
    if (doc.region != region || doc.source != source) continue;
    const Day day = day_of_timestamp(doc.timestamp, opts.utc_offset_minutes);
    rows.emplace_back(day, &scores);
    lo = seen ? std::min(lo, day) : day;
    hi = seen ? std::max(hi, day) : day;
    seen = true;
  }
  if (!seen)
    throw EmptySelection("no documents for region '" + region + "' source " +
                         corpus::source_name(source));
  if (opts.window) {
    lo = opts.window->first;
    hi = opts.window->last;
  }
  if (hi < lo) throw EmptySelection("empty aggregation window");

  DailyAccum acc(lo, static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [day, scores] : rows)
    acc.add(day, scores->normalized_of(category),
            static_cast<double>(scores->raw_of(category)),
            static_cast<double>(scores->total_tokens));
  return reduce_daily(acc, region, source, category, opts);
}

EmotionSeries difference(const EmotionSeries& s) {
  if (s.values.size() < 2) throw TooShort("difference needs at least 2 observations");
  EmotionSeries out;
  out.region = s.region;
  out.source = s.source;
  out.category = s.category;
  out.start_date = s.start_date + 1;
  out.values.resize(s.values.size() - 1);
  for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
    out.values[i] = s.values[i + 1] - s.values[i];
  return out;
}

PairedSeries align(const EmotionSeries& a, const EmotionSeries& b,
                   bool allow_category_mismatch) {
  if (!allow_category_mismatch && a.category != b.category)
    throw CategoryMismatch("align: '" + a.category + "' vs '" + b.category + "'");
  const Day lo = std::max(a.start_date, b.start_date);
  const Day a_end = a.start_date + static_cast<Day>(a.values.size());  // exclusive
  const Day b_end = b.start_date + static_cast<Day>(b.values.size());
  const Day hi = std::min(a_end, b_end);
  if (hi - lo < 2) throw NoOverlap("align: date ranges overlap on fewer than 2 days");

  auto cut = [lo, hi](const EmotionSeries& s) {
    EmotionSeries out = s;
    out.start_date = lo;
    out.values.assign(s.values.begin() + (lo - s.start_date),
                      s.values.begin() + (hi - s.start_date));
    return out;
  };
  PairedSeries pair;
  pair.y = cut(a);
  pair.x = cut(b);
  pair.n = pair.y.values.size();
  return pair;
}

}  // namespace emolag::series

#include "emolag/report.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "emolag/corpus.hpp"

namespace emolag::report {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

const char* granger_code(econ::GrangerSignificance s) {
  switch (s) {
    case econ::GrangerSignificance::Sig01:
      return "***";
    case econ::GrangerSignificance::Sig1:
      return "**";
    case econ::GrangerSignificance::Sig5:
      return "*";
    default:
      return "NS";
  }
}

}  // namespace

std::string significance_code(double p_value) {
  if (p_value < 0.001) return "***";
  if (p_value < 0.01) return "**";
  if (p_value < 0.05) return "*";
  return "NS";
}

std::string csv_escape(std::string_view field) {
  const bool needs_quote = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quote) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

RenderedTable render_adf_table(std::span<const AdfTableRow> rows) {
  auto tau_cell = [](const std::optional<econ::AdfResult>& r) {
    return r ? fmt("%.4f", r->tau) : std::string("NC");
  };
  auto sig_cell = [](const std::optional<econ::AdfResult>& r) {
    return r ? std::string(econ::adf_significance_code(r->significance)) : std::string("NC");
  };

  RenderedTable out;
  out.csv =
      "variable,bulletin_tau_levels,bulletin_sig_levels,bulletin_tau_diff,bulletin_sig_diff,"
      "tweet_tau_levels,tweet_sig_levels,tweet_tau_diff,tweet_sig_diff\n";

  const std::size_t name_w = 20, tau_w = 10, sig_w = 5;
  out.text += pad("", name_w) + pad("Bulletin", 2 * (tau_w + sig_w)) + pad("Tweet", 2 * (tau_w + sig_w)) + "\n";
  out.text += pad("Variable", name_w);
  for (int i = 0; i < 2; ++i)
    out.text += pad("At Levels", tau_w + sig_w) + pad("First Diff", tau_w + sig_w);
  out.text += "\n";
  out.text += pad("", name_w);
  for (int i = 0; i < 4; ++i) out.text += pad("tau", tau_w) + pad("sig", sig_w);
  out.text += "\n";

  for (const auto& row : rows) {
    out.text += pad(row.variable, name_w);
    for (const auto* cell :
         {&row.bulletin_levels, &row.bulletin_diff, &row.tweet_levels, &row.tweet_diff})
      out.text += pad(tau_cell(*cell), tau_w) + pad(sig_cell(*cell), sig_w);
    out.text += "\n";

    out.csv += csv_escape(row.variable);
    for (const auto* cell :
         {&row.bulletin_levels, &row.bulletin_diff, &row.tweet_levels, &row.tweet_diff})
      out.csv += "," + tau_cell(*cell) + "," + sig_cell(*cell);
    out.csv += "\n";
  }
  out.text +=
      "Critical values of tau: -1.951 at 5% and -2.623 at 1%. "
      "**: significant at 1%; *: significant at 5%; NS: non-significant; "
      "NC: non-computable.\n";
  return out;
}

RenderedTable render_granger_table(std::span<const econ::GrangerRecord> records) {
  RenderedTable out;
  out.csv = "variable,caused_set,causal_set,lag_p,f_value,df_num,df_den,p_value,significance\n";

  const std::size_t name_w = 20, set_w = 16, f_w = 10, p_w = 10, rem_w = 8;
  out.text += pad("Variable", name_w) + pad("Caused Set (Y)", set_w) +
              pad("Causal Set (X)", set_w) + pad("F-Value", f_w) + pad("p-Value", p_w) +
              pad("Remark", rem_w) + "\n";

  std::string last_variable;
  std::string skipped_notes;
  for (const auto& rec : records) {
    if (rec.skipped) {
      out.text += pad(rec.category, name_w) + "skipped: " + rec.skip_reason + "\n";
      skipped_notes += "# skipped: " + rec.category + " (" + rec.skip_reason + ")\n";
      continue;
    }
    const auto& r = rec.result;
    const std::string shown = rec.category == last_variable ? "" : rec.category;
    last_variable = rec.category;
    out.text += pad(shown, name_w) + pad(r.caused, set_w) + pad(r.causal, set_w) +
                pad(fmt("%.3f", r.f_value), f_w) + pad(fmt("%.4f", r.p_value), p_w) +
                pad(granger_code(r.significance), rem_w) + "\n";

    char line[256];
    std::snprintf(line, sizeof(line), ",%s,%s,%d,%.6g,%d,%d,%.6g,%s\n", r.caused.c_str(),
                  r.causal.c_str(), r.lag_p, r.f_value, r.df_num, r.df_den, r.p_value,
                  granger_code(r.significance));
    out.csv += csv_escape(rec.category) + line;
  }
  out.text +=
      "***: significant at 0.1%; **: significant at 1%; *: significant at 5%; "
      "NS: non-significant.\n";
  out.csv += skipped_notes;
  return out;
}

std::map<std::string, std::size_t> corpus_stats(std::span<const corpus::Document> docs) {
  std::map<std::string, std::size_t> counts;
  for (const auto& d : docs)
    ++counts[d.region.empty() ? std::string(corpus::kNationalBucket) : d.region];
  return counts;
}

std::string corpus_stats_csv(const std::map<std::string, std::size_t>& counts) {
  std::string out = "region,documents\n";
  std::size_t total = 0;
  for (const auto& [region, n] : counts) {
    out += csv_escape(region) + "," + std::to_string(n) + "\n";
    total += n;
  }
  out += "total," + std::to_string(total) + "\n";
  return out;
}

std::vector<ChatterRecord> chatterplot_from_counts(
    const std::map<std::string, std::uint64_t>& counts,
    const lexicon::SentimentLexicon& slex, std::size_t top_n,
    std::span<const std::string> exclude) {
  std::vector<ChatterRecord> all;
  all.reserve(counts.size());
  for (const auto& [word, freq] : counts) {
    if (std::find(exclude.begin(), exclude.end(), word) != exclude.end()) continue;
    all.push_back({word, freq, lexicon::sentiment_of(word, slex)});
  }
  std::sort(all.begin(), all.end(), [](const ChatterRecord& a, const ChatterRecord& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
  });
  if (all.size() > top_n) all.resize(top_n);
  return all;
}

std::vector<ChatterRecord> chatterplot_export(
    std::span<const std::vector<std::string>> token_lists,
    const lexicon::SentimentLexicon& slex, std::size_t top_n,
    std::span<const std::string> exclude) {
  std::map<std::string, std::uint64_t> counts;
  for (const auto& tokens : token_lists)
    for (const auto& t : tokens) ++counts[t];
  return chatterplot_from_counts(counts, slex, top_n, exclude);
}

std::string chatterplot_csv(std::span<const ChatterRecord> records) {
  std::string out = "word,frequency,sentiment\n";
  for (const auto& r : records)
    out += csv_escape(r.word) + "," + std::to_string(r.frequency) + "," +
           std::to_string(r.sentiment) + "\n";
  return out;
}

std::string series_csv(std::span<const series::EmotionSeries> all) {
  std::string out = "date,region,source,category,value\n";
  for (const auto& s : all) {
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6g", s.values[i]);
      out += format_date(s.start_date + static_cast<Day>(i)) + "," + csv_escape(s.region) +
             "," + corpus::source_name(s.source) + "," + csv_escape(s.category) + "," + buf +
             "\n";
    }
  }
  return out;
}

}  // namespace emolag::report

#include "emolag/econ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "emolag/errors.hpp"
#include "emolag/fdist.hpp"

namespace emolag::econ {

namespace {

bool is_constant(std::span<const double> v) {
  for (const double x : v)
    if (x != v.front()) return false;
  return true;
}

std::vector<double> diff(std::span<const double> v) {
  std::vector<double> d(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) d[i] = v[i + 1] - v[i];
  return d;
}

// Fits Eq-style ADF regression using rows i in [start, dy.size()):
// response dy[i], regressors level[i], dy[i-1], ..., dy[i-m].
OlsFit fit_adf(std::span<const double> level, std::span<const double> dy, int m,
               std::size_t start) {
  const std::size_t rows = dy.size() - start;
  DesignMatrix X(rows, static_cast<std::size_t>(m) + 1);
  std::vector<double> y(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i = start + r;
    y[r] = dy[i];
    X.at(r, 0) = level[i];
    for (int j = 1; j <= m; ++j) X.at(r, static_cast<std::size_t>(j)) = dy[i - j];
  }
  return ols(y, X);
}

}  // namespace

AdfSignificance classify_tau(double tau) {
  if (tau < kAdfCritical1) return AdfSignificance::Sig1;
  if (tau < kAdfCritical5) return AdfSignificance::Sig5;
  return AdfSignificance::NS;
}

const char* adf_significance_code(AdfSignificance s) {
  switch (s) {
    case AdfSignificance::Sig1:
      return "**";
    case AdfSignificance::Sig5:
      return "*";
    case AdfSignificance::Unclassified:
      return "UC";
    default:
      return "NS";
  }
}

AdfResult adf_test(std::span<const double> values, AdfStage stage, const AdfOptions& opts) {
  const std::size_t n_level = values.size();
  if (n_level < 6) throw TooShort("adf_test: need at least 6 observations");
  if (is_constant(values))
    throw ConstantSeries("adf_test: series has no variability");

  const std::vector<double> dy = diff(values);
  // level[i] pairs with dy[i] as Y_{t-1}.
  const std::span<const double> level = values.first(values.size() - 1);

  auto feasible = [&](int m) {
    // dy length >= m + 5 and at least one residual degree of freedom
    return dy.size() >= static_cast<std::size_t>(m) + 5 &&
           dy.size() >= 2 * static_cast<std::size_t>(m) + 2;
  };

  int m = 0;
  if (opts.fixed_lag) {
    m = *opts.fixed_lag;
    if (m < 0) throw std::invalid_argument("adf_test: negative lag");
    if (!feasible(m)) throw TooShort("adf_test: series too short for lag m");
  } else {
    int max_m = std::max(opts.max_lag, 0);
    while (max_m > 0 && !feasible(max_m)) --max_m;
    if (!feasible(0)) throw TooShort("adf_test: series too short");
    // All candidates compared on the common sample i >= max_m.
    double best_aic = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand <= max_m; ++cand) {
      const OlsFit fit = fit_adf(level, dy, cand, static_cast<std::size_t>(max_m));
      if (fit.aic < best_aic) {
        best_aic = fit.aic;
        m = cand;
      }
    }
  }

  const OlsFit fit = fit_adf(level, dy, m, static_cast<std::size_t>(m));
  AdfResult res;
  res.lag_m = m;
  res.stage = stage;
  res.nobs = fit.n;
  res.tau = fit.beta[0] / fit.se[0];
  if (!std::isfinite(res.tau))
    throw ConstantSeries("adf_test: test statistic not computable");
  if (fit.n < kAdfClassifyMinN || fit.n > kAdfClassifyMaxN)
    res.significance = AdfSignificance::Unclassified;
  else
    res.significance = classify_tau(res.tau);
  res.stationary = res.significance == AdfSignificance::Sig5 ||
                   res.significance == AdfSignificance::Sig1;
  return res;
}

GrangerSignificance granger_significance(double p_value) {
  if (p_value < 0.001) return GrangerSignificance::Sig01;
  if (p_value < 0.01) return GrangerSignificance::Sig1;
  if (p_value < 0.05) return GrangerSignificance::Sig5;
  return GrangerSignificance::NS;
}

namespace {

// Unrestricted (with x) or restricted (x empty) Granger regression on
// rows t in [start, n): y_t ~ 1 + y_{t-1..t-p} (+ x_{t-1..t-p}).
OlsFit fit_var(std::span<const double> y, std::span<const double> x, int p,
               std::size_t start) {
  const std::size_t rows = y.size() - start;
  const std::size_t k = 1 + static_cast<std::size_t>(p) * (x.empty() ? 1 : 2);
  DesignMatrix X(rows, k);
  std::vector<double> resp(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t t = start + r;
    resp[r] = y[t];
    X.at(r, 0) = 1.0;
    for (int j = 1; j <= p; ++j) X.at(r, static_cast<std::size_t>(j)) = y[t - j];
    if (!x.empty())
      for (int j = 1; j <= p; ++j)
        X.at(r, static_cast<std::size_t>(p + j)) = x[t - j];
  }
  return ols(resp, X);
}

}  // namespace

int select_lag_aic(std::span<const double> y, std::span<const double> x, int max_p) {
  if (max_p < 1) throw std::invalid_argument("select_lag_aic: max_p must be >= 1");
  if (!x.empty() && x.size() != y.size())
    throw std::invalid_argument("select_lag_aic: length mismatch");
  const std::size_t k_max = 1 + static_cast<std::size_t>(max_p) * (x.empty() ? 1 : 2);
  if (y.size() < static_cast<std::size_t>(max_p) + k_max + 3)
    throw TooShort("select_lag_aic: not enough observations for max_p");

  int best_p = 1;
  double best_aic = std::numeric_limits<double>::infinity();
  for (int p = 1; p <= max_p; ++p) {
    const OlsFit fit = fit_var(y, x, p, static_cast<std::size_t>(max_p));
    if (fit.aic < best_aic) {
      best_aic = fit.aic;
      best_p = p;
    }
  }
  return best_p;
}

GrangerResult granger_test(const series::PairedSeries& pair, int lag_p) {
  if (lag_p < 1) throw std::invalid_argument("granger_test: lag must be >= 1");
  const auto& y = pair.y.values;
  const auto& x = pair.x.values;
  const std::size_t n = pair.n;
  if (y.size() != n || x.size() != n)
    throw std::invalid_argument("granger_test: pair length mismatch");
  const auto p = static_cast<std::size_t>(lag_p);
  if (n < 2 * p + 5) throw TooShort("granger_test: fewer than 2p+5 common observations");
  if (is_constant(y)) throw ConstantRegressor("granger_test: caused series constant");
  if (is_constant(x)) throw ConstantRegressor("granger_test: causal series constant");

  const std::size_t rows = n - p;
  if (rows < 2 * p + 2) throw TooShort("granger_test: no residual degrees of freedom");

  const OlsFit unrestricted = fit_var(y, x, lag_p, p);
  const OlsFit restricted = fit_var(y, {}, lag_p, p);

  const int df_den = static_cast<int>(rows) - 2 * lag_p - 1;
  // Nested models: RSS_r >= RSS_u up to rounding, so clamp at zero.
  const double num = std::max(restricted.rss - unrestricted.rss, 0.0) /
                     static_cast<double>(lag_p);
  const double den = unrestricted.rss / static_cast<double>(df_den);
  const double f = den > 0.0 ? num / den
                             : (num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);

  GrangerResult res;
  res.caused = corpus::source_name(pair.y.source);
  res.causal = corpus::source_name(pair.x.source);
  res.lag_p = lag_p;
  res.f_value = f;
  res.df_num = lag_p;
  res.df_den = df_den;
  res.p_value = f_tail_prob(f, static_cast<double>(lag_p), static_cast<double>(df_den));
  res.significance = granger_significance(res.p_value);
  return res;
}

std::vector<GrangerRecord> granger_category(const std::string& category,
                                            const series::EmotionSeries& bulletin,
                                            const series::EmotionSeries& tweets, int max_p) {
  if (max_p < 1) throw std::invalid_argument("granger_category: max_p must be >= 1");
  std::vector<GrangerRecord> records;
  try {
    const auto db = series::difference(bulletin);
    const auto dt = series::difference(tweets);
    if (is_constant(db.values) || is_constant(dt.values))
      throw ConstantSeries("no variability after differencing");
    const auto fwd = series::align(db, dt);

    // Fit the largest lag the common sample supports.
    int eff_max = max_p;
    while (eff_max > 1 &&
           fwd.n < static_cast<std::size_t>(eff_max) +
                       (2 * static_cast<std::size_t>(eff_max) + 1) + 3)
      --eff_max;

    const series::PairedSeries rev{fwd.x, fwd.y, fwd.n};

    for (const series::PairedSeries* pair : {&fwd, &rev}) {
      // Lag order from the caused series' own dynamics. Selecting on
      // the model that includes the x block lets the search shop for
      // the lag with the luckiest x fit and inflates the Wald size.
      const int p = select_lag_aic(pair->y.values, {}, eff_max);
      GrangerRecord rec;
      rec.category = category;
      rec.result = granger_test(*pair, p);
      records.push_back(std::move(rec));
    }
  } catch (const AnalysisError& e) {
    records.clear();  // a category is all-or-nothing
    GrangerRecord rec;
    rec.category = category;
    rec.skipped = true;
    rec.skip_reason = e.what();
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<GrangerRecord> granger_pairwise(
    const std::map<std::string, series::EmotionSeries>& bulletin,
    const std::map<std::string, series::EmotionSeries>& tweets, int max_p) {
  if (max_p < 1) throw std::invalid_argument("granger_pairwise: max_p must be >= 1");
  std::vector<GrangerRecord> records;
  for (const auto& [category, bseries] : bulletin) {
    const auto it = tweets.find(category);
    if (it == tweets.end()) continue;
    auto recs = granger_category(category, bseries, it->second, max_p);
    for (auto& r : recs) records.push_back(std::move(r));
  }
  return records;
}

}  // namespace emolag::econ

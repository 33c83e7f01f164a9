#ifndef EMOLAG_ECON_HPP
#define EMOLAG_ECON_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emolag/linalg.hpp"
#include "emolag/series.hpp"

namespace emolag::econ {

// ---------------------------------------------------------------- ADF

enum class AdfStage { AtLevels, FirstDifferenced };
enum class AdfSignificance { NS, Sig5, Sig1, Unclassified };

// Dickey-Fuller critical values for the no-constant, no-trend
// regression, tabulated near n = 50.
inline constexpr double kAdfCritical5 = -1.951;
inline constexpr double kAdfCritical1 = -2.623;

// Sample sizes for which those critical values are applied; outside
// this range the test refuses to classify instead of extrapolating.
inline constexpr std::size_t kAdfClassifyMinN = 25;
inline constexpr std::size_t kAdfClassifyMaxN = 100;

AdfSignificance classify_tau(double tau);
const char* adf_significance_code(AdfSignificance s);  // "NS","*","**","UC"

struct AdfResult {
  double tau = 0.0;
  int lag_m = 0;
  AdfStage stage = AdfStage::AtLevels;
  AdfSignificance significance = AdfSignificance::NS;
  bool stationary = false;
  std::size_t nobs = 0;  // rows in the test regression
};

struct AdfOptions {
  int max_lag = 4;               // min-AIC search over [0, max_lag]
  std::optional<int> fixed_lag;  // set to pin m instead
};

// Unit-root test regression dY_t = tau * Y_{t-1} + sum a_i dY_{t-i} + u_t
// (no intercept, no trend). The lag order is chosen by min-AIC on a
// common sample, then the reported statistic comes from a refit on the
// full sample available for the chosen lag.
AdfResult adf_test(std::span<const double> values, AdfStage stage,
                   const AdfOptions& opts = {});

// ------------------------------------------------------------- Granger

enum class GrangerSignificance { NS, Sig5, Sig1, Sig01 };

GrangerSignificance granger_significance(double p_value);

struct GrangerResult {
  std::string caused;  // label of Y
  std::string causal;  // label of X
  int lag_p = 0;
  double f_value = 0.0;
  int df_num = 0;
  int df_den = 0;
  double p_value = 1.0;
  GrangerSignificance significance = GrangerSignificance::NS;
};

// Lag order in [1, max_p] minimizing the AIC of the unrestricted model
// y_t ~ 1 + y lags (+ x lags when x is given), all candidates fitted on
// the common sample t > max_p. Ties break toward the smaller lag.
int select_lag_aic(std::span<const double> y, std::span<const double> x, int max_p);

// Wald comparison of the unrestricted regression (intercept, p lags of
// y, p lags of x) against the restriction that all x coefficients are
// zero. Inputs are expected to be first-differenced already.
GrangerResult granger_test(const series::PairedSeries& pair, int lag_p);

struct GrangerRecord {
  std::string category;
  bool skipped = false;
  std::string skip_reason;
  GrangerResult result;  // meaningful only when !skipped
};

// One category of the pairwise procedure: difference both series,
// align, pick the lag, test both directions (bulletin-caused first).
// Returns two records, or a single skip record when the category
// cannot be tested (constant series, too short, no overlap, singular
// design).
std::vector<GrangerRecord> granger_category(const std::string& category,
                                            const series::EmotionSeries& bulletin,
                                            const series::EmotionSeries& tweets, int max_p);

// granger_category over every category the two maps share, sorted by
// category. Serial reference; the pipeline module has the OpenMP
// fan-out with identical output.
std::vector<GrangerRecord> granger_pairwise(
    const std::map<std::string, series::EmotionSeries>& bulletin,
    const std::map<std::string, series::EmotionSeries>& tweets, int max_p);

}  // namespace emolag::econ

#endif  // EMOLAG_ECON_HPP

#include "emolag/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "emolag/errors.hpp"

namespace emolag::econ {

void DesignMatrix::set_column(std::size_t j, std::span<const double> values) {
  if (values.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) data_[j * rows_ + i] = values[i];
}

OlsFit ols(std::span<const double> y, const DesignMatrix& X) {
  const std::size_t n = X.rows();
  const std::size_t k = X.cols();
  if (y.size() != n) throw std::invalid_argument("ols: y length mismatch");
  if (k == 0) throw std::invalid_argument("ols: empty design");
  if (n <= k) throw Underdetermined("ols: n <= k");

  // Householder QR on a working copy; qty carries Q'y along.
  std::vector<double> a(n * k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) a[j * n + i] = X.at(i, j);
  std::vector<double> qty(y.begin(), y.end());

  std::vector<double> rdiag(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < n; ++i) norm = std::hypot(norm, a[j * n + i]);
    if (norm == 0.0) {
      rdiag[j] = 0.0;
      continue;
    }
    if (a[j * n + j] > 0.0) norm = -norm;
    for (std::size_t i = j; i < n; ++i) a[j * n + i] /= norm;
    a[j * n + j] -= 1.0;
    // Apply the reflector to the remaining columns and to qty.
    for (std::size_t c = j + 1; c < k; ++c) {
      double s = 0.0;
      for (std::size_t i = j; i < n; ++i) s += a[j * n + i] * a[c * n + i];
      s /= a[j * n + j];
      for (std::size_t i = j; i < n; ++i) a[c * n + i] += s * a[j * n + i];
    }
    double s = 0.0;
    for (std::size_t i = j; i < n; ++i) s += a[j * n + i] * qty[i];
    s /= a[j * n + j];
    for (std::size_t i = j; i < n; ++i) qty[i] += s * a[j * n + i];
    rdiag[j] = norm;
  }

  double max_diag = 0.0;
  for (std::size_t j = 0; j < k; ++j) max_diag = std::max(max_diag, std::fabs(rdiag[j]));
  const double tol =
      std::numeric_limits<double>::epsilon() * static_cast<double>(n) * max_diag;
  for (std::size_t j = 0; j < k; ++j)
    if (std::fabs(rdiag[j]) <= tol) throw SingularDesign("ols: rank-deficient design");

  // R sits in the upper triangle (off-diagonal) plus rdiag.
  auto r_at = [&](std::size_t i, std::size_t j) -> double {
    return i == j ? rdiag[i] : a[j * n + i];
  };

  OlsFit fit;
  fit.n = n;
  fit.k = k;
  fit.beta.assign(k, 0.0);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = qty[jj];
    for (std::size_t c = jj + 1; c < k; ++c) s -= r_at(jj, c) * fit.beta[c];
    fit.beta[jj] = s / rdiag[jj];
  }

  fit.residuals.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < k; ++j) pred += X.at(i, j) * fit.beta[j];
    fit.residuals[i] = y[i] - pred;
    fit.rss += fit.residuals[i] * fit.residuals[i];
  }

  fit.sigma2 = fit.rss / static_cast<double>(n - k);

  // (X'X)^-1 diagonal from R^-1: diag_j = sum_c (R^-1)_{j,c}^2.
  std::vector<double> rinv(k * k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    rinv[j * k + j] = 1.0 / rdiag[j];
    for (std::size_t i = j; i-- > 0;) {
      double s = 0.0;
      for (std::size_t c = i + 1; c <= j; ++c) s += r_at(i, c) * rinv[j * k + c];
      rinv[j * k + i] = -s / rdiag[i];
    }
  }
  fit.se.assign(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    double d = 0.0;
    for (std::size_t c = j; c < k; ++c) d += rinv[c * k + j] * rinv[c * k + j];
    fit.se[j] = std::sqrt(fit.sigma2 * d);
  }

  fit.aic = static_cast<double>(n) * std::log(fit.rss / static_cast<double>(n)) +
            2.0 * static_cast<double>(k);
  return fit;
}

}  // namespace emolag::econ

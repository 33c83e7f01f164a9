#ifndef EMOLAG_LINALG_HPP
#define EMOLAG_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace emolag::econ {

// Dense column-major regression design matrix. Small k (< ~15 here),
// so no fancy storage.
class DesignMatrix {
 public:
  DesignMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  double at(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  void set_column(std::size_t j, std::span<const double> values);
  std::span<const double> column(std::size_t j) const {
    return {data_.data() + j * rows_, rows_};
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

struct OlsFit {
  std::vector<double> beta;
  std::vector<double> residuals;
  std::vector<double> se;  // coefficient standard errors
  double rss = 0.0;
  double sigma2 = 0.0;  // rss / (n - k)
  std::size_t n = 0;
  std::size_t k = 0;
  double aic = 0.0;  // n * ln(rss / n) + 2k
};

// Least squares via Householder QR. Throws Underdetermined when
// n <= k and SingularDesign when a diagonal of R collapses
// (collinear columns).
OlsFit ols(std::span<const double> y, const DesignMatrix& X);

}  // namespace emolag::econ

#endif  // EMOLAG_LINALG_HPP

#ifndef RPAREA_DATASET_H_
#define RPAREA_DATASET_H_

#include <cstddef>
#include <span>
#include <vector>

#include "rparea/matrix.h"

namespace rparea {

// Per-row tolerance on sum_k w[i][k] == 1.
inline constexpr double kShareSumTolerance = 1e-12;
// Rows whose sum misses 1 by at most this much are renormalised instead of
// rejected (CSV round trips lose digits).
inline constexpr double kShareRenormaliseTolerance = 1e-9;

// T observations of K goods, stored as income-normalised prices r and
// budget shares w. Quantities are derived on demand (x = w / r).
//
// Invariants: T >= 2, K >= 2, r > 0, w >= 0, every share row sums to one.
class Dataset {
 public:
  // Validates and takes ownership. Throws DomainError on any violated
  // invariant; share rows off by at most kShareRenormaliseTolerance are
  // renormalised and listed in renormalised_rows().
  static Dataset from_shares(Matrix prices, Matrix shares);

  // Builds shares as w = r * x. Requires r . x == 1 per row within the
  // renormalisation tolerance.
  static Dataset from_quantities(const Matrix& prices, const Matrix& quantities);

  std::size_t observations() const { return prices_.rows(); }
  std::size_t goods() const { return prices_.cols(); }

  const Matrix& prices() const { return prices_; }
  const Matrix& shares() const { return shares_; }
  Matrix quantities() const;

  const std::vector<std::size_t>& renormalised_rows() const {
    return renormalised_rows_;
  }

 private:
  Dataset(Matrix prices, Matrix shares) : prices_(std::move(prices)), shares_(std::move(shares)) {}

  Matrix prices_;
  Matrix shares_;
  std::vector<std::size_t> renormalised_rows_;
};

// rho[i][j][k] = r[i][k] / r[j][k], together with the Carli matrix of row
// means over k.
class PriceRatioTensor {
 public:
  PriceRatioTensor() = default;
  explicit PriceRatioTensor(const Matrix& prices);

  std::size_t observations() const { return t_; }
  std::size_t goods() const { return k_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return ratio_[(i * t_ + j) * k_ + k];
  }
  // The K-vector of ratios along edge i -> j.
  std::span<const double> edge(std::size_t i, std::size_t j) const {
    return {ratio_.data() + (i * t_ + j) * k_, k_};
  }
  const Matrix& carli() const { return carli_; }

 private:
  std::size_t t_ = 0;
  std::size_t k_ = 0;
  std::vector<double> ratio_;
  Matrix carli_;
};

// p / m componentwise. Throws DomainError on non-positive inputs.
std::vector<double> normalize_prices(std::span<const double> price, double income);

PriceRatioTensor price_ratios(const Dataset& dataset);

// Arithmetic mean of a price-ratio vector. Throws on empty input.
double carli_index(std::span<const double> ratios);

// x[k] = w[k] / r[k].
std::vector<double> shares_to_quantities(std::span<const double> shares,
                                         std::span<const double> prices);

// e[i][j] = r_i . x_j = rho_ij . w_j; unit diagonal.
Matrix expenditure_matrix(const Dataset& dataset);

// Unchecked variant for hot paths: out[i][j] = r_i . x_j. `out` is resized
// as needed.
void expenditure_matrix(const Matrix& prices, const Matrix& quantities, Matrix& out);

// Componentwise 1 / r.
Matrix reciprocal(const Matrix& prices);

}  // namespace rparea

#endif  // RPAREA_DATASET_H_

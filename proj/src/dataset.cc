#include "rparea/dataset.h"

#include <cmath>
#include <numeric>
#include <string>

#include "rparea/errors.h"

namespace rparea {
namespace {

std::string cell(std::size_t i, std::size_t k) {
  return "[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]";
}

}  // namespace

Dataset Dataset::from_shares(Matrix prices, Matrix shares) {
  if (prices.rows() != shares.rows() || prices.cols() != shares.cols()) {
    throw DomainError("prices and shares must have the same shape");
  }
  if (prices.rows() < 2) throw DomainError("dataset needs T >= 2 observations");
  if (prices.cols() < 2) throw DomainError("dataset needs K >= 2 goods");

  Dataset d(std::move(prices), std::move(shares));
  const std::size_t t = d.observations();
  const std::size_t k = d.goods();
  for (std::size_t i = 0; i < t; ++i) {
    double sum = 0.0;
    for (std::size_t g = 0; g < k; ++g) {
      const double r = d.prices_(i, g);
      const double w = d.shares_(i, g);
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("price r" + cell(i, g) + " must be positive and finite");
      }
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw DomainError("share w" + cell(i, g) + " must be non-negative");
      }
      sum += w;
    }
    const double gap = std::abs(sum - 1.0);
    if (gap <= kShareSumTolerance) continue;
    if (gap > kShareRenormaliseTolerance) {
      throw DomainError("shares of observation " + std::to_string(i + 1) +
                        " sum to " + std::to_string(sum) + ", not 1");
    }
    for (double& w : d.shares_.row(i)) w /= sum;
    d.renormalised_rows_.push_back(i);
  }
  return d;
}

Dataset Dataset::from_quantities(const Matrix& prices, const Matrix& quantities) {
  if (prices.rows() != quantities.rows() || prices.cols() != quantities.cols()) {
    throw DomainError("prices and quantities must have the same shape");
  }
  Matrix shares(prices.rows(), prices.cols());
  for (std::size_t i = 0; i < prices.rows(); ++i) {
    for (std::size_t g = 0; g < prices.cols(); ++g) {
      shares(i, g) = prices(i, g) * quantities(i, g);
    }
  }
  return from_shares(prices, std::move(shares));
}

Matrix Dataset::quantities() const {
  Matrix x(observations(), goods());
  for (std::size_t i = 0; i < observations(); ++i) {
    for (std::size_t g = 0; g < goods(); ++g) x(i, g) = shares_(i, g) / prices_(i, g);
  }
  return x;
}

PriceRatioTensor::PriceRatioTensor(const Matrix& prices)
    : t_(prices.rows()),
      k_(prices.cols()),
      ratio_(t_ * t_ * k_),
      carli_(t_, t_) {
  for (std::size_t i = 0; i < t_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) {
      double* out = ratio_.data() + (i * t_ + j) * k_;
      double sum = 0.0;
      for (std::size_t k = 0; k < k_; ++k) {
        out[k] = i == j ? 1.0 : prices(i, k) / prices(j, k);
        sum += out[k];
      }
      carli_(i, j) = i == j ? 1.0 : sum / static_cast<double>(k_);
    }
  }
}

std::vector<double> normalize_prices(std::span<const double> price, double income) {
  if (!(income > 0.0)) throw DomainError("income must be positive");
  std::vector<double> r(price.size());
  for (std::size_t k = 0; k < price.size(); ++k) {
    if (!(price[k] > 0.0)) throw DomainError("prices must be positive");
    r[k] = price[k] / income;
  }
  return r;
}

PriceRatioTensor price_ratios(const Dataset& dataset) {
  return PriceRatioTensor(dataset.prices());
}

double carli_index(std::span<const double> ratios) {
  if (ratios.empty()) throw DomainError("Carli index of an empty vector");
  return std::accumulate(ratios.begin(), ratios.end(), 0.0) /
         static_cast<double>(ratios.size());
}

std::vector<double> shares_to_quantities(std::span<const double> shares,
                                         std::span<const double> prices) {
  if (shares.size() != prices.size()) {
    throw DomainError("shares and prices differ in length");
  }
  std::vector<double> x(shares.size());
  for (std::size_t k = 0; k < shares.size(); ++k) {
    if (!(prices[k] > 0.0)) throw DomainError("prices must be positive");
    x[k] = shares[k] / prices[k];
  }
  return x;
}

Matrix expenditure_matrix(const Dataset& dataset) {
  const PriceRatioTensor rho = price_ratios(dataset);
  const std::size_t t = dataset.observations();
  Matrix e(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) {
        e(i, j) = 1.0;
        continue;
      }
      const auto edge = rho.edge(i, j);
      const auto w = dataset.shares().row(j);
      double sum = 0.0;
      for (std::size_t k = 0; k < edge.size(); ++k) sum += edge[k] * w[k];
      e(i, j) = sum;
    }
  }
  return e;
}

void expenditure_matrix(const Matrix& prices, const Matrix& quantities, Matrix& out) {
  const std::size_t t = prices.rows();
  const std::size_t k = prices.cols();
  if (out.rows() != t || out.cols() != t) out = Matrix(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    const double* r = prices.row(i).data();
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) {
        out(i, j) = 1.0;
        continue;
      }
      const double* x = quantities.row(j).data();
      double sum = 0.0;
      for (std::size_t g = 0; g < k; ++g) sum += r[g] * x[g];
      out(i, j) = sum;
    }
  }
}

Matrix reciprocal(const Matrix& prices) {
  Matrix inv(prices.rows(), prices.cols());
  for (std::size_t i = 0; i < prices.rows(); ++i) {
    for (std::size_t g = 0; g < prices.cols(); ++g) inv(i, g) = 1.0 / prices(i, g);
  }
  return inv;
}

}  // namespace rparea

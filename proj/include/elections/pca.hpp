#ifndef ELECTIONS_PCA_HPP
#define ELECTIONS_PCA_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "elections/dataset.hpp"
#include "elections/error.hpp"
#include "elections/jacobi.hpp"
#include "elections/matrix.hpp"
#include "elections/states.hpp"

namespace elections {

/// Shares minus their per-state means. Columns sum to zero, so the rank is at
/// most n − 1.
struct DeviationMatrix {
  Matrix devs;
  std::vector<double> mean;

  std::size_t n() const noexcept { return devs.rows(); }
};

inline DeviationMatrix center(const Matrix& shares) {
  DeviationMatrix out{shares, std::vector<double>(shares.cols(), 0.0)};
  const auto n = static_cast<double>(shares.rows());
  for (std::size_t s = 0; s < shares.cols(); ++s) {
    double sum = 0.0;
    for (std::size_t t = 0; t < shares.rows(); ++t) sum += shares(t, s);
    out.mean[s] = sum / n;
    for (std::size_t t = 0; t < shares.rows(); ++t) out.devs(t, s) = shares(t, s) - out.mean[s];
  }
  return out;
}

inline DeviationMatrix center(const ElectionDataset& dataset) { return center(dataset.shares); }

/// Sample covariance devsᵀ·devs / (n − 1).
inline Matrix covariance(const DeviationMatrix& d) {
  if (d.n() < 2) throw Error(ErrorKind::DegenerateSample, "covariance needs at least two observations");
  Matrix c = gram(d.devs);
  const double scale = 1.0 / static_cast<double>(d.n() - 1);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) *= scale;
  }
  return c;
}

struct PcaModel {
  std::vector<double> mean;
  std::vector<double> eigenvalues;                // descending, all > 0
  std::vector<std::vector<double>> eigenvectors;  // unit norm, mutually orthogonal
  std::size_t n = 0;                              // observations the model was fit on

  std::size_t components() const noexcept { return eigenvalues.size(); }
  std::size_t dimension() const noexcept { return mean.size(); }
};

struct FitOptions {
  // Eigenvalues below relative_cutoff · λ_max count as zero.
  double relative_cutoff = 1e-10;
  // When set, fewer retained components than this raises RankDeficient.
  std::optional<std::size_t> expected_rank;
};

// Orientation: component sum ≥ 0, or first nonzero entry positive when the
// sum vanishes.
inline void orient(std::vector<double>& v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  bool flip = sum < 0.0;
  if (std::abs(sum) <= 1e-12) {
    const auto it = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-12; });
    flip = it != v.end() && *it < 0.0;
  }
  if (flip) {
    for (double& x : v) x = -x;
  }
}

inline PcaModel model_from_covariance(std::vector<double> mean, const Matrix& cov, std::size_t n,
                                      const FitOptions& options = {}) {
  if (cov.rows() != mean.size() || cov.cols() != mean.size()) {
    throw Error(ErrorKind::DimensionMismatch, "covariance and mean dimensions differ");
  }
  const SymmetricEigen eig = jacobi_eigen(cov);

  std::vector<std::size_t> order(eig.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eig.values[a] > eig.values[b]; });

  PcaModel model;
  model.mean = std::move(mean);
  model.n = n;
  const double lambda_max = order.empty() ? 0.0 : eig.values[order.front()];
  const double cutoff = lambda_max * options.relative_cutoff;
  for (std::size_t idx : order) {
    const double lambda = eig.values[idx];
    if (!(lambda > cutoff) || lambda <= 0.0) break;
    model.eigenvalues.push_back(lambda);
    auto v = eig.vectors.column(idx);
    orient(v);
    model.eigenvectors.push_back(std::move(v));
  }
  if (options.expected_rank && model.components() < *options.expected_rank) {
    throw Error(ErrorKind::RankDeficient, "retained " + std::to_string(model.components()) +
                                              " components, expected " + std::to_string(*options.expected_rank));
  }
  return model;
}

inline PcaModel fit_pca(const Matrix& shares, const FitOptions& options = {}) {
  DeviationMatrix d = center(shares);
  const Matrix cov = covariance(d);
  return model_from_covariance(std::move(d.mean), cov, d.n(), options);
}

inline PcaModel fit_pca(const ElectionDataset& dataset, const FitOptions& options = {}) {
  return fit_pca(dataset.shares, options);
}

/// Share of total variance carried by the first k components.
inline double variance_explained(const PcaModel& model, std::size_t k) {
  if (k < 1 || k > model.components()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "k=" + std::to_string(k) + " outside 1.." + std::to_string(model.components()));
  }
  const double head = std::accumulate(model.eigenvalues.begin(), model.eigenvalues.begin() + k, 0.0);
  const double total = std::accumulate(model.eigenvalues.begin(), model.eigenvalues.end(), 0.0);
  return head / total;
}

/// Σⱼ λⱼ Eⱼ Eⱼᵀ.
inline Matrix reconstruct_covariance(const PcaModel& model) {
  const std::size_t m = model.dimension();
  Matrix c(m, m);
  for (std::size_t j = 0; j < model.components(); ++j) {
    const auto& e = model.eigenvectors[j];
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) c(a, b) += model.eigenvalues[j] * e[a] * e[b];
    }
  }
  return c;
}

struct Loading {
  StateId state;
  double coefficient;
};

/// Coefficients of component j (1-based) paired with states, ascending.
inline std::vector<Loading> loadings_report(const PcaModel& model, std::size_t j) {
  if (j < 1 || j > model.components()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "component " + std::to_string(j) + " outside 1.." + std::to_string(model.components()));
  }
  const auto& e = model.eigenvectors[j - 1];
  if (e.size() != kStateCount) throw Error(ErrorKind::DimensionMismatch, "loadings need a 51-state model");
  std::vector<Loading> out;
  out.reserve(kStateCount);
  for (std::size_t s = 0; s < kStateCount; ++s) out.push_back({StateId{s}, e[s]});
  std::stable_sort(out.begin(), out.end(),
                   [](const Loading& a, const Loading& b) { return a.coefficient < b.coefficient; });
  return out;
}

}  // namespace elections

#endif

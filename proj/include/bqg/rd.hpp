#pragma once

// Rapid-decay constants on shells of a dual length, estimated numerically:
// a lower bound from alternating maximization of ||F(a)|| / ||a||_0 over
// elements supported on the shell, and the Cauchy-Schwarz upper bound.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "bqg/length.hpp"
#include "bqg/quantum_algebra.hpp"

namespace bqg {

struct RdEstimate {
  std::vector<int> support;  // classes in the index set
  double lower = 0;          // best ratio found
  double upper = 0;          // sqrt(sum_x d_x^2)
  std::string argmax;        // which start produced the lower bound
  bool empty = true;
};

struct RdOptions {
  std::uint64_t seed = kDefaultSeed;
  int restarts = 6;
  int iterations = 40;
};

/// Estimates sup ||F(a)|| / ||a||_0 over a supported on `support`.
inline RdEstimate rd_ratio(const CrossedProductAlgebra& alg, const std::vector<Corep>& w, std::vector<int> support,
                           const RdOptions& opt = {}) {
  RdEstimate est;
  est.support = support;
  if (support.empty()) {
    est.argmax = "empty";
    return est;
  }
  est.empty = false;
  double sumsq = 0;
  for (int x : support) sumsq += static_cast<double>(w.at(x).dim) * w.at(x).dim;
  est.upper = std::sqrt(sumsq);

  // pi(W^x_ij) for every class in the support.
  std::vector<std::vector<Mat>> pw;
  for (int x : support) {
    std::vector<Mat> ms;
    for (const auto& v : w[x].entries) ms.push_back(alg.regular(v));
    pw.push_back(std::move(ms));
  }
  auto image = [&](const DualElement& a) {
    Mat f = Mat::Zero(alg.dim(), alg.dim());
    for (std::size_t s = 0; s < support.size(); ++s) {
      const int x = support[s], d = w[x].dim;
      const Mat& m = a.at(x);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (m(j, i) != 0.0) f += static_cast<double>(d) * m(j, i) * pw[s][i * d + j];
    }
    return f;
  };
  auto climb = [&](DualElement a, const std::string& label) {
    for (int it = 0; it < opt.iterations; ++it) {
      Mat f = image(a);
      Eigen::JacobiSVD<Mat> svd(f, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double ratio = svd.singularValues()(0) / sobolev_norm(w, a);
      if (ratio > est.lower) {
        est.lower = ratio;
        est.argmax = label;
      }
      const Vec eta = svd.matrixU().col(0), xi = svd.matrixV().col(0);
      DualElement next;
      double norm2 = 0;
      for (std::size_t s = 0; s < support.size(); ++s) {
        const int x = support[s], d = w[x].dim;
        Mat b(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) b(j, i) = std::conj(eta.dot(pw[s][i * d + j] * xi));
        norm2 += d * b.squaredNorm();
        next[x] = b;
      }
      if (norm2 < 1e-28) break;
      for (auto& [x, b] : next) b /= std::sqrt(norm2);
      a = std::move(next);
    }
  };

  for (int x : support) {
    DualElement a;
    for (int y : support) a[y] = y == x ? Mat(Mat::Identity(w[y].dim, w[y].dim)) : Mat(Mat::Zero(w[y].dim, w[y].dim));
    climb(std::move(a), "p_" + std::to_string(x));
  }
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  for (int r = 0; r < opt.restarts; ++r) {
    DualElement a;
    for (int y : support) {
      Mat m(w[y].dim, w[y].dim);
      for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = cplx(gauss(rng), gauss(rng));
      a[y] = m;
    }
    climb(std::move(a), "restart " + std::to_string(r));
  }
  if (est.lower > est.upper * (1 + 1e-9)) throw NumericalError("rapid-decay lower bound exceeds the upper bound");
  return est;
}

/// Classes with k <= l < k + 1.
inline std::vector<int> shell_support(const Lengths& l, long long k) {
  std::vector<int> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (shell_index(l[x]) == k) out.push_back(static_cast<int>(x));
  return out;
}

/// Classes with l < k + 1.
inline std::vector<int> cumulative_support(const Lengths& l, long long k) {
  std::vector<int> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (shell_index(l[x]) <= k) out.push_back(static_cast<int>(x));
  return out;
}

inline long long max_shell(const Lengths& l) {
  long long m = 0;
  for (const auto& v : l) m = std::max(m, shell_index(v));
  return m;
}

}  // namespace bqg

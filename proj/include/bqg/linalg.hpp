#pragma once

// Dense complex linear algebra helpers on top of Eigen.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bqg/error.hpp"

namespace bqg {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kUnitaryTol = 1e-9;
inline constexpr double kRoundTol = 1e-6;
inline constexpr double kEigenGap = 1e-7;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double unitary_residual(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

/// Rounds x to the nearest integer, throwing when the residual exceeds tol.
inline long long round_checked(double x, double tol, const char* what) {
  long long n = std::llround(x);
  if (std::abs(x - static_cast<double>(n)) > tol)
    throw NumericalError(std::string(what) + ": rounding residual " + std::to_string(std::abs(x - n)));
  return n;
}

inline long long round_checked(cplx z, double tol, const char* what) {
  if (std::abs(z.imag()) > tol)
    throw NumericalError(std::string(what) + ": imaginary residual " + std::to_string(std::abs(z.imag())));
  return round_checked(z.real(), tol, what);
}

inline Mat random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Mat h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = cplx(nd(rng), nd(rng));
  return (h + h.adjoint()) / 2.0;
}

/// Eigenspaces of a Hermitian matrix, grouped by eigenvalue clusters of width
/// `gap` (relative to the spectral scale). Each block is an isometry whose
/// columns span one cluster; blocks are ordered by increasing eigenvalue.
inline std::vector<Mat> eigenspaces(const Mat& t, double gap = kEigenGap) {
  Eigen::SelfAdjointEigenSolver<Mat> es((t + t.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Mat> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev(i) - ev(i - 1) > gap * scale) {
      out.push_back(es.eigenvectors().middleCols(start, i - start));
      start = i;
    }
  }
  return out;
}

/// Orthonormal basis (columns) of the range of a Hermitian projection.
inline Mat projection_range(const Mat& p) {
  Eigen::SelfAdjointEigenSolver<Mat> es((p + p.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double l = es.eigenvalues()(i);
    if (l > 0.5) keep.push_back(i);
    if (std::abs(l) > kRoundTol && std::abs(l - 1.0) > kRoundTol)
      throw NumericalError("averaged operator is not a projection (eigenvalue " + std::to_string(l) + ")");
  }
  Mat out(p.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return out;
}

/// Hilbert-Schmidt orthonormal basis of {X : b_g X = X a_g for all g}, where
/// a and b are (projective, same cocycle) unitary families indexed alike and
/// a is irreducible. Uses the averaging map A -> (1/N) sum b_g A a_g^*.
inline std::vector<Mat> intertwiners_from_irreducible(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  const auto n = static_cast<double>(a.size());
  const Eigen::Index da = a.front().rows(), db = b.front().rows();
  Mat e = Mat::Zero(db, db);
  for (std::size_t g = 0; g < a.size(); ++g) e += std::conj(a[g](0, 0)) * b[g];
  e *= static_cast<double>(da) / n;
  Mat w = projection_range(e);
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < w.cols(); ++k) {
    Mat x = Mat::Zero(db, da);
    for (std::size_t g = 0; g < a.size(); ++g) x += b[g] * w.col(k) * a[g].col(0).adjoint();
    for (const auto& y : out) x -= (y.adjoint() * x).trace() * y;
    double nrm = x.norm();
    if (nrm < kRoundTol) throw NumericalError("degenerate intertwiner during averaging");
    out.push_back(x / nrm);
  }
  return out;
}

/// Same space without an irreducibility assumption, via the projection
/// (1/N) sum conj(a_g) (x) b_g on vec(X). Intended for small dimensions.
inline std::vector<Mat> intertwiner_basis(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  const Eigen::Index da = a.front().rows(), db = b.front().rows();
  Mat p = Mat::Zero(da * db, da * db);
  for (std::size_t g = 0; g < a.size(); ++g) p += kron(a[g].conjugate(), b[g]);
  p /= static_cast<double>(a.size());
  Mat r = projection_range(p);
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < r.cols(); ++k) out.push_back(Eigen::Map<const Mat>(r.col(k).data(), db, da));
  return out;
}

}  // namespace bqg

#pragma once

// The crossed product Gamma |x C(K) of a finite matched pair as a concrete
// Hopf *-algebra: basis e(gamma, k) = u_gamma delta_k, left-regular matrices,
// Haar trace, the unitary corepresentations of the classified irreducibles,
// the Fourier transform and the Sobolev-0-norm, and automorphisms with their
// pushforward to the dual.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/SVD>

#include "bqg/bicrossed.hpp"
#include "bqg/error.hpp"
#include "bqg/linalg.hpp"

namespace bqg {

class CrossedProductAlgebra {
 public:
  /// Sparse element of A (x) A: coefficients of e_i (x) e_j.
  using Tensor = std::map<std::pair<int, int>, cplx>;

  explicit CrossedProductAlgebra(const MatchedPair<FiniteGamma>& mp)
      : ng_(static_cast<int>(mp.gamma.order())), nk_(static_cast<int>(mp.k->order())), gamma_(mp.gamma.group()), k_(mp.k) {
    alpha_.assign(ng_, std::vector<int>(nk_));
    beta_.assign(ng_, std::vector<int>(nk_));
    for (int g = 0; g < ng_; ++g)
      for (int k = 0; k < nk_; ++k) {
        alpha_[g][k] = mp.alpha(g, k);
        beta_[g][k] = mp.beta(g, k);
      }
  }

  int dim() const { return ng_ * nk_; }
  int gamma_order() const { return ng_; }
  int k_order() const { return nk_; }
  int index(int gamma, int k) const { return gamma * nk_ + k; }
  const FiniteGroup& gamma() const { return *gamma_; }
  const FiniteGroup& k() const { return *k_; }
  int alpha(int gamma, int k) const { return alpha_[gamma][k]; }
  int beta(int gamma, int k) const { return beta_[gamma][k]; }

  Vec zero() const { return Vec::Zero(dim()); }

  Vec basis(int gamma, int k) const {
    Vec v = zero();
    v(index(gamma, k)) = 1.0;
    return v;
  }

  Vec u(int gamma) const {
    Vec v = zero();
    for (int k = 0; k < nk_; ++k) v(index(gamma, k)) = 1.0;
    return v;
  }

  /// The function f on K as u_e f.
  Vec function(const std::vector<cplx>& f) const {
    Vec v = zero();
    for (int k = 0; k < nk_; ++k) v(index(gamma_->identity(), k)) = f[k];
    return v;
  }

  Vec one() const { return u(gamma_->identity()); }

  /// e(g,k) e(m,l) = [k = alpha_m(l)] e(gm, l).
  Vec mul(const Vec& a, const Vec& b) const {
    Vec out = zero();
    for (int g = 0; g < ng_; ++g)
      for (int m = 0; m < ng_; ++m)
        for (int l = 0; l < nk_; ++l) {
          cplx x = a(index(g, alpha_[m][l]));
          if (x == 0.0) continue;
          out(index(gamma_->mul(g, m), l)) += x * b(index(m, l));
        }
    return out;
  }

  /// e(g,k)^* = e(g^-1, alpha_g(k)).
  Vec star(const Vec& a) const {
    Vec out = zero();
    for (int g = 0; g < ng_; ++g)
      for (int k = 0; k < nk_; ++k) out(index(gamma_->inv(g), alpha_[g][k])) += std::conj(a(index(g, k)));
    return out;
  }

  /// h(e(g,k)) = [g = e] / |K|.
  cplx haar(const Vec& a) const {
    cplx s = 0;
    for (int k = 0; k < nk_; ++k) s += a(index(gamma_->identity(), k));
    return s / static_cast<double>(nk_);
  }

  /// pi(e(g,k)) (delta_m (x) delta_l) = [alpha_m(l) = k] delta_{gm} (x) delta_l.
  Mat regular(const Vec& a) const {
    Mat out = Mat::Zero(dim(), dim());
    for (int g = 0; g < ng_; ++g)
      for (int m = 0; m < ng_; ++m)
        for (int l = 0; l < nk_; ++l) out(index(gamma_->mul(g, m), l), index(m, l)) += a(index(g, alpha_[m][l]));
    return out;
  }

  /// Delta e(g,k) = sum_{ab = k} e(g, a) (x) e(beta_a(g), b).
  Tensor coproduct(const Vec& a) const {
    Tensor t;
    for (int g = 0; g < ng_; ++g)
      for (int k = 0; k < nk_; ++k) {
        cplx c = a(index(g, k));
        if (c == 0.0) continue;
        for (int x = 0; x < nk_; ++x) {
          int y = k_->mul(k_->inv(x), k);
          t[{index(g, x), index(beta_[g][x], y)}] += c;
        }
      }
    return t;
  }

  Tensor tensor_mul(const Tensor& x, const Tensor& y) const {
    Tensor out;
    for (const auto& [ij, c] : x)
      for (const auto& [kl, d] : y) {
        int left = basis_product(ij.first, kl.first), right = basis_product(ij.second, kl.second);
        if (left >= 0 && right >= 0) out[{left, right}] += c * d;
      }
    return out;
  }

  static Tensor outer(const Vec& a, const Vec& b) {
    Tensor t;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) == 0.0) continue;
      for (Eigen::Index j = 0; j < b.size(); ++j)
        if (b(j) != 0.0) t[{static_cast<int>(i), static_cast<int>(j)}] += a(i) * b(j);
    }
    return t;
  }

  static double distance(const Tensor& a, const Tensor& b) {
    std::map<std::pair<int, int>, cplx> d = a;
    for (const auto& [ij, c] : b) d[ij] -= c;
    double s = 0;
    for (const auto& [ij, c] : d) s += std::norm(c);
    return std::sqrt(s);
  }

  struct Audit {
    double unitary = 0, function_hom = 0, regular_hom = 0, coproduct_generators = 0, coproduct_hom = 0, haar = 0;
    double max() const { return std::max({unitary, function_hom, regular_hom, coproduct_generators, coproduct_hom, haar}); }
  };

  /// Residuals of the structure identities on generators and basis elements.
  Audit audit() const {
    Audit r;
    const int n = dim();
    for (int g = 0; g < ng_; ++g) r.unitary = std::max(r.unitary, unitary_residual(regular(u(g))));
    for (int k = 0; k < nk_; ++k) {
      Vec dk = function(indicator(k));
      r.function_hom = std::max(r.function_hom, (regular(star(dk)) - regular(dk).adjoint()).norm());
      for (int l = 0; l < nk_; ++l) {
        Vec dl = function(indicator(l));
        r.function_hom = std::max(r.function_hom, (regular(mul(dk, dl)) - regular(dk) * regular(dl)).norm());
      }
    }
    std::vector<Mat> pis;
    for (int i = 0; i < n; ++i) pis.push_back(regular(unit_vec(i)));
    for (int i = 0; i < n; ++i) {
      r.regular_hom = std::max(r.regular_hom, (regular(star(unit_vec(i))) - pis[i].adjoint()).norm());
      Tensor di = coproduct(unit_vec(i));
      for (int j = 0; j < n; ++j) {
        r.regular_hom = std::max(r.regular_hom, (regular(mul(unit_vec(i), unit_vec(j))) - pis[i] * pis[j]).norm());
        r.coproduct_hom = std::max(r.coproduct_hom, distance(coproduct(mul(unit_vec(i), unit_vec(j))),
                                                             tensor_mul(di, coproduct(unit_vec(j)))));
      }
      cplx h = haar(unit_vec(i));
      Vec left = zero(), right = zero();
      for (const auto& [ij, c] : di) {
        left(ij.first) += c * haar(unit_vec(ij.second));
        right(ij.second) += c * haar(unit_vec(ij.first));
      }
      r.haar = std::max({r.haar, (left - h * one()).norm(), (right - h * one()).norm()});
    }
    for (int g = 0; g < ng_; ++g) {
      Tensor want;
      for (int m = 0; m < ng_; ++m) {
        std::vector<cplx> chi(nk_, 0.0);
        for (int k = 0; k < nk_; ++k)
          if (beta_[g][k] == m) chi[k] = 1.0;
        for (const auto& [ij, c] : outer(mul(u(g), function(chi)), u(m))) want[ij] += c;
      }
      r.coproduct_generators = std::max(r.coproduct_generators, distance(coproduct(u(g)), want));
    }
    return r;
  }

 private:
  Vec unit_vec(int i) const {
    Vec v = zero();
    v(i) = 1.0;
    return v;
  }

  std::vector<cplx> indicator(int k) const {
    std::vector<cplx> f(nk_, 0.0);
    f[k] = 1.0;
    return f;
  }

  int basis_product(int i, int j) const {
    int g = i / nk_, k = i % nk_, m = j / nk_, l = j % nk_;
    return alpha_[m][l] == k ? index(gamma_->mul(g, m), l) : -1;
  }

  int ng_, nk_;
  GroupPtr gamma_, k_;
  std::vector<std::vector<int>> alpha_, beta_;
};

/// Unitary corepresentation with entries in the crossed product.
struct Corep {
  int dim = 0;
  std::vector<Vec> entries;  // entries[i * dim + j]

  const Vec& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

/// W_{(r,i),(s,j)} = sum_k u_{r,s}(k)_{ij} e(r, k) for the class x.
inline Corep bicrossed_corep(const CrossedProductAlgebra& alg, const BicrossedTheory<FiniteGamma>& t, int x) {
  const auto& o = t.orbit_of(x);
  const int d = t.isotype_dim(x), n = static_cast<int>(o.size());
  Corep w{n * d, std::vector<Vec>(static_cast<std::size_t>(n * d) * n * d, alg.zero())};
  for (int k = 0; k < alg.k_order(); ++k)
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        Mat b = t.o_block(x, r, s, k);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (b(i, j) != 0.0) w.entries[static_cast<std::size_t>(r * d + i) * w.dim + (s * d + j)](alg.index(o.elements[r], k)) += b(i, j);
      }
  return w;
}

inline std::vector<Corep> bicrossed_coreps(const CrossedProductAlgebra& alg, const BicrossedTheory<FiniteGamma>& t) {
  std::vector<Corep> out;
  for (std::size_t x = 0; x < t.size(); ++x) out.push_back(bicrossed_corep(alg, t, static_cast<int>(x)));
  return out;
}

/// Largest deviation from Delta(W_ij) = sum_k W_ik (x) W_kj and from unitarity.
inline double corep_residual(const CrossedProductAlgebra& alg, const Corep& w) {
  double r = 0;
  for (int i = 0; i < w.dim; ++i)
    for (int j = 0; j < w.dim; ++j) {
      CrossedProductAlgebra::Tensor want;
      Vec left = alg.zero(), right = alg.zero();
      for (int k = 0; k < w.dim; ++k) {
        for (const auto& [ij, c] : CrossedProductAlgebra::outer(w(i, k), w(k, j))) want[ij] += c;
        left += alg.mul(alg.star(w(k, i)), w(k, j));
        right += alg.mul(w(i, k), alg.star(w(j, k)));
      }
      r = std::max(r, CrossedProductAlgebra::distance(alg.coproduct(w(i, j)), want));
      Vec id = i == j ? alg.one() : alg.zero();
      r = std::max({r, (left - id).norm(), (right - id).norm()});
    }
  return r;
}

inline Vec corep_character(const CrossedProductAlgebra& alg, const Corep& w) {
  Vec chi = alg.zero();
  for (int i = 0; i < w.dim; ++i) chi += w(i, i);
  return chi;
}

/// dim Mor(W3, W1 (x) W2) = h(chi3^* chi1 chi2), the Haar-trace oracle.
inline long long haar_fusion(const CrossedProductAlgebra& alg, const Vec& chi1, const Vec& chi2, const Vec& chi3) {
  return round_checked(alg.haar(alg.mul(alg.star(chi3), alg.mul(chi1, chi2))), kRoundTol, "Haar fusion multiplicity");
}

// ---------------------------------------------------------------------------
// Fourier transform and Sobolev-0-norm on c_c of the dual

/// Finitely supported element of the dual: one square block per class.
using DualElement = std::map<int, Mat>;

inline void check_blocks(const std::vector<Corep>& w, const DualElement& a) {
  for (const auto& [x, m] : a) {
    if (x < 0 || static_cast<std::size_t>(x) >= w.size()) throw InvalidArgument("block outside the classified index set");
    if (m.rows() != w[x].dim || m.cols() != w[x].dim) throw InvalidArgument("block has the wrong size");
  }
}

/// F(a) = sum_x d_x sum_ij (a_x)_ji W^x_ij.
inline Vec fourier(const CrossedProductAlgebra& alg, const std::vector<Corep>& w, const DualElement& a) {
  check_blocks(w, a);
  Vec out = alg.zero();
  for (const auto& [x, m] : a) {
    const double d = w[x].dim;
    for (int i = 0; i < w[x].dim; ++i)
      for (int j = 0; j < w[x].dim; ++j)
        if (m(j, i) != 0.0) out += d * m(j, i) * w[x](i, j);
  }
  return out;
}

inline double operator_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

inline double fourier_norm(const CrossedProductAlgebra& alg, const std::vector<Corep>& w, const DualElement& a) {
  return operator_norm(alg.regular(fourier(alg, w, a)));
}

/// ||a||_0^2 = sum_x d_x Tr(a_x^* a_x).
inline double sobolev_norm(const std::vector<Corep>& w, const DualElement& a) {
  check_blocks(w, a);
  double s = 0;
  for (const auto& [x, m] : a) s += w[x].dim * m.squaredNorm();
  return std::sqrt(s);
}

/// The projection p_x.
inline DualElement dual_projection(const std::vector<Corep>& w, int x) {
  return {{x, Mat::Identity(w.at(x).dim, w.at(x).dim)}};
}

// ---------------------------------------------------------------------------
// Automorphisms

/// theta(e(g, k)) = e(phi_Gamma(g), phi_K(k)) for a pair compatible with alpha and beta.
struct PairAutomorphism {
  AutTable on_gamma;
  AutTable on_k;

  Vec apply(const CrossedProductAlgebra& alg, const Vec& a) const {
    Vec out = alg.zero();
    for (int g = 0; g < alg.gamma_order(); ++g)
      for (int k = 0; k < alg.k_order(); ++k) out(alg.index(on_gamma[g], on_k[k])) += a(alg.index(g, k));
    return out;
  }

  Corep apply(const CrossedProductAlgebra& alg, const Corep& w) const {
    Corep out{w.dim, {}};
    for (const auto& e : w.entries) out.entries.push_back(apply(alg, e));
    return out;
  }
};

inline bool compatible(const CrossedProductAlgebra& alg, const AutTable& pg, const AutTable& pk) {
  for (int g = 0; g < alg.gamma_order(); ++g)
    for (int k = 0; k < alg.k_order(); ++k)
      if (pk[alg.alpha(g, k)] != alg.alpha(pg[g], pk[k]) || pg[alg.beta(g, k)] != alg.beta(pg[g], pk[k])) return false;
  return true;
}

/// All pairs (phi_Gamma, phi_K) of automorphisms intertwining alpha and beta.
inline std::vector<PairAutomorphism> pair_automorphisms(const CrossedProductAlgebra& alg) {
  std::vector<PairAutomorphism> out;
  const auto ag = automorphisms(alg.gamma());
  const auto ak = automorphisms(alg.k());
  for (const auto& pg : ag)
    for (const auto& pk : ak)
      if (compatible(alg, pg, pk)) out.push_back(PairAutomorphism{pg, pk});
  return out;
}

/// Ad_r on Gamma together with Ad_{(e, r)} on G x| Lambda, for r in Lambda.
inline PairAutomorphism inner_pair_automorphism(const MatchedPair<FiniteGamma>& mp, int lambda_id) {
  const auto& gm = *mp.gamma.group();
  PairAutomorphism th{inner_aut(gm, mp.lambda[lambda_id]), inner_aut(*mp.k, semidirect_id(mp.tau_lambda, mp.g->identity(), lambda_id))};
  return th;
}

/// The induced permutation theta_* of Irr and unitaries T_x with
/// theta(W^x) = T_x W^{theta_* x} T_x^*.
struct DualPushforward {
  std::vector<int> perm;
  std::vector<Mat> t;

  /// theta-hat(a)_{theta_* x} = T_x^* a_x T_x.
  DualElement operator()(const DualElement& a) const {
    DualElement out;
    for (const auto& [x, m] : a) out[perm[x]] = t[x].adjoint() * m * t[x];
    return out;
  }
};

inline DualPushforward dual_pushforward(const CrossedProductAlgebra& alg, const std::vector<Corep>& w,
                                        const PairAutomorphism& th) {
  std::vector<Vec> chars;
  for (const auto& c : w) chars.push_back(corep_character(alg, c));
  DualPushforward out;
  for (std::size_t x = 0; x < w.size(); ++x) {
    Corep moved = th.apply(alg, w[x]);
    Vec chi = corep_character(alg, moved);
    int y = -1;
    for (std::size_t z = 0; z < w.size() && y < 0; ++z)
      if ((chars[z] - chi).norm() < kRoundTol) y = static_cast<int>(z);
    if (y < 0) throw AuditError("automorphism does not permute the irreducible classes");
    const int d = w[x].dim, n = alg.dim();
    Mat sys = Mat::Zero(static_cast<Eigen::Index>(d) * d * n, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int c = 0; c < n; ++c) {
            Eigen::Index row = (static_cast<Eigen::Index>(i) * d + j) * n + c;
            sys(row, i * d + k) += w[y](k, j)(c);
            sys(row, k * d + j) -= moved(i, k)(c);
          }
    Eigen::JacobiSVD<Mat> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(d * d - 1) > 1e-8 || (d * d > 1 && sv(d * d - 2) < 1e-6))
      throw NumericalError("intertwiner for the automorphism is not unique");
    Vec v = svd.matrixV().col(d * d - 1);
    Mat t(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) t(i, k) = v(i * d + k);
    t *= std::sqrt(static_cast<double>(d)) / t.norm();
    if (unitary_residual(t) > 1e-8) throw NumericalError("intertwiner for the automorphism is not unitary");
    out.perm.push_back(y);
    out.t.push_back(std::move(t));
  }
  return out;
}

}  // namespace bqg

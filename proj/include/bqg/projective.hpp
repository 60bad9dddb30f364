#pragma once

// 2-cocycles and projective unitary representations of finite groups.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bqg/error.hpp"
#include "bqg/group.hpp"
#include "bqg/linalg.hpp"
#include "bqg/rep.hpp"

namespace bqg {

inline constexpr double kCocycleTol = 1e-9;

/// omega(a, b) stored densely as values[a * n + b].
struct Cocycle {
  GroupPtr group;
  std::vector<cplx> values;

  cplx operator()(int a, int b) const { return values[static_cast<std::size_t>(a) * group->order() + b]; }

  static Cocycle trivial(const GroupPtr& g) { return Cocycle{g, std::vector<cplx>(g->order() * g->order(), 1.0)}; }

  Cocycle opposite() const {
    Cocycle c = *this;
    for (auto& z : c.values) z = std::conj(z);
    return c;
  }

  Cocycle operator*(const Cocycle& o) const {
    Cocycle c = *this;
    for (std::size_t i = 0; i < values.size(); ++i) c.values[i] *= o.values[i];
    return c;
  }

  /// Largest violation of the cocycle identity, normalization and |omega| = 1.
  double residual() const {
    const auto& g = *group;
    const int n = static_cast<int>(g.order());
    double r = 0;
    for (int a = 0; a < n; ++a) {
      r = std::max({r, std::abs((*this)(g.identity(), a) - 1.0), std::abs((*this)(a, g.identity()) - 1.0)});
      for (int b = 0; b < n; ++b) {
        r = std::max(r, std::abs(std::abs((*this)(a, b)) - 1.0));
        for (int c = 0; c < n; ++c)
          r = std::max(r, std::abs((*this)(a, b) * (*this)(g.mul(a, b), c) - (*this)(b, c) * (*this)(a, g.mul(b, c))));
      }
    }
    return r;
  }

  bool equals(const Cocycle& o, double tol = kCocycleTol) const {
    if (values.size() != o.values.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (std::abs(values[i] - o.values[i]) > tol) return false;
    return true;
  }

  bool is_trivial(double tol = kCocycleTol) const { return equals(trivial(group), tol); }
};

/// Coboundary of b: (a, c) -> b(a) b(c) / b(ac).
inline Cocycle coboundary(const GroupPtr& g, const std::vector<cplx>& b) {
  Cocycle c{g, std::vector<cplx>(g->order() * g->order())};
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t x = 0; x < g->order(); ++x) c.values[a * g->order() + x] = b[a] * b[x] / b[g->mul(a, x)];
  return c;
}

struct ProjectiveRep {
  GroupPtr group;
  std::vector<Mat> matrices;
  Cocycle cocycle;

  int dim() const { return static_cast<int>(matrices.front().rows()); }
  const Mat& operator()(int a) const { return matrices[a]; }

  Character character() const {
    Character chi(matrices.size());
    for (std::size_t a = 0; a < matrices.size(); ++a) chi[a] = matrices[a].trace();
    return chi;
  }

  /// Largest deviation from V(a)V(b) = omega(a,b) V(ab), unitarity and V(e) = 1.
  double residual() const {
    double r = (matrices[group->identity()] - Mat::Identity(dim(), dim())).norm();
    for (const auto& m : matrices) r = std::max(r, unitary_residual(m));
    for (std::size_t a = 0; a < matrices.size(); ++a)
      for (std::size_t b = 0; b < matrices.size(); ++b)
        r = std::max(r, (matrices[a] * matrices[b] - cocycle(a, b) * matrices[group->mul(a, b)]).norm());
    return r;
  }
};

/// Wraps unitary matrices satisfying V(a)V(b) in T.V(ab) and extracts the
/// cocycle tr(V(a)V(b)V(ab)^*) / dim.
inline ProjectiveRep projective_from_matrices(const GroupPtr& g, std::vector<Mat> mats) {
  if (mats.size() != g->order()) throw InvalidArgument("projective representation needs one matrix per element");
  const auto d = static_cast<double>(mats.front().rows());
  Cocycle c{g, std::vector<cplx>(g->order() * g->order())};
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b) {
      cplx w = (mats[a] * mats[b] * mats[g->mul(a, b)].adjoint()).trace() / d;
      c.values[a * g->order() + b] = w / std::abs(w);
    }
  ProjectiveRep p{g, std::move(mats), std::move(c)};
  double r = p.residual();
  if (r > 1e-7) throw NumericalError("matrices do not form a projective representation (residual " + std::to_string(r) + ")");
  return p;
}

inline ProjectiveRep from_unitary(const UnitaryRep& u) { return ProjectiveRep{u.group, u.matrices, Cocycle::trivial(u.group)}; }

inline ProjectiveRep gauge(const ProjectiveRep& v, const std::vector<cplx>& b) {
  ProjectiveRep out = v;
  for (std::size_t a = 0; a < b.size(); ++a) out.matrices[a] *= b[a];
  out.cocycle = v.cocycle * coboundary(v.group, b);
  return out;
}

inline ProjectiveRep proj_tensor(const ProjectiveRep& a, const ProjectiveRep& b) {
  ProjectiveRep out{a.group, {}, a.cocycle * b.cocycle};
  for (std::size_t x = 0; x < a.matrices.size(); ++x) out.matrices.push_back(kron(a.matrices[x], b.matrices[x]));
  return out;
}

inline ProjectiveRep proj_conjugate(const ProjectiveRep& a) {
  ProjectiveRep out{a.group, {}, a.cocycle.opposite()};
  for (const auto& m : a.matrices) out.matrices.push_back(m.conjugate());
  return out;
}

inline ProjectiveRep proj_direct_sum(const ProjectiveRep& a, const ProjectiveRep& b) {
  ProjectiveRep out{a.group, {}, a.cocycle};
  for (std::size_t x = 0; x < a.matrices.size(); ++x) {
    Mat m = Mat::Zero(a.dim() + b.dim(), a.dim() + b.dim());
    m.topLeftCorner(a.dim(), a.dim()) = a.matrices[x];
    m.bottomRightCorner(b.dim(), b.dim()) = b.matrices[x];
    out.matrices.push_back(std::move(m));
  }
  return out;
}

/// Dimension of {X : V2(a) X = X V1(a)}, the trace of the averaging projection.
inline long long proj_mor_dim(const ProjectiveRep& v1, const ProjectiveRep& v2) {
  if (!v1.cocycle.equals(v2.cocycle)) throw AuditError("proj_mor_dim: cocycles differ");
  return char_mult(v1.character(), v2.character());
}

/// Normalizes an intertwiner so that its first entry above `eps` in
/// row-major order is real and positive.
inline Mat fix_phase(const Mat& x, double eps = 1e-6) {
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (std::abs(x(i, j)) > eps) return x * (std::abs(x(i, j)) / x(i, j));
  return x;
}

/// The projective representation V of lambda0 on the carrier of u with
/// V(l) in Mor(l.u, u), where (l.u)(g) = u(alpha_{l^-1}(g)). lambda0 embeds
/// into the acting group of `action`.
inline ProjectiveRep linking_rep(const UnitaryRep& u, const Embedding& lambda0, const AutAction& action) {
  const Character chi = u.character();
  if (std::abs(char_norm2(chi) - 1.0) > kRoundTol) throw InvalidArgument("linking_rep: u is reducible");
  const int d = u.dim();
  const auto& lam = *action.acting;
  std::vector<Mat> mats;
  for (int p : lambda0.to_parent) {
    const AutTable& a = action.images[lam.inv(p)];
    UnitaryRep moved = pullback(u, a);
    if (char_mult(moved.character(), chi) == 0)
      throw InvalidArgument("linking_rep: " + lam.name(p) + " does not fix the class of u");
    auto xs = intertwiners_from_irreducible(moved.matrices, u.matrices);
    if (xs.size() != 1) throw InvalidArgument("linking_rep: intertwiner space is not one-dimensional");
    mats.push_back(fix_phase(xs.front() * std::sqrt(static_cast<double>(d))));
  }
  return projective_from_matrices(lambda0.sub, std::move(mats));
}

/// Twisted left regular representation L(a) delta_b = omega(a, b) delta_{ab}.
inline ProjectiveRep twisted_regular(const Cocycle& w) {
  const auto& g = *w.group;
  const auto n = static_cast<Eigen::Index>(g.order());
  ProjectiveRep out{w.group, {}, w};
  for (std::size_t a = 0; a < g.order(); ++a) {
    Mat m = Mat::Zero(n, n);
    for (std::size_t b = 0; b < g.order(); ++b) m(g.mul(a, b), b) = w(a, b);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

/// All irreducible omega-projective representations up to equivalence,
/// ordered by dimension then quantized character.
inline std::vector<ProjectiveRep> proj_irreps_for_cocycle(const Cocycle& w, std::uint64_t seed = kDefaultSeed) {
  double res = w.residual();
  if (res > kCocycleTol) throw InvalidArgument("not a normalized 2-cocycle (residual " + std::to_string(res) + ")");
  if (w.is_trivial()) {
    std::vector<ProjectiveRep> out;
    for (const auto& c : irreps(w.group, seed)) out.push_back(ProjectiveRep{w.group, c.rep.matrices, w});
    return out;
  }
  ProjectiveRep reg = twisted_regular(w);
  auto parts = split_irreducibles(UnitaryRep{w.group, reg.matrices}, seed);
  std::vector<ProjectiveRep> out;
  std::size_t total = 0;
  for (const auto& p : parts) {
    Character chi = p.character();
    bool seen = false;
    for (const auto& q : out) seen = seen || char_equal(q.character(), chi);
    if (seen) continue;
    out.push_back(ProjectiveRep{w.group, p.matrices, w});
    total += static_cast<std::size_t>(p.dim()) * p.dim();
  }
  if (total != w.group->order())
    throw NumericalError("projective splitting found sum of squared dims " + std::to_string(total));
  std::stable_sort(out.begin(), out.end(), [](const ProjectiveRep& a, const ProjectiveRep& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return char_key(a.character()) < char_key(b.character());
  });
  return out;
}

}  // namespace bqg

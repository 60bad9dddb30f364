#pragma once

// Unitary representations of finite groups: characters, intertwiner
// dimensions, tensor/conjugate/induced representations, and the complete list
// of irreducibles computed by randomized splitting of the regular
// representation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bqg/error.hpp"
#include "bqg/group.hpp"
#include "bqg/linalg.hpp"

namespace bqg {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

using Character = std::vector<cplx>;

struct UnitaryRep {
  GroupPtr group;
  std::vector<Mat> matrices;  // indexed by element id

  int dim() const { return static_cast<int>(matrices.front().rows()); }
  const Mat& operator()(int g) const { return matrices[g]; }

  Character character() const {
    Character chi(matrices.size());
    for (std::size_t g = 0; g < matrices.size(); ++g) chi[g] = matrices[g].trace();
    return chi;
  }

  /// Largest deviation from unitarity, multiplicativity and rho(e) = 1.
  double residual() const {
    double r = (matrices[group->identity()] - Mat::Identity(dim(), dim())).norm();
    for (const auto& m : matrices) r = std::max(r, unitary_residual(m));
    for (std::size_t a = 0; a < matrices.size(); ++a)
      for (std::size_t b = 0; b < matrices.size(); ++b)
        r = std::max(r, (matrices[a] * matrices[b] - matrices[group->mul(a, b)]).norm());
    return r;
  }

  void audit(double tol = kUnitaryTol) const {
    double r = residual();
    if (r > tol) throw NumericalError("representation residual " + std::to_string(r) + " exceeds tolerance");
  }
};

struct IrrClass {
  int id;
  UnitaryRep rep;
  Character chi;
  int dim;
};

// ---------------------------------------------------------------------------
// Characters

inline cplx char_inner(const Character& a, const Character& b) {
  cplx s = 0;
  for (std::size_t g = 0; g < a.size(); ++g) s += std::conj(a[g]) * b[g];
  return s / static_cast<double>(a.size());
}

inline long long char_mult(const Character& a, const Character& b) {
  return round_checked(char_inner(a, b), kRoundTol, "character inner product");
}

inline double char_norm2(const Character& a) { return char_inner(a, a).real(); }

inline Character char_product(const Character& a, const Character& b) {
  Character c(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) c[g] = a[g] * b[g];
  return c;
}

inline Character char_conj(const Character& a) {
  Character c(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) c[g] = std::conj(a[g]);
  return c;
}

inline bool char_equal(const Character& a, const Character& b, double tol = kRoundTol) {
  if (a.size() != b.size()) return false;
  for (std::size_t g = 0; g < a.size(); ++g)
    if (std::abs(a[g] - b[g]) > tol) return false;
  return true;
}

/// Character quantized to a 1e-6 grid; a total order independent of bases.
inline std::vector<std::pair<long long, long long>> char_key(const Character& chi) {
  std::vector<std::pair<long long, long long>> k(chi.size());
  for (std::size_t g = 0; g < chi.size(); ++g)
    k[g] = {std::llround(chi[g].real() * 1e6), std::llround(chi[g].imag() * 1e6)};
  return k;
}

// ---------------------------------------------------------------------------
// Constructions

inline UnitaryRep trivial_rep(const GroupPtr& g) {
  return UnitaryRep{g, std::vector<Mat>(g->order(), Mat::Identity(1, 1))};
}

inline UnitaryRep regular_rep(const GroupPtr& g) {
  const auto n = static_cast<Eigen::Index>(g->order());
  UnitaryRep r{g, {}};
  for (std::size_t a = 0; a < g->order(); ++a) {
    Mat m = Mat::Zero(n, n);
    for (std::size_t b = 0; b < g->order(); ++b) m(g->mul(a, b), b) = 1.0;
    r.matrices.push_back(std::move(m));
  }
  return r;
}

inline long long mor_dim(const UnitaryRep& u, const UnitaryRep& v) {
  if (u.group != v.group && u.group->order() != v.group->order())
    throw InvalidArgument("mor_dim: representations of different groups");
  return char_mult(u.character(), v.character());
}

inline UnitaryRep tensor(const UnitaryRep& u, const UnitaryRep& v) {
  UnitaryRep w{u.group, {}};
  for (std::size_t g = 0; g < u.matrices.size(); ++g) w.matrices.push_back(kron(u.matrices[g], v.matrices[g]));
  return w;
}

inline UnitaryRep conjugate(const UnitaryRep& u) {
  UnitaryRep w{u.group, {}};
  for (const auto& m : u.matrices) w.matrices.push_back(m.conjugate());
  return w;
}

inline UnitaryRep direct_sum(const std::vector<UnitaryRep>& parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of no representations");
  int d = 0;
  for (const auto& p : parts) d += p.dim();
  UnitaryRep w{parts.front().group, {}};
  for (std::size_t g = 0; g < parts.front().matrices.size(); ++g) {
    Mat m = Mat::Zero(d, d);
    int off = 0;
    for (const auto& p : parts) {
      m.block(off, off, p.dim(), p.dim()) = p.matrices[g];
      off += p.dim();
    }
    w.matrices.push_back(std::move(m));
  }
  return w;
}

/// u o theta for an automorphism table of the underlying group.
inline UnitaryRep pullback(const UnitaryRep& u, const AutTable& theta) {
  UnitaryRep w{u.group, {}};
  for (std::size_t g = 0; g < u.matrices.size(); ++g) w.matrices.push_back(u.matrices[theta[g]]);
  return w;
}

inline UnitaryRep restrict(const UnitaryRep& w, const Embedding& e) {
  UnitaryRep r{e.sub, {}};
  for (int p : e.to_parent) r.matrices.push_back(w.matrices[p]);
  return r;
}

/// Ind_H^G u over the least-element left coset section c_1 < c_2 < ...;
/// block (i, j) of Ind(g) is u(c_i^-1 g c_j) when that lies in H.
inline UnitaryRep induce(const Embedding& e, const UnitaryRep& u) {
  const auto& g = *e.parent;
  std::vector<int> reps = left_coset_reps(g, e.image());
  const int d = u.dim();
  const auto k = static_cast<int>(reps.size());
  UnitaryRep w{e.parent, {}};
  for (std::size_t x = 0; x < g.order(); ++x) {
    Mat m = Mat::Zero(k * d, k * d);
    for (int j = 0; j < k; ++j) {
      int y = g.mul(static_cast<int>(x), reps[j]);
      for (int i = 0; i < k; ++i) {
        int h = e.to_sub[g.mul(g.inv(reps[i]), y)];
        if (h >= 0) {
          m.block(i * d, j * d, d, d) = u.matrices[h];
          break;
        }
      }
    }
    w.matrices.push_back(std::move(m));
  }
  return w;
}

/// Restriction of a representation to an invariant subspace with isometry m.
inline UnitaryRep compress(const UnitaryRep& w, const Mat& m) {
  UnitaryRep r{w.group, {}};
  for (const auto& x : w.matrices) r.matrices.push_back(m.adjoint() * x * m);
  return r;
}

// ---------------------------------------------------------------------------
// Irreducibles

namespace detail {

inline std::vector<IrrClass> abelian_irreps(const GroupPtr& g) {
  // Extend characters along a chain <g_1> <= <g_1, g_2> <= ... one generator at a time.
  const std::size_t n = g->order();
  std::vector<int> in_h(n, 0);
  std::vector<int> h{g->identity()};
  in_h[g->identity()] = 1;
  std::vector<Character> chars{Character(n, 0.0)};
  chars[0][g->identity()] = 1.0;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_h[x]) continue;
    int m = 1;
    int xm = static_cast<int>(x);
    while (!in_h[xm]) {
      xm = g->mul(xm, static_cast<int>(x));
      ++m;
    }
    std::vector<int> grown;
    for (int j = 0; j < m; ++j)
      for (int y : h) grown.push_back(g->mul(y, g->pow(static_cast<int>(x), j)));
    std::vector<Character> next;
    for (const auto& chi : chars) {
      double base = std::arg(chi[xm]) / m;
      for (int k = 0; k < m; ++k) {
        cplx c = std::polar(1.0, base + 2.0 * std::numbers::pi * k / m);
        Character ext(n, 0.0);
        for (int j = 0; j < m; ++j) {
          cplx cj = std::pow(c, j);
          for (int y : h) ext[g->mul(y, g->pow(static_cast<int>(x), j))] = chi[y] * cj;
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    h = std::move(grown);
    for (int y : h) in_h[y] = 1;
  }
  std::vector<IrrClass> out;
  for (auto& chi : chars) {
    UnitaryRep r{g, {}};
    for (std::size_t y = 0; y < n; ++y) r.matrices.push_back(Mat::Constant(1, 1, chi[y]));
    out.push_back(IrrClass{0, std::move(r), chi, 1});
  }
  return out;
}

/// Splits a representation into irreducible constituents by repeated
/// eigen-decomposition of randomly averaged Hermitian operators.
inline void split_dense(const UnitaryRep& w, std::mt19937_64& rng, std::vector<UnitaryRep>& out, int depth = 0) {
  if (char_norm2(w.character()) < 1.0 + 0.5) {
    out.push_back(w);
    return;
  }
  if (depth > 24) throw NumericalError("isotypic splitting did not converge");
  Mat h = random_hermitian(w.dim(), rng);
  Mat t = Mat::Zero(w.dim(), w.dim());
  for (const auto& m : w.matrices) t += m * h * m.adjoint();
  t /= static_cast<double>(w.matrices.size());
  auto blocks = eigenspaces(t);
  if (blocks.size() == 1) {
    split_dense(w, rng, out, depth + 1);
    return;
  }
  for (const auto& b : blocks) split_dense(compress(w, b), rng, out, depth + 1);
}

inline std::vector<IrrClass> regular_split_irreps(const GroupPtr& g, std::uint64_t seed) {
  const std::size_t n = g->order();
  const auto N = static_cast<Eigen::Index>(n);
  std::mt19937_64 rng(seed);
  Mat h = random_hermitian(N, rng);
  // rho(x) H rho(x)^* has entries H(x^-1 a, x^-1 b) for the left regular rho.
  Mat t = Mat::Zero(N, N);
  for (std::size_t x = 0; x < n; ++x) {
    int xi = g->inv(static_cast<int>(x));
    std::vector<int> p(n);
    for (std::size_t a = 0; a < n; ++a) p[a] = g->mul(xi, static_cast<int>(a));
    for (Eigen::Index b = 0; b < N; ++b)
      for (Eigen::Index a = 0; a < N; ++a) t(a, b) += h(p[a], p[b]);
  }
  t /= static_cast<double>(n);
  std::vector<IrrClass> found;
  std::size_t total = 0;
  auto accept = [&](const UnitaryRep& r) {
    Character chi = r.character();
    for (const auto& c : found)
      if (char_equal(c.chi, chi)) return;
    total += static_cast<std::size_t>(r.dim()) * r.dim();
    found.push_back(IrrClass{0, r, chi, r.dim()});
  };
  for (const auto& m : eigenspaces(t)) {
    if (total == n) break;
    // Cheap character of the block before materializing its matrices.
    Character chi(n);
    for (std::size_t x = 0; x < n; ++x) {
      int xi = g->inv(static_cast<int>(x));
      cplx s = 0;
      for (Eigen::Index a = 0; a < N; ++a) s += m.row(a).conjugate().cwiseProduct(m.row(g->mul(xi, static_cast<int>(a)))).sum();
      chi[x] = s;
    }
    bool known = false;
    for (const auto& c : found) known = known || char_equal(c.chi, chi);
    if (known) continue;
    UnitaryRep block{g, {}};
    for (std::size_t x = 0; x < n; ++x) {
      int xi = g->inv(static_cast<int>(x));
      Mat rm(N, m.cols());
      for (Eigen::Index a = 0; a < N; ++a) rm.row(a) = m.row(g->mul(xi, static_cast<int>(a)));
      block.matrices.push_back(m.adjoint() * rm);
    }
    std::vector<UnitaryRep> parts;
    split_dense(block, rng, parts);
    for (const auto& p : parts) accept(p);
  }
  return found;
}

}  // namespace detail

/// Splits an arbitrary representation into irreducible constituents (with
/// repetition), in a seed-determined order.
inline std::vector<UnitaryRep> split_irreducibles(const UnitaryRep& w, std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  std::vector<UnitaryRep> out;
  detail::split_dense(w, rng, out);
  return out;
}

/// Complete list of irreducible classes of g, canonically ordered: trivial
/// first, then by dimension, then by quantized character.
inline std::vector<IrrClass> irreps(const GroupPtr& g, std::uint64_t seed = kDefaultSeed) {
  std::vector<IrrClass> out = g->is_abelian() ? detail::abelian_irreps(g) : detail::regular_split_irreps(g, seed);
  std::size_t total = 0;
  for (const auto& c : out) total += static_cast<std::size_t>(c.dim) * c.dim;
  if (total != g->order())
    throw NumericalError("irreducible splitting of " + g->label() + " found sum of squared dims " +
                         std::to_string(total) + " != " + std::to_string(g->order()));
  auto is_trivial = [](const IrrClass& c) {
    if (c.dim != 1) return false;
    for (const auto& z : c.chi)
      if (std::abs(z - 1.0) > kRoundTol) return false;
    return true;
  };
  std::stable_sort(out.begin(), out.end(), [&](const IrrClass& a, const IrrClass& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.dim != b.dim) return a.dim < b.dim;
    return char_key(a.chi) < char_key(b.chi);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

/// Id of the irreducible class with the given character; throws if none.
inline int find_class(const std::vector<IrrClass>& irrs, const Character& chi) {
  for (const auto& c : irrs)
    if (char_equal(c.chi, chi)) return c.id;
  throw AuditError("character does not match any irreducible class");
}

/// (class id, multiplicity) pairs with nonzero multiplicity, by increasing id.
inline std::vector<std::pair<int, long long>> decompose(const UnitaryRep& w, const std::vector<IrrClass>& irrs) {
  Character chi = w.character();
  std::vector<std::pair<int, long long>> out;
  long long dim = 0;
  for (const auto& c : irrs) {
    long long m = char_mult(c.chi, chi);
    if (m) out.emplace_back(c.id, m);
    dim += m * c.dim;
  }
  if (dim != w.dim()) throw NumericalError("decomposition does not account for the full dimension");
  return out;
}

}  // namespace bqg

#pragma once

// Irreducible representations of G x| Lambda through representation
// parameters (u, V, v), and the fusion rules through incidence numbers
// summed over coset triples.

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "bqg/error.hpp"
#include "bqg/fusion_table.hpp"
#include "bqg/group.hpp"
#include "bqg/projective.hpp"
#include "bqg/rep.hpp"

namespace bqg {

using Rational = boost::rational<long long>;

struct SemidirectInstance {
  AutAction tau;            // Lambda -> Aut(G)
  GroupPtr product;         // G x| Lambda, (g, r) has id g + |G| r
  std::vector<IrrClass> irr_g;
  std::vector<std::vector<int>> irr_action;  // irr_action[r][x] = class of u_x o alpha_{r^-1}

  const GroupPtr& g() const { return tau.target; }
  const GroupPtr& lambda() const { return tau.acting; }
  int pair_id(int g_id, int r) const { return semidirect_id(tau, g_id, r); }
};

inline SemidirectInstance make_semidirect(const AutAction& tau, std::uint64_t seed = kDefaultSeed) {
  SemidirectInstance inst{tau, semidirect_product(tau), irreps(tau.target, seed), {}};
  const auto& lam = *tau.acting;
  for (std::size_t r = 0; r < lam.order(); ++r) {
    const AutTable& a = tau.images[lam.inv(static_cast<int>(r))];
    std::vector<int> row;
    for (const auto& c : inst.irr_g) {
      Character moved(c.chi.size());
      for (std::size_t g = 0; g < moved.size(); ++g) moved[g] = c.chi[a[g]];
      row.push_back(find_class(inst.irr_g, moved));
    }
    inst.irr_action.push_back(std::move(row));
  }
  return inst;
}

/// A representation parameter (u, V, v) on a subgroup lambda0 of Lambda.
/// For a DRP, lambda0 is the stabilizer of the class of u.
struct DRP {
  Embedding lambda0;
  int u_class;
  UnitaryRep u;
  ProjectiveRep V;
  ProjectiveRep v;

  /// (g, l) -> u(g) V(l) (x) v(l) on G x| lambda0, indexed by the sub ids of
  /// `sub` (an embedding of G x| lambda0 into the product).
  std::vector<Mat> local_matrices(const SemidirectInstance& inst, const Embedding& sub) const {
    const auto ng = static_cast<int>(inst.g()->order());
    std::vector<Mat> out;
    for (int p : sub.to_parent) {
      int l = lambda0.to_sub[p / ng];
      out.push_back(kron(u(p % ng) * V(l), v(l)));
    }
    return out;
  }
};

struct SemidirectIrrClass {
  int id;
  DRP drp;
  UnitaryRep realized;
  Character chi;
  int dim;
};

inline Subgroup stabilizer_of_class(const SemidirectInstance& inst, int x) {
  Subgroup s;
  for (std::size_t r = 0; r < inst.lambda()->order(); ++r)
    if (inst.irr_action[r][x] == x) s.elements.push_back(static_cast<int>(r));
  return s;
}

/// G x| lambda0 as a subgroup of the product.
inline Embedding local_product(const SemidirectInstance& inst, const Subgroup& lambda0) {
  Subgroup s;
  const auto ng = static_cast<int>(inst.g()->order());
  for (int r : lambda0.elements)
    for (int g = 0; g < ng; ++g) s.elements.push_back(g + ng * r);
  std::sort(s.elements.begin(), s.elements.end());
  return embed_subgroup(inst.product, s);
}

/// Ind from G x| lambda0 to G x| Lambda of the parameterized representation.
inline UnitaryRep realize(const SemidirectInstance& inst, const DRP& d) {
  Embedding sub = local_product(inst, d.lambda0.image());
  return induce(sub, UnitaryRep{sub.sub, d.local_matrices(inst, sub)});
}

inline UnitaryRep realize_local(const SemidirectInstance& inst, const DRP& d) {
  Embedding sub = local_product(inst, d.lambda0.image());
  return UnitaryRep{sub.sub, d.local_matrices(inst, sub)};
}

/// One class per Lambda-orbit of DRPs: orbit representatives are the least
/// class ids of Irr(G), and v runs over the irreducible projective
/// representations with the opposite cocycle in canonical order.
inline std::vector<SemidirectIrrClass> classify_semidirect(const SemidirectInstance& inst,
                                                           std::uint64_t seed = kDefaultSeed) {
  std::vector<SemidirectIrrClass> out;
  std::vector<char> covered(inst.irr_g.size());
  long long total = 0;
  for (std::size_t x = 0; x < inst.irr_g.size(); ++x) {
    if (covered[x]) continue;
    for (std::size_t r = 0; r < inst.lambda()->order(); ++r) covered[inst.irr_action[r][x]] = 1;
    Embedding l0 = embed_subgroup(inst.lambda(), stabilizer_of_class(inst, static_cast<int>(x)));
    const UnitaryRep& u = inst.irr_g[x].rep;
    ProjectiveRep V = linking_rep(u, l0, inst.tau);
    for (auto& v : proj_irreps_for_cocycle(V.cocycle.opposite(), seed)) {
      DRP d{l0, static_cast<int>(x), u, V, std::move(v)};
      UnitaryRep w = realize(inst, d);
      Character chi = w.character();
      if (std::abs(char_norm2(chi) - 1.0) > kRoundTol)
        throw AuditError("realized representation is not irreducible");
      int dim = w.dim();
      total += static_cast<long long>(dim) * dim;
      out.push_back(SemidirectIrrClass{static_cast<int>(out.size()), std::move(d), std::move(w), std::move(chi), dim});
    }
  }
  if (total != static_cast<long long>(inst.product->order()))
    throw AuditError("semidirect classification incomplete: sum of squared dims " + std::to_string(total) +
                     " != " + std::to_string(inst.product->order()));
  return out;
}

inline int find_semidirect_class(const std::vector<SemidirectIrrClass>& classes, const Character& chi) {
  for (const auto& c : classes)
    if (char_equal(c.chi, chi)) return c.id;
  throw AuditError("character does not match any semidirect class");
}

/// r . D = (u o alpha_{r^-1}, V o Ad_{r^-1}, v o Ad_{r^-1}) on r lambda0 r^-1.
inline DRP translate_drp(const SemidirectInstance& inst, const DRP& d, int r) {
  const auto& lam = inst.lambda();
  Embedding e = embed_subgroup(lam, conjugate_subgroup(*lam, r, d.lambda0.image()));
  int ri = lam->inv(r);
  std::vector<Mat> vm, wm;
  for (int p : e.to_parent) {
    int l = d.lambda0.to_sub[lam->conj(ri, p)];
    vm.push_back(d.V(l));
    wm.push_back(d.v(l));
  }
  DRP out{e, inst.irr_action[r][d.u_class], pullback(d.u, inst.tau.images[ri]), {}, {}};
  out.V = projective_from_matrices(e.sub, std::move(vm));
  out.v = projective_from_matrices(e.sub, std::move(wm));
  return out;
}

inline DRP contragredient_drp(const SemidirectInstance& inst, const DRP& d) {
  UnitaryRep uc = conjugate(d.u);
  int uc_class = find_class(inst.irr_g, uc.character());
  return DRP{d.lambda0, uc_class, std::move(uc), proj_conjugate(d.V), proj_conjugate(d.v)};
}

struct DRPEquivalence {
  bool realized;    // authoritative: equivalence of the local realizations
  bool structural;  // canonical-gauge check of condition (b)
};

/// Decides equivalence of two parameters on the same subgroup. The gauge b
/// is forced by a unitary U in Mor(u1, u2) through U^* V2 U = b V1; the
/// structural test then asks for Mor(conj(b) v1, v2) != 0.
inline DRPEquivalence drp_equivalent_detail(const SemidirectInstance& inst, const DRP& d1, const DRP& d2) {
  if (d1.lambda0.image() != d2.lambda0.image()) throw InvalidArgument("drp_equivalent: different subgroups");
  DRPEquivalence eq{false, false};
  eq.realized = char_equal(realize_local(inst, d1).character(), realize_local(inst, d2).character());
  if (char_mult(d1.u.character(), d2.u.character()) == 0) return eq;
  auto xs = intertwiners_from_irreducible(d1.u.matrices, d2.u.matrices);
  Mat U = xs.front() * std::sqrt(static_cast<double>(d1.u.dim()));
  std::vector<cplx> b;
  for (std::size_t l = 0; l < d1.lambda0.sub->order(); ++l) {
    cplx z = (d1.V(l).adjoint() * U.adjoint() * d2.V(l) * U).trace() / static_cast<double>(d1.u.dim());
    b.push_back(z / std::abs(z));
  }
  std::vector<cplx> bc(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bc[i] = std::conj(b[i]);
  ProjectiveRep v1 = gauge(d1.v, bc);
  if (!v1.cocycle.equals(d2.v.cocycle)) throw AuditError("drp_equivalent: gauge does not align cocycles");
  eq.structural = proj_mor_dim(v1, d2.v) != 0;
  return eq;
}

inline bool drp_equivalent(const SemidirectInstance& inst, const DRP& d1, const DRP& d2) {
  DRPEquivalence eq = drp_equivalent_detail(inst, d1, d2);
  if (eq.realized != eq.structural) throw AuditError("drp_equivalent: structural and realized checks disagree");
  return eq.realized;
}

/// dim Mor_{lambda0}(v1, V'_p x v2 x v3) over lambda0 = intersection of the
/// three subgroups, where V'_p acts on an orthonormal basis X_i of
/// Mor_G(u1, u2 x u3) by X -> (V2 x V3)(l) X V1(l)^*.
inline long long incidence_number(const SemidirectInstance& inst, const DRP& d1, const DRP& d2, const DRP& d3) {
  UnitaryRep u23 = tensor(d2.u, d3.u);
  if (char_mult(d1.u.character(), u23.character()) == 0) return 0;
  auto xs = intertwiners_from_irreducible(d1.u.matrices, u23.matrices);
  const auto n = static_cast<Eigen::Index>(xs.size());
  Subgroup l0 = intersect(intersect(d1.lambda0.image(), d2.lambda0.image()), d3.lambda0.image());
  Embedding e = embed_subgroup(inst.lambda(), l0);
  std::vector<Mat> v1m, ym;
  for (int p : e.to_parent) {
    int a1 = d1.lambda0.to_sub[p], a2 = d2.lambda0.to_sub[p], a3 = d3.lambda0.to_sub[p];
    Mat v23 = kron(d2.V(a2), d3.V(a3));
    Mat vp(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat moved = v23 * xs[j] * d1.V(a1).adjoint();
      for (Eigen::Index i = 0; i < n; ++i) vp(i, j) = (xs[i].adjoint() * moved).trace();
    }
    v1m.push_back(d1.v(a1));
    ym.push_back(kron(kron(vp, d2.v(a2)), d3.v(a3)));
  }
  ProjectiveRep v1 = projective_from_matrices(e.sub, std::move(v1m));
  ProjectiveRep y = projective_from_matrices(e.sub, std::move(ym));
  if (!v1.cocycle.equals(y.cocycle)) throw AuditError("incidence number: cocycles of v1 and V'_p x v2 x v3 differ");
  return proj_mor_dim(v1, y);
}

/// Fusion rules dim Mor(W1, W2 x W3) of G x| Lambda from incidence numbers,
/// with translated parameters cached per (class, coset representative).
class SemidirectFusion {
 public:
  SemidirectFusion(const SemidirectInstance& inst, const std::vector<SemidirectIrrClass>& classes)
      : inst_(inst), classes_(classes) {}

  long long operator()(int w1, int w2, int w3) const {
    const auto& lam = *inst_.lambda();
    Rational total = 0;
    const auto& r1s = cosets(w1);
    const auto& r2s = cosets(w2);
    const auto& r3s = cosets(w3);
    for (int r1 : r1s)
      for (int r2 : r2s)
        for (int r3 : r3s) {
          const DRP& a = translated(w1, r1);
          const DRP& b = translated(w2, r2);
          const DRP& c = translated(w3, r3);
          long long m = incidence_number(inst_, a, b, c);
          if (m == 0) continue;
          auto l0 = intersect(intersect(a.lambda0.image(), b.lambda0.image()), c.lambda0.image());
          total += Rational(m, static_cast<long long>(lam.order() / l0.size()));
        }
    if (total.denominator() != 1)
      throw AuditError("fusion formula produced a non-integer total " + std::to_string(total.numerator()) + "/" +
                       std::to_string(total.denominator()));
    return total.numerator();
  }

 private:
  const std::vector<int>& cosets(int w) const {
    auto it = cosets_.find(w);
    if (it == cosets_.end())
      it = cosets_.emplace(w, left_coset_reps(*inst_.lambda(), classes_[w].drp.lambda0.image())).first;
    return it->second;
  }

  const DRP& translated(int w, int r) const {
    auto key = std::make_pair(w, r);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, translate_drp(inst_, classes_[w].drp, r)).first;
    return it->second;
  }

  const SemidirectInstance& inst_;
  const std::vector<SemidirectIrrClass>& classes_;
  mutable std::map<int, std::vector<int>> cosets_;
  mutable std::map<std::pair<int, int>, DRP> cache_;
};

/// Brute-force oracle: (1/|G x| Lambda|) sum conj(chi1) chi2 chi3.
inline long long fusion_oracle(const Character& c1, const Character& c2, const Character& c3) {
  return char_mult(c1, char_product(c2, c3));
}

/// N_{xy}^z = dim Mor(z, x (x) y) from the coset/incidence formula, or from
/// characters when `use_oracle` is set.
inline FusionTable semidirect_fusion_table(const SemidirectInstance& inst, const std::vector<SemidirectIrrClass>& cs,
                                           bool use_oracle = false) {
  std::vector<int> dims, conj;
  int unit = -1;
  for (const auto& c : cs) {
    dims.push_back(c.dim);
    conj.push_back(find_semidirect_class(cs, char_conj(c.chi)));
    if (c.dim == 1 && std::all_of(c.chi.begin(), c.chi.end(), [](cplx z) { return std::abs(z - 1.0) < kRoundTol; }))
      unit = c.id;
  }
  if (unit < 0) throw AuditError("no trivial class in the classification");
  if (use_oracle)
    return FusionTable::build(dims, conj, unit,
                              [&](int x, int y, int z) { return fusion_oracle(cs[z].chi, cs[x].chi, cs[y].chi); });
  SemidirectFusion fuse(inst, cs);
  return FusionTable::build(dims, conj, unit, [&](int x, int y, int z) { return fuse(z, x, y); });
}

}  // namespace bqg

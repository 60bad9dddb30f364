#include <gtest/gtest.h>

#include "bqg/fusion_table.hpp"
#include "bqg/mackey.hpp"
#include "bqg/presets.hpp"

using namespace bqg;

namespace {

std::vector<int> class_dims(const std::vector<SemidirectIrrClass>& cs) {
  std::vector<int> d;
  for (const auto& c : cs) d.push_back(c.dim);
  return d;
}

Cocycle klein_nontrivial_cocycle() {
  // Pauli matrices give a projective representation of Z/2 + Z/2 with
  // nontrivial cocycle class.
  auto v4 = direct_sum({cyclic_group(2), cyclic_group(2)});
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  std::vector<Mat> m{Mat::Identity(2, 2), x, z, x * z};
  return projective_from_matrices(v4, m).cocycle;
}

}  // namespace

// ---------------------------------------------------------------------------
// Projective representations

TEST(Projective, CocycleArithmetic) {
  Cocycle w = klein_nontrivial_cocycle();
  EXPECT_LT(w.residual(), 1e-12);
  EXPECT_FALSE(w.is_trivial());
  EXPECT_TRUE((w * w.opposite()).is_trivial());
  EXPECT_TRUE(Cocycle::trivial(w.group).opposite().is_trivial());
}

TEST(Projective, GaugeChangesCocycleByCoboundary) {
  auto z4 = cyclic_group(4);
  auto irrs = irreps(z4);
  ProjectiveRep v = from_unitary(irrs[1].rep);
  std::vector<cplx> ones(4, 1.0);
  EXPECT_TRUE(gauge(v, ones).cocycle.equals(v.cocycle));
  std::vector<cplx> b{1.0, std::polar(1.0, 0.3), std::polar(1.0, -1.1), std::polar(1.0, 2.0)};
  ProjectiveRep g = gauge(v, b);
  EXPECT_LT(g.residual(), 1e-12);
  EXPECT_TRUE(g.cocycle.equals(coboundary(z4, b)));
}

TEST(Projective, ProjectiveIrrepsForCocycle) {
  Cocycle w = klein_nontrivial_cocycle();
  auto irrs = proj_irreps_for_cocycle(w);
  ASSERT_EQ(irrs.size(), 1u);
  EXPECT_EQ(irrs[0].dim(), 2);
  EXPECT_LT(irrs[0].residual(), 1e-9);
  EXPECT_EQ(proj_mor_dim(irrs[0], irrs[0]), 1);
  EXPECT_EQ(proj_mor_dim(irrs[0], proj_direct_sum(irrs[0], irrs[0])), 2);

  auto triv = proj_irreps_for_cocycle(Cocycle::trivial(w.group));
  EXPECT_EQ(triv.size(), 4u);
}

TEST(Projective, CyclicCocyclesAreCoboundaries) {
  // A coboundary on Z/5 built from an arbitrary gauge: the twisted regular
  // representation splits into 1-dimensional pieces only.
  auto z5 = cyclic_group(5);
  std::vector<cplx> b{1.0, std::polar(1.0, 0.7), std::polar(1.0, 1.9), std::polar(1.0, -0.4), std::polar(1.0, 2.5)};
  Cocycle w = coboundary(z5, b);
  auto irrs = proj_irreps_for_cocycle(w);
  EXPECT_EQ(irrs.size(), 5u);
  for (const auto& p : irrs) EXPECT_EQ(p.dim(), 1);
  // Gauging by conj(b) trivializes each of them.
  std::vector<cplx> bc;
  for (auto z : b) bc.push_back(std::conj(z));
  EXPECT_TRUE(gauge(irrs[0], bc).cocycle.is_trivial());
}

TEST(Projective, ProjMorDimMatchesOrdinary) {
  auto s3 = symmetric_group(3);
  auto irrs = irreps(s3);
  for (const auto& a : irrs)
    for (const auto& b : irrs) EXPECT_EQ(proj_mor_dim(from_unitary(a.rep), from_unitary(b.rep)), mor_dim(a.rep, b.rep));
}

TEST(Projective, LinkingRepresentation) {
  auto inst = make_semidirect(presets::z3_inversion());
  Embedding all = embed_subgroup(inst.lambda(), whole_group(*inst.lambda()));
  ProjectiveRep v = linking_rep(inst.irr_g[0].rep, all, inst.tau);
  EXPECT_TRUE(v.cocycle.is_trivial());
  for (const auto& m : v.matrices) EXPECT_NEAR(std::abs(m(0, 0) - 1.0), 0.0, 1e-12);
  EXPECT_THROW(linking_rep(inst.irr_g[1].rep, all, inst.tau), InvalidArgument);
  EXPECT_THROW(linking_rep(regular_rep(inst.g()), all, inst.tau), InvalidArgument);

  // Swap on Z/2 + Z/2 fixes the character that is nontrivial on both factors.
  auto v4 = direct_sum({cyclic_group(2), cyclic_group(2)});
  auto swap = extend_action(cyclic_group(2), v4, {{1, {0, 2, 1, 3}}});
  auto sw = make_semidirect(swap);
  Embedding whole = embed_subgroup(sw.lambda(), whole_group(*sw.lambda()));
  for (const auto& c : sw.irr_g) {
    if (sw.irr_action[1][c.id] != c.id) continue;
    ProjectiveRep l = linking_rep(c.rep, whole, swap);
    EXPECT_LT(l.residual(), 1e-12);
    Mat sq = l(1) * l(1);
    EXPECT_NEAR(std::abs(std::abs(sq(0, 0)) - 1.0), 0.0, 1e-12);
    EXPECT_LT(l.cocycle.residual(), 1e-12);
  }
}

TEST(Projective, LinkingRepIntertwinesAndHasNontrivialCocycle) {
  auto inst = make_semidirect(presets::d4_inner_klein());
  Embedding whole = embed_subgroup(inst.lambda(), whole_group(*inst.lambda()));
  const auto& two = inst.irr_g.back();
  ASSERT_EQ(two.dim, 2);
  ProjectiveRep V = linking_rep(two.rep, whole, inst.tau);
  EXPECT_LT(V.cocycle.residual(), 1e-9);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t g = 0; g < 8; ++g) {
      int moved = inst.tau.images[inst.lambda()->inv(l)][g];
      EXPECT_LT((V(l) * two.rep(moved) - two.rep(g) * V(l)).norm(), 1e-10);
    }
  // The class is nontrivial: no 1-dimensional projective representation exists.
  auto pi = proj_irreps_for_cocycle(V.cocycle);
  ASSERT_EQ(pi.size(), 1u);
  EXPECT_EQ(pi[0].dim(), 2);
}

// ---------------------------------------------------------------------------
// Semidirect classification

TEST(Mackey, Z3InversionMatchesS3) {
  auto inst = make_semidirect(presets::z3_inversion());
  auto cs = classify_semidirect(inst);
  EXPECT_EQ(class_dims(cs), (std::vector<int>{1, 1, 2}));
  auto oracle = irreps(inst.product);
  for (const auto& c : cs) EXPECT_NO_THROW(find_class(oracle, c.chi));
  EXPECT_EQ(cs[0].drp.lambda0.sub->order(), 2u);
  EXPECT_EQ(cs[2].drp.lambda0.sub->order(), 1u);
}

TEST(Mackey, TrivialActionAndTrivialLambda) {
  auto s3 = symmetric_group(3);
  auto z2 = cyclic_group(2);
  auto prod = make_semidirect(trivial_action(z2, s3));
  auto cs = classify_semidirect(prod);
  EXPECT_EQ(cs.size(), 6u);
  for (const auto& c : cs) EXPECT_EQ(c.dim, prod.irr_g[c.drp.u_class].dim);

  auto lone = make_semidirect(trivial_action(trivial_group(), s3));
  EXPECT_EQ(class_dims(classify_semidirect(lone)), (std::vector<int>{1, 1, 2}));
}

TEST(Mackey, CorpusCompletenessAndOracleMatch) {
  for (const auto& [name, tau] : presets::semidirect_corpus()) {
    auto inst = make_semidirect(tau);
    auto cs = classify_semidirect(inst);
    auto oracle = irreps(inst.product);
    EXPECT_EQ(cs.size(), oracle.size()) << name;
    long long total = 0;
    std::vector<int> hit(oracle.size());
    for (const auto& c : cs) {
      total += static_cast<long long>(c.dim) * c.dim;
      EXPECT_LT(c.realized.residual(), 1e-8) << name;
      ++hit[find_class(oracle, c.chi)];
      EXPECT_EQ(c.dim, static_cast<int>(inst.lambda()->order() / c.drp.lambda0.sub->order()) * c.drp.u.dim() *
                           c.drp.v.dim());
    }
    EXPECT_EQ(total, static_cast<long long>(inst.product->order())) << name;
    for (int h : hit) EXPECT_EQ(h, 1) << name;
  }
}

TEST(Mackey, NontrivialCocycleInstance) {
  auto inst = make_semidirect(presets::d4_inner_klein());
  auto cs = classify_semidirect(inst);
  EXPECT_EQ(cs.size(), 17u);
  EXPECT_EQ(cs.back().dim, 4);
  EXPECT_EQ(cs.back().drp.v.dim(), 2);
  EXPECT_FALSE(cs.back().drp.V.cocycle.is_trivial());
  EXPECT_TRUE(cs.back().drp.v.cocycle.equals(cs.back().drp.V.cocycle.opposite()));
}

TEST(Mackey, DrpEquivalence) {
  auto inst = make_semidirect(presets::z3_inversion());
  auto cs = classify_semidirect(inst);
  EXPECT_TRUE(drp_equivalent(inst, cs[0].drp, cs[0].drp));
  EXPECT_FALSE(drp_equivalent(inst, cs[0].drp, cs[1].drp));
  for (const auto& [name, tau] : presets::semidirect_corpus()) {
    auto in = make_semidirect(tau);
    auto cl = classify_semidirect(in);
    for (const auto& c : cl)
      for (int r : c.drp.lambda0.to_parent) {
        DRP moved = translate_drp(in, c.drp, r);
        EXPECT_TRUE(drp_equivalent(in, c.drp, moved)) << name;
      }
    for (const auto& a : cl)
      for (const auto& b : cl)
        if (a.drp.lambda0.image() == b.drp.lambda0.image()) {
          EXPECT_EQ(drp_equivalent(in, a.drp, b.drp), a.id == b.id) << name;
        }
  }
}

TEST(Mackey, ContragredientsArePreserved) {
  for (const auto& [name, tau] : presets::semidirect_corpus()) {
    auto inst = make_semidirect(tau);
    auto cs = classify_semidirect(inst);
    for (const auto& c : cs) {
      DRP dc = contragredient_drp(inst, c.drp);
      UnitaryRep w = realize(inst, dc);
      EXPECT_TRUE(char_equal(w.character(), char_conj(c.chi))) << name;
      DRP back = contragredient_drp(inst, dc);
      EXPECT_TRUE(char_equal(realize(inst, back).character(), c.chi)) << name;
    }
  }
  auto inst = make_semidirect(presets::z3_inversion());
  auto cs = classify_semidirect(inst);
  DRP dc = contragredient_drp(inst, cs[2].drp);
  EXPECT_EQ(dc.u_class, inst.irr_action[1][cs[2].drp.u_class]);
  EXPECT_EQ(find_semidirect_class(cs, realize(inst, dc).character()), 2);
}

TEST(Mackey, IncidenceNumbers) {
  auto inst = make_semidirect(presets::z3_inversion());
  auto cs = classify_semidirect(inst);
  const DRP& triv = cs[0].drp;
  EXPECT_EQ(incidence_number(inst, triv, triv, triv), 1);
  // Over the free orbit all isotropy groups are trivial: m = [u2 u3 = u1].
  const DRP& w = cs[2].drp;
  DRP w2 = translate_drp(inst, w, 1);
  EXPECT_EQ(incidence_number(inst, w, w, w), 0);
  EXPECT_EQ(incidence_number(inst, w2, w, w), 1);
  EXPECT_EQ(incidence_number(inst, triv, w, w), 0);
}

TEST(Mackey, IncidenceIsGaugeInvariant) {
  auto inst = make_semidirect(presets::d4_inner_klein());
  auto cs = classify_semidirect(inst);
  const auto& big = cs.back().drp;
  std::vector<cplx> b{1.0, std::polar(1.0, 0.4), std::polar(1.0, -2.2), std::polar(1.0, 1.3)};
  std::vector<cplx> bc;
  for (auto z : b) bc.push_back(std::conj(z));
  DRP g = big;
  g.V = gauge(big.V, b);
  g.v = gauge(big.v, bc);
  for (const auto& c : cs) {
    EXPECT_EQ(incidence_number(inst, big, c.drp, big), incidence_number(inst, g, c.drp, g));
    EXPECT_EQ(incidence_number(inst, c.drp, big, big), incidence_number(inst, c.drp, g, g));
  }
}

TEST(Mackey, FusionMatchesOracleOnS3) {
  auto inst = make_semidirect(presets::z3_inversion());
  auto cs = classify_semidirect(inst);
  SemidirectFusion fuse(inst, cs);
  EXPECT_EQ(fuse(2, 2, 2), 1);
  for (const auto& a : cs)
    for (const auto& b : cs) {
      EXPECT_EQ(fuse(a.id, 0, b.id), a.id == b.id ? 1 : 0);
      for (const auto& c : cs) EXPECT_EQ(fuse(a.id, b.id, c.id), fusion_oracle(a.chi, b.chi, c.chi));
    }
}

TEST(Mackey, FusionMatchesOracleOnNontrivialCocycle) {
  auto inst = make_semidirect(presets::d4_inner_klein());
  auto cs = classify_semidirect(inst);
  SemidirectFusion fuse(inst, cs);
  for (const auto& a : cs)
    for (const auto& b : cs)
      for (const auto& c : cs) ASSERT_EQ(fuse(a.id, b.id, c.id), fusion_oracle(a.chi, b.chi, c.chi));
}

TEST(Mackey, InnerAutomorphismsFixIrreducibleClasses) {
  for (const auto& g : {symmetric_group(3), dihedral_group(4), symmetric_group(4)}) {
    auto irrs = irreps(g);
    for (std::size_t r = 0; r < g->order(); ++r)
      for (const auto& c : irrs)
        EXPECT_EQ(find_class(irrs, pullback(c.rep, inner_aut(*g, static_cast<int>(r))).character()), c.id);
  }
}

TEST(Mackey, FusionTableAuditsOnCorpus) {
  auto inst = make_semidirect(presets::a4_as_klein_by_z3());
  auto cs = classify_semidirect(inst);
  SemidirectFusion fuse(inst, cs);
  std::vector<int> dims, conj;
  for (const auto& c : cs) {
    dims.push_back(c.dim);
    conj.push_back(find_semidirect_class(cs, char_conj(c.chi)));
  }
  // N_{xy}^z = dim Mor(z, x (x) y).
  auto t = FusionTable::build(dims, conj, 0, [&](int x, int y, int z) { return fuse(z, x, y); });
  auto audit = audit_fusion(t);
  EXPECT_TRUE(audit.ok());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bqg/bicrossed.hpp"
#include "bqg/presets.hpp"
#include "bqg/quantum_algebra.hpp"

using namespace bqg;

namespace {

int s3(const char* name) { return *presets::s3_twist().gamma.group()->find(name); }

const BicrossedTheory<FiniteGamma>& s3_theory() {
  static const auto t = classify_bicrossed(presets::s3_twist());
  return t;
}

Mat random_block(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matched pairs

TEST(MatchedPair, TwistFlags) {
  auto mp = presets::s3_twist();
  EXPECT_FALSE(mp.alpha_trivial);
  EXPECT_FALSE(mp.beta_trivial);
  EXPECT_EQ(mp.k->order(), 6u);
  EXPECT_FALSE(mp.k->is_abelian());

  FiniteGamma z4(cyclic_group(4));
  auto triv = matched_pair_from_twist(z4, cyclic_group(3), twist_from_action(trivial_action(z4.group(), cyclic_group(3))),
                                      generate_finite_subgroup(z4, {2}));
  EXPECT_TRUE(triv.alpha_trivial);
  EXPECT_TRUE(triv.beta_trivial);
}

TEST(MatchedPair, TwistRejectsBadInput) {
  auto a = presets::s3_sign_inversion();
  FiniteGamma gm(a.acting);
  EXPECT_THROW(matched_pair_from_twist(gm, a.target, twist_from_action(a), {0, s3("(12)"), s3("(13)")}), InvalidArgument);
  FreeProductGroup fp({2, 3}, {"s", "t"});
  auto z3 = cyclic_group(3);
  EXPECT_THROW(twist_from_generators(fp, z3, {identity_aut(3), AutTable{0, 2, 1}}), InvalidArgument);
  EXPECT_THROW(twist_from_generators(fp, z3, {AutTable{0, 0, 1}, identity_aut(3)}), InvalidArgument);
}

TEST(MatchedPair, VerifyFiniteAndMutated) {
  auto mp = presets::s3_twist();
  auto rep = verify_matched_pair(mp);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
  EXPECT_GT(rep.checked, 0u);

  auto bad = mp;
  auto beta = mp.beta;
  bad.beta = [beta](const int& x, int k) { return k == 3 && x == 5 ? 5 : beta(x, k); };
  EXPECT_FALSE(verify_matched_pair(bad).ok());
}

TEST(MatchedPair, VerifyFreeProductOnBall) {
  auto mp = presets::psl2z_twist();
  EXPECT_FALSE(mp.alpha_trivial);
  EXPECT_FALSE(mp.beta_trivial);
  EXPECT_EQ(mp.k->order(), 18u);
  auto rep = verify_matched_pair(mp, 4);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
  for (const auto& w : mp.gamma.ball(5)) EXPECT_LE(beta_orbit(mp, w).size(), 2u);
}

// ---------------------------------------------------------------------------
// Orbits

TEST(BetaOrbit, IdentityAndTransposition) {
  auto mp = presets::s3_twist();
  auto e = beta_orbit(mp, 0);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.isotropy.size(), 6u);

  auto o = beta_orbit(mp, s3("(13)"));
  std::set<int> pts(o.elements.begin(), o.elements.end());
  EXPECT_EQ(pts, (std::set<int>{s3("(13)"), s3("(23)")}));
  EXPECT_EQ(o.isotropy.size(), 3u);  // G x| {e}
  EXPECT_EQ(o.sections[0], mp.k->identity());
  for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(mp.beta(o.base(), o.sections[i]), o.elements[i]);
}

TEST(BetaOrbit, InverseOrbit) {
  auto mp = presets::s3_twist();
  const auto& g = *mp.gamma.group();
  for (int x = 0; x < 6; ++x) {
    auto o = beta_orbit(mp, x);
    auto oi = beta_orbit(mp, g.inv(x));
    std::set<int> inv;
    for (int y : o.elements) inv.insert(g.inv(y));
    EXPECT_EQ(inv, std::set<int>(oi.elements.begin(), oi.elements.end()));
  }
}

// ---------------------------------------------------------------------------
// Classification

TEST(Bicrossed, S3TwistClassification) {
  const auto& t = s3_theory();
  ASSERT_EQ(t.size(), 12u);
  ASSERT_EQ(t.orbits().size(), 4u);
  long long total = 0;
  std::multiset<int> dims;
  for (const auto& c : t.classes()) {
    total += c.dim * c.dim;
    dims.insert(c.dim);
  }
  EXPECT_EQ(total, 36);
  EXPECT_EQ(dims, (std::multiset<int>{1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2}));
  for (std::size_t o = 0; o < t.orbits().size(); ++o) {
    std::vector<int> d;
    for (const auto& c : t.classes())
      if (c.orbit == static_cast<int>(o)) d.push_back(c.dim);
    if (t.orbits()[o].size() == 1)
      EXPECT_EQ(d, (std::vector<int>{1, 1, 2}));
    else
      EXPECT_EQ(d, (std::vector<int>{2, 2, 2}));
  }
  EXPECT_GE(t.unit(), 0);
  EXPECT_EQ(t.cls(t.unit()).dim, 1);
}

TEST(Bicrossed, TrivialTwistIsProductTheory) {
  FiniteGamma s3g(symmetric_group(3));
  auto z3 = cyclic_group(3);
  auto mp = matched_pair_from_twist(s3g, z3, twist_from_action(trivial_action(s3g.group(), z3)), {0});
  auto t = classify_bicrossed(mp);
  EXPECT_EQ(t.size(), 18u);
  for (const auto& c : t.classes()) EXPECT_EQ(c.dim, 1);
  EXPECT_TRUE(audit_fusion(t.fusion_table()).ok());
}

TEST(Bicrossed, ORepresentationIsInduced) {
  const auto& t = s3_theory();
  for (const auto& c : t.classes()) {
    UnitaryRep u = t.o_representation(c.id);
    EXPECT_LT(u.residual(), 1e-9);
    const auto& th = t.isotropy(c.orbit);
    UnitaryRep ind = induce(th.in_k, th.classes[c.isotype].realized);
    EXPECT_TRUE(char_equal(u.character(), ind.character()));
  }
}

TEST(Bicrossed, SectionIndependence) {
  const auto& t = s3_theory();
  auto alt = classify_bicrossed(presets::s3_twist(), kDefaultSeed, SectionChoice::greatest);
  ASSERT_EQ(alt.size(), t.size());
  bool moved = false;
  for (const auto& c : t.classes()) {
    const auto& o = t.orbit_of(c.id);
    const auto& o2 = alt.orbit_of(c.id);
    moved = moved || o.sections != o2.sections;
    EXPECT_TRUE(char_equal(t.o_representation(c.id).character(), alt.o_representation(c.id).character()));
    for (std::size_t i = 0; i < o.size(); ++i) {
      const auto& iso = t.isotropy_embedding(o.elements[i]);
      EXPECT_TRUE(char_equal(t.isotype_at(c.id, static_cast<int>(i), iso).character(),
                             alt.isotype_at(c.id, static_cast<int>(i), iso).character()));
    }
  }
  EXPECT_TRUE(moved);
}

TEST(Bicrossed, Conjugation) {
  const auto& t = s3_theory();
  for (const auto& c : t.classes()) {
    int cc = t.conjugate(c.id);
    EXPECT_EQ(t.conjugate(cc), c.id);
    EXPECT_EQ(t.cls(cc).dim, c.dim);
    const auto& o = t.orbit_of(c.id);
    if (o.base() == t.pair().gamma.identity()) {
      Character chi = t.o_representation(c.id).character();
      EXPECT_TRUE(char_equal(t.o_representation(cc).character(), char_conj(chi)));
    }
    if (o.index(s3("(13)")) >= 0) {
      EXPECT_EQ(t.cls(cc).orbit, c.orbit);
    }
  }
}

TEST(Bicrossed, FusionUnitAndSupport) {
  const auto& t = s3_theory();
  for (const auto& a : t.classes())
    for (const auto& b : t.classes()) EXPECT_EQ(t.fusion(a.id, t.unit(), b.id), a.id == b.id ? 1 : 0);
  int orbit13 = t.find_orbit(s3("(13)"));
  int x = -1;
  for (const auto& c : t.classes())
    if (c.orbit == orbit13 && x < 0) x = c.id;
  ASSERT_GE(x, 0);
  std::set<int> allowed{t.find_orbit(0), t.find_orbit(s3("(123)"))};
  long long weighted = 0;
  for (const auto& c : t.classes()) {
    long long m = t.fusion(x, x, c.id);
    if (m) {
      EXPECT_TRUE(allowed.count(c.orbit));
    }
    weighted += m * c.dim;
  }
  EXPECT_EQ(weighted, 4);
}

TEST(Bicrossed, FusionRingAudit) {
  const auto& t = s3_theory();
  auto table = t.fusion_table();
  auto a = audit_fusion(table);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(a.frobenius.empty());
}

TEST(Bicrossed, EnumerableBall) {
  auto t = classify_bicrossed_ball(presets::psl2z_twist(), 2);
  const auto& fp = t.pair().gamma;
  std::set<Word> in_ball;
  for (const auto& o : t.orbits()) {
    bool meets = false;
    for (const auto& w : o.elements) meets = meets || fp.word_length(w) < 2;
    EXPECT_TRUE(meets);
    for (const auto& w : o.elements) in_ball.insert(w);
  }
  for (const auto& w : fp.ball(2)) EXPECT_TRUE(in_ball.count(w));
  for (const auto& c : t.classes()) EXPECT_EQ(t.conjugate(t.conjugate(c.id)), c.id);
  ASSERT_GE(t.unit(), 0);
  for (const auto& a : t.classes())
    for (const auto& b : t.classes()) EXPECT_EQ(t.fusion(a.id, t.unit(), b.id), a.id == b.id ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Crossed-product algebra and oracles

TEST(QuantumAlgebra, StructureAudit) {
  for (const auto& mp : {presets::s3_twist(), presets::s3_a3_twist()}) {
    CrossedProductAlgebra alg(mp);
    auto a = alg.audit();
    EXPECT_LT(a.max(), 1e-9) << a.unitary << " " << a.function_hom << " " << a.regular_hom << " "
                             << a.coproduct_generators << " " << a.coproduct_hom << " " << a.haar;
  }
}

TEST(QuantumAlgebra, CorepresentationsAndHaarOracle) {
  const auto& t = s3_theory();
  CrossedProductAlgebra alg(t.pair());
  auto w = bicrossed_coreps(alg, t);
  std::vector<Vec> chi;
  for (const auto& c : w) {
    EXPECT_LT(corep_residual(alg, c), 1e-9);
    chi.push_back(corep_character(alg, c));
    EXPECT_EQ(haar_fusion(alg, chi.back(), alg.one(), chi.back()), 1);
  }
  for (std::size_t x = 0; x < w.size(); ++x)
    EXPECT_LT((chi[t.conjugate(static_cast<int>(x))] - alg.star(chi[x])).norm(), 1e-9);
  auto table = t.fusion_table();
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      for (std::size_t c = 0; c < w.size(); ++c)
        EXPECT_EQ(table(a, b, c), haar_fusion(alg, chi[a], chi[b], chi[c])) << a << " " << b << " " << c;
}

TEST(QuantumAlgebra, SecondInstanceAgreesWithOracle) {
  auto t = classify_bicrossed(presets::s3_a3_twist());
  CrossedProductAlgebra alg(t.pair());
  auto w = bicrossed_coreps(alg, t);
  std::vector<Vec> chi;
  for (const auto& c : w) chi.push_back(corep_character(alg, c));
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      for (std::size_t c = 0; c < w.size(); ++c)
        ASSERT_EQ(t.fusion(a, b, c), haar_fusion(alg, chi[a], chi[b], chi[c])) << a << " " << b << " " << c;
}

TEST(Fourier, ProjectionsAndBounds) {
  const auto& t = s3_theory();
  CrossedProductAlgebra alg(t.pair());
  auto w = bicrossed_coreps(alg, t);
  auto pe = dual_projection(w, t.unit());
  EXPECT_LT((fourier(alg, w, pe) - alg.one()).norm(), 1e-12);
  EXPECT_NEAR(fourier_norm(alg, w, pe), 1.0, 1e-12);
  EXPECT_NEAR(sobolev_norm(w, pe), 1.0, 1e-12);
  for (const auto& c : t.classes()) EXPECT_NEAR(std::pow(sobolev_norm(w, dual_projection(w, c.id)), 2), c.dim * c.dim, 1e-9);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DualElement a;
    double bound = 0;
    for (const auto& c : t.classes())
      if (rng() % 2) {
        a[c.id] = random_block(c.dim, rng);
        bound += c.dim * c.dim;
      }
    if (a.empty()) continue;
    EXPECT_LE(fourier_norm(alg, w, a), sobolev_norm(w, a) * std::sqrt(bound) + 1e-9);
  }
  DualElement bad{{99, Mat::Identity(1, 1)}};
  EXPECT_THROW(fourier(alg, w, bad), InvalidArgument);
}

TEST(Fourier, Injective) {
  const auto& t = s3_theory();
  CrossedProductAlgebra alg(t.pair());
  auto w = bicrossed_coreps(alg, t);
  Mat f(alg.dim(), 0);
  for (const auto& c : t.classes())
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) {
        Mat m = Mat::Zero(c.dim, c.dim);
        m(i, j) = 1.0;
        f.conservativeResize(Eigen::NoChange, f.cols() + 1);
        f.col(f.cols() - 1) = fourier(alg, w, {{c.id, m}});
      }
  EXPECT_EQ(f.cols(), alg.dim());
  Eigen::JacobiSVD<Mat> svd(f);
  EXPECT_GT(svd.singularValues().minCoeff(), 1e-6);
}

TEST(Fourier, AutomorphismPushforward) {
  const auto& t = s3_theory();
  CrossedProductAlgebra alg(t.pair());
  auto w = bicrossed_coreps(alg, t);
  auto auts = pair_automorphisms(alg);
  EXPECT_GE(auts.size(), 2u);
  auto inner = inner_pair_automorphism(t.pair(), 1);
  EXPECT_TRUE(compatible(alg, inner.on_gamma, inner.on_k));
  std::mt19937_64 rng(11);
  for (const auto& th : auts) {
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        Vec ei = alg.basis(i / alg.k_order(), i % alg.k_order()), ej = alg.basis(j / alg.k_order(), j % alg.k_order());
        ASSERT_LT((th.apply(alg, alg.mul(ei, ej)) - alg.mul(th.apply(alg, ei), th.apply(alg, ej))).norm(), 1e-12);
      }
    auto push = dual_pushforward(alg, w, th);
    DualElement a;
    for (const auto& c : t.classes()) a[c.id] = random_block(c.dim, rng);
    DualElement b = push(a);
    EXPECT_LT((alg.regular(fourier(alg, w, b)) - alg.regular(th.apply(alg, fourier(alg, w, a)))).norm(), 1e-8);
    EXPECT_NEAR(sobolev_norm(w, b), sobolev_norm(w, a), 1e-10);
  }
}

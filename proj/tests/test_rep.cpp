#include <gtest/gtest.h>

#include "bqg/rep.hpp"

using namespace bqg;

namespace {

std::vector<int> dims(const std::vector<IrrClass>& irrs) {
  std::vector<int> d;
  for (const auto& c : irrs) d.push_back(c.dim);
  return d;
}

}  // namespace

TEST(Rep, CyclicCharacters) {
  auto z3 = cyclic_group(3);
  auto irrs = irreps(z3);
  ASSERT_EQ(irrs.size(), 3u);
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::vector<cplx> vals;
  for (const auto& c : irrs) {
    EXPECT_EQ(c.dim, 1);
    vals.push_back(c.chi[1]);
    EXPECT_NEAR(std::abs(c.chi[2] - c.chi[1] * c.chi[1]), 0.0, 1e-12);
  }
  EXPECT_NEAR(std::abs(vals[0] - 1.0), 0.0, 1e-12);
  int hits = 0;
  for (const auto& v : vals) hits += (std::abs(v - w) < 1e-9) + (std::abs(v - w * w) < 1e-9);
  EXPECT_EQ(hits, 2);
}

TEST(Rep, KleinFourAndS3Dims) {
  EXPECT_EQ(dims(irreps(direct_sum({cyclic_group(2), cyclic_group(2)}))), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(dims(irreps(symmetric_group(3))), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(dims(irreps(symmetric_group(4))), (std::vector<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(dims(irreps(dihedral_group(4))), (std::vector<int>{1, 1, 1, 1, 2}));
}

TEST(Rep, IrrepsAreUnitaryHomomorphismsAndOrthogonal) {
  for (const auto& g : {symmetric_group(3), symmetric_group(4), dihedral_group(5), cyclic_group(6)}) {
    auto irrs = irreps(g);
    std::size_t total = 0;
    for (const auto& c : irrs) {
      EXPECT_LT(c.rep.residual(), 1e-9) << g->label();
      total += c.dim * c.dim;
    }
    EXPECT_EQ(total, g->order());
    for (const auto& a : irrs)
      for (const auto& b : irrs) {
        cplx ip = char_inner(a.chi, b.chi);
        EXPECT_NEAR(std::abs(ip - (a.id == b.id ? 1.0 : 0.0)), 0.0, 1e-8);
      }
    // Column orthogonality: sum_x chi_x(g) conj(chi_x(h)) = |C(g)| [g ~ h].
    for (std::size_t x = 0; x < g->order(); ++x)
      for (std::size_t y = 0; y < g->order(); ++y) {
        cplx s = 0;
        for (const auto& c : irrs) s += c.chi[x] * std::conj(c.chi[y]);
        bool conj_class = false;
        for (std::size_t r = 0; r < g->order(); ++r) conj_class = conj_class || g->conj(r, x) == static_cast<int>(y);
        double expect = conj_class ? static_cast<double>(centralizer(*g, x).size()) : 0.0;
        EXPECT_NEAR(std::abs(s - expect), 0.0, 1e-8);
      }
  }
}

TEST(Rep, IrrepsIndependentOfSeedUpToCharacter) {
  auto g = symmetric_group(4);
  auto a = irreps(g, 1), b = irreps(g, 99);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(char_equal(a[i].chi, b[i].chi));
}

TEST(Rep, MorDimAndTensor) {
  auto s3 = symmetric_group(3);
  auto irrs = irreps(s3);
  const auto& two = irrs[2].rep;
  EXPECT_EQ(mor_dim(two, two), 1);
  EXPECT_EQ(mor_dim(two, tensor(two, two)), 1);
  EXPECT_EQ(mor_dim(irrs[0].rep, irrs[1].rep), 0);
  auto dec = decompose(tensor(two, two), irrs);
  EXPECT_EQ(dec, (std::vector<std::pair<int, long long>>{{0, 1}, {1, 1}, {2, 1}}));
  for (const auto& c : irrs) {
    EXPECT_EQ(mor_dim(tensor(irrs[0].rep, c.rep), c.rep), 1);
    EXPECT_TRUE(char_equal(conjugate(conjugate(c.rep)).character(), c.chi));
    EXPECT_TRUE(char_equal(conjugate(c.rep).character(), char_conj(c.chi)));
  }
  auto chi = tensor(irrs[1].rep, two).character();
  EXPECT_TRUE(char_equal(chi, char_product(irrs[1].chi, two.character())));
}

TEST(Rep, RegularRepDecomposition) {
  auto s3 = symmetric_group(3);
  auto irrs = irreps(s3);
  auto dec = decompose(regular_rep(s3), irrs);
  EXPECT_EQ(dec, (std::vector<std::pair<int, long long>>{{0, 1}, {1, 1}, {2, 2}}));
  EXPECT_EQ(decompose(irrs[2].rep, irrs), (std::vector<std::pair<int, long long>>{{2, 1}}));
}

TEST(Rep, Induction) {
  auto s3 = symmetric_group(3);
  auto irrs = irreps(s3);
  auto a3 = embed_subgroup(s3, generated_subgroup(*s3, {3}));
  auto irr_a3 = irreps(a3.sub);
  auto ind = induce(a3, irr_a3[1].rep);
  EXPECT_EQ(ind.dim(), 2);
  EXPECT_LT(ind.residual(), 1e-9);
  EXPECT_TRUE(char_equal(ind.character(), irrs[2].chi));

  auto whole = embed_subgroup(s3, whole_group(*s3));
  EXPECT_TRUE(char_equal(induce(whole, irrs[2].rep).character(), irrs[2].chi));

  auto triv = embed_subgroup(s3, Subgroup{{0}});
  auto reg = induce(triv, trivial_rep(triv.sub));
  EXPECT_EQ(reg.dim(), 6);
  EXPECT_TRUE(char_equal(reg.character(), regular_rep(s3).character()));
}

TEST(Rep, FrobeniusReciprocity) {
  auto g = symmetric_group(4);
  auto irrs = irreps(g);
  for (const auto& gens : std::vector<std::vector<int>>{{1}, {1, 2}, {3}, {6, 7}}) {
    auto h = embed_subgroup(g, generated_subgroup(*g, gens));
    for (const auto& u : irreps(h.sub)) {
      auto ind = induce(h, u.rep);
      for (const auto& w : irrs) EXPECT_EQ(mor_dim(ind, w.rep), mor_dim(u.rep, restrict(w.rep, h)));
    }
  }
}

TEST(Rep, DecomposeRebuildsInput) {
  auto g = dihedral_group(5);
  auto irrs = irreps(g);
  auto w = tensor(irrs[2].rep, irrs[3].rep);
  std::vector<UnitaryRep> parts;
  for (const auto& [id, m] : decompose(w, irrs))
    for (long long i = 0; i < m; ++i) parts.push_back(irrs[id].rep);
  EXPECT_TRUE(char_equal(direct_sum(parts).character(), w.character()));
}

TEST(Rep, IntertwinerBases) {
  auto s3 = symmetric_group(3);
  auto irrs = irreps(s3);
  const auto& two = irrs[2].rep;
  auto w = tensor(two, two);
  auto xs = intertwiners_from_irreducible(two.matrices, w.matrices);
  ASSERT_EQ(xs.size(), 1u);
  for (std::size_t g = 0; g < 6; ++g) EXPECT_LT((w(g) * xs[0] - xs[0] * two(g)).norm(), 1e-10);
  auto ys = intertwiner_basis(two.matrices, direct_sum({two, two}).matrices);
  EXPECT_EQ(ys.size(), 2u);
}

TEST(Rep, SplitIrreducibles) {
  auto g = symmetric_group(3);
  auto parts = split_irreducibles(regular_rep(g), 7);
  EXPECT_EQ(parts.size(), 4u);
  for (const auto& p : parts) EXPECT_NEAR(char_norm2(p.character()), 1.0, 1e-9);
}

#include <gtest/gtest.h>

#include <array>
#include <deque>
#include <map>
#include <set>

#include "bqg/free_product.hpp"
#include "bqg/group.hpp"

using namespace bqg;

namespace {

// Element ids of S3 in lexicographic permutation order.
constexpr int kE = 0, k23 = 1, k12 = 2, k123 = 3, k132 = 4, k13 = 5;

bool isomorphic_by_search(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> map(a.order(), -1), used(b.order(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == a.order()) {
      for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < a.order(); ++y)
          if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      return true;
    }
    for (std::size_t c = 0; c < b.order(); ++c) {
      if (used[c] || a.element_order(static_cast<int>(i)) != b.element_order(static_cast<int>(c))) continue;
      map[i] = static_cast<int>(c);
      used[c] = 1;
      if (rec(i + 1)) return true;
      used[c] = 0;
    }
    map[i] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace

TEST(Group, CyclicBasics) {
  auto z3 = cyclic_group(3);
  EXPECT_EQ(z3->order(), 3u);
  EXPECT_EQ(z3->identity(), 0);
  EXPECT_EQ(z3->audit(), "");
  EXPECT_EQ(z3->mul(2, 2), 1);
  EXPECT_EQ(z3->inv(1), 2);
}

TEST(Group, SymmetricNamesAndAudit) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3->audit(), "");
  EXPECT_EQ(s3->name(kE), "e");
  EXPECT_EQ(s3->name(k23), "(23)");
  EXPECT_EQ(s3->name(k12), "(12)");
  EXPECT_EQ(s3->name(k123), "(123)");
  EXPECT_EQ(s3->name(k132), "(132)");
  EXPECT_EQ(s3->name(k13), "(13)");
  EXPECT_EQ(s3->conj(k12, k123), k132);
  EXPECT_EQ(dihedral_group(4)->audit(), "");
  EXPECT_EQ(direct_sum({cyclic_group(2), symmetric_group(3)})->audit(), "");
}

TEST(Group, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup("bad", {{0, 1}, {1, 1}}), InvalidArgument);
  // Latin square with identity 0 that is not associative.
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup("loop", loop), InvalidArgument);
}

TEST(Group, Centralizer) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(centralizer(*s3, kE).size(), 6u);
  EXPECT_EQ(centralizer(*s3, k12).elements, (std::vector<int>{kE, k12}));
  auto z6 = cyclic_group(6);
  EXPECT_EQ(centralizer(*z6, 4).size(), 6u);
}

TEST(Group, SemidirectProducts) {
  auto z3 = cyclic_group(3), z2 = cyclic_group(2);
  auto inv = extend_action(z2, z3, {{1, {0, 2, 1}}});
  auto s = semidirect_product(inv);
  EXPECT_EQ(s->order(), 6u);
  EXPECT_EQ(s->audit(), "");
  EXPECT_TRUE(isomorphic_by_search(*s, *symmetric_group(3)));

  auto g = symmetric_group(3);
  auto same = semidirect_product(trivial_action(trivial_group(), g));
  EXPECT_TRUE(isomorphic_by_search(*same, *g));

  auto v4 = semidirect_product(trivial_action(z2, z2));
  EXPECT_TRUE(isomorphic_by_search(*v4, *direct_sum({z2, z2})));
  EXPECT_TRUE(v4->is_abelian());

  auto triv = semidirect_product(trivial_action(z3, g));
  EXPECT_TRUE(isomorphic_by_search(*triv, *direct_sum({g, z3})));
}

TEST(Group, ActionValidation) {
  auto z3 = cyclic_group(3), z2 = cyclic_group(2);
  EXPECT_THROW(extend_action(z2, z3, {{1, {0, 1, 1}}}), InvalidArgument);
  // An order-3 image for an order-2 generator is not a homomorphism.
  auto z7 = cyclic_group(7);
  EXPECT_THROW(extend_action(z2, z7, {{1, {0, 2, 4, 6, 1, 3, 5}}}), InvalidArgument);
}

TEST(Group, CyclicShiftEmbedding) {
  auto sh = cyclic_shift_embedding(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(sh.sum->order(), 9u);
  const auto& sw = sh.action.images[sh.generator];
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2) EXPECT_EQ(sw[c1 + 3 * c2], c2 + 3 * c1);
  EXPECT_NE(sw, identity_aut(9));

  auto one = cyclic_shift_embedding(cyclic_group(1), cyclic_group(5));
  EXPECT_TRUE(one.action.is_trivial());

  auto three = cyclic_shift_embedding(cyclic_group(3), cyclic_group(2));
  const auto& t = three.action.images[three.generator];
  EXPECT_EQ(compose(t, compose(t, t)), identity_aut(8));
  EXPECT_NE(t, identity_aut(8));

  EXPECT_THROW(cyclic_shift_embedding(direct_sum({cyclic_group(2), cyclic_group(2)}), cyclic_group(3)),
               InvalidArgument);
}

TEST(Group, OrbitsUnderConjugation) {
  auto s3 = symmetric_group(3);
  auto lam = embed_subgroup(s3, generated_subgroup(*s3, {k12}));
  auto act = [&](int r, int g) { return s3->conj(lam.to_parent[r], g); };
  auto o = orbit(*lam.sub, act, k13);
  EXPECT_EQ(o.points, (std::vector<int>{k23, k13}));
  EXPECT_EQ(o.stabilizer.size(), 1u);
  auto o2 = orbit(*lam.sub, act, k123);
  EXPECT_EQ(o2.points, (std::vector<int>{k123, k132}));
  auto fixed = orbit(*lam.sub, act, kE);
  EXPECT_EQ(fixed.points.size(), 1u);
  EXPECT_EQ(fixed.stabilizer.size(), 2u);
  for (int g = 0; g < 6; ++g) {
    auto og = orbit(*s3, [&](int r, int x) { return s3->conj(r, x); }, g);
    EXPECT_EQ(6u % og.points.size(), 0u);
    EXPECT_EQ(og.points.size() * og.stabilizer.size(), 6u);
  }
}

TEST(Group, Automorphisms) {
  EXPECT_EQ(automorphisms(*cyclic_group(5)).size(), 4u);
  EXPECT_EQ(automorphisms(*symmetric_group(3)).size(), 6u);
  EXPECT_EQ(automorphisms(*direct_sum({cyclic_group(2), cyclic_group(2)})).size(), 6u);
  EXPECT_EQ(automorphisms(*dihedral_group(4)).size(), 8u);
}

TEST(Group, CosetsAndWordLength) {
  auto s3 = symmetric_group(3);
  auto reps = left_coset_reps(*s3, generated_subgroup(*s3, {k12}));
  EXPECT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps.front(), kE);
  auto len = word_length_table(*s3, {k12, k13});
  EXPECT_EQ(len[kE], 0);
  EXPECT_EQ(len[k12], 1);
  EXPECT_EQ(len[k13], 1);
  EXPECT_EQ(len[k123], 2);
  EXPECT_EQ(len[k23], 3);
}

// ---------------------------------------------------------------------------
// Free products

namespace {

// PSL2(Z) as 2x2 integer matrices modulo sign.
using M2 = std::array<long long, 4>;

M2 mul2(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 canon(M2 m) {
  for (long long x : m) {
    if (x > 0) return m;
    if (x < 0) {
      for (auto& y : m) y = -y;
      return m;
    }
  }
  return m;
}

// Breadth-first search over matrices with letters s, t, t^2 of length 1.
std::map<int, std::size_t> psl2z_sphere_sizes(int kmax) {
  const M2 s{0, 1, -1, 0}, t{0, -1, 1, 1};
  const std::vector<M2> letters{s, t, mul2(t, t)};
  std::map<M2, int> dist{{canon({1, 0, 0, 1}), 0}};
  std::deque<M2> todo{canon({1, 0, 0, 1})};
  while (!todo.empty()) {
    M2 m = todo.front();
    todo.pop_front();
    int d = dist[m];
    if (d == kmax) continue;
    for (const auto& l : letters) {
      M2 n = canon(mul2(m, l));
      if (!dist.count(n)) {
        dist[n] = d + 1;
        todo.push_back(n);
      }
    }
  }
  std::map<int, std::size_t> out;
  for (const auto& [m, d] : dist) ++out[d];
  return out;
}

}  // namespace

TEST(FreeProduct, NormalFormArithmetic) {
  FreeProductGroup g({2, 3}, {"s", "t"});
  auto s = g.generator(0), t = g.generator(1);
  EXPECT_EQ(g.mul(s, s), g.identity());
  EXPECT_EQ(g.mul(t, g.mul(t, t)), g.identity());
  auto w = g.parse("s*t^2*s*t");
  EXPECT_EQ(g.name(w), "s*t^2*s*t");
  EXPECT_EQ(g.mul(w, g.inv(w)), g.identity());
  EXPECT_EQ(g.word_length(w), 4);
  EXPECT_EQ(g.name(g.parse("t*t")), "t^2");
  EXPECT_EQ(g.name(g.parse("s*t*t^-1*s")), "e");
  EXPECT_THROW(g.parse("u"), InvalidArgument);
  EXPECT_THROW(FreeProductGroup({2, 1}), InvalidArgument);
}

TEST(FreeProduct, BallCounts) {
  FreeProductGroup g({2, 3}, {"s", "t"});
  EXPECT_TRUE(g.ball(0).empty());
  EXPECT_EQ(g.ball(1).size(), 1u);
  EXPECT_EQ(g.ball(2).size(), 4u);
  EXPECT_EQ(g.ball(3).size(), 8u);
  auto oracle = psl2z_sphere_sizes(10);
  std::size_t cumulative = 0;
  for (int n = 1; n <= 11; ++n) {
    cumulative += oracle[n - 1];
    EXPECT_EQ(g.ball(n).size(), cumulative) << "n=" << n;
  }
}

TEST(FreeProduct, BallIsMonotoneAndLengthAxioms) {
  FreeProductGroup g({2, 3}, {"s", "t"});
  auto b = g.ball(5);
  std::set<Word> prev;
  for (int n = 0; n <= 5; ++n) {
    auto bn = g.ball(n);
    std::set<Word> cur(bn.begin(), bn.end());
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = cur;
  }
  for (const auto& x : b) {
    EXPECT_EQ(g.word_length(x), g.word_length(g.inv(x)));
    for (const auto& y : b) EXPECT_LE(g.word_length(g.mul(x, y)), g.word_length(x) + g.word_length(y));
  }
}

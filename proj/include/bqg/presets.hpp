#pragma once

// Named semidirect actions used by the presets, tests and acceptance suite.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bqg/bicrossed.hpp"
#include "bqg/free_product.hpp"
#include "bqg/group.hpp"

namespace bqg::presets {

/// x -> k x on Z/n generated by one element of Lambda = Z/m.
inline AutAction multiplier_action(int n, int m, int k) {
  auto g = cyclic_group(n);
  AutTable t(n);
  for (int x = 0; x < n; ++x) t[x] = (k * x) % n;
  return extend_action(cyclic_group(m), g, {{1, t}});
}

inline AutAction z3_inversion() { return multiplier_action(3, 2, 2); }
inline AutAction z5_by_z4() { return multiplier_action(5, 4, 2); }
inline AutAction d4_as_z4_by_z2() { return multiplier_action(4, 2, 3); }
inline AutAction z7_by_z3() { return multiplier_action(7, 3, 2); }

inline AutAction z3sq_shift() { return cyclic_shift_embedding(cyclic_group(2), cyclic_group(3)).action; }

/// Z/3 permuting the three involutions of Z/2 + Z/2 (the alternating group A4).
inline AutAction a4_as_klein_by_z3() {
  auto v4 = direct_sum({cyclic_group(2), cyclic_group(2)});
  return extend_action(cyclic_group(3), v4, {{1, {0, 2, 3, 1}}});
}

/// Z/2 acting on S3 by conjugation with (12).
inline AutAction s3_inner_z2() {
  auto s3 = symmetric_group(3);
  return extend_action(cyclic_group(2), s3, {{1, inner_aut(*s3, *s3->find("(12)"))}});
}

/// Z/2 + Z/2 acting on D4 through Inn(D4); the 2-dimensional irreducible
/// carries a linking representation with nontrivial cocycle.
inline AutAction d4_inner_klein() {
  auto d4 = dihedral_group(4);
  auto v4 = direct_sum({cyclic_group(2), cyclic_group(2)});
  return extend_action(v4, d4, {{1, inner_aut(*d4, 1)}, {2, inner_aut(*d4, 4)}});
}

inline std::vector<std::pair<std::string, AutAction>> semidirect_corpus() {
  return {{"Z3xZ2", z3_inversion()},         {"Z5xZ4", z5_by_z4()},           {"Z3^2xZ2-shift", z3sq_shift()},
          {"D4=Z4xZ2", d4_as_z4_by_z2()},    {"Z7xZ3", z7_by_z3()},           {"A4=V4xZ3", a4_as_klein_by_z3()},
          {"S3xZ2-inner", s3_inner_z2()},    {"D4xV4-inner", d4_inner_klein()}};
}

/// S3 acting on Z/3 through the sign: odd permutations invert.
inline AutAction s3_sign_inversion() {
  auto s3 = symmetric_group(3);
  return extend_action(s3, cyclic_group(3), {{*s3->find("(12)"), {0, 2, 1}}, {*s3->find("(123)"), {0, 1, 2}}});
}

/// Gamma = S3, G = Z/3, Lambda = <(12)>; the compact factor is isomorphic to S3.
inline MatchedPair<FiniteGamma> s3_twist() {
  auto a = s3_sign_inversion();
  FiniteGamma gm(a.acting);
  return matched_pair_from_twist(gm, a.target, twist_from_action(a), generate_finite_subgroup(gm, {*a.acting->find("(12)")}));
}

/// Gamma = S3, G = Z/3, Lambda = <(123)>; Lambda acts trivially on G.
inline MatchedPair<FiniteGamma> s3_a3_twist() {
  auto a = s3_sign_inversion();
  FiniteGamma gm(a.acting);
  return matched_pair_from_twist(gm, a.target, twist_from_action(a), generate_finite_subgroup(gm, {*a.acting->find("(123)")}));
}

/// Gamma = Z/2 * Z/3 = <s> * <t>, G = (Z/3)^2 with s swapping the coordinates
/// and t acting trivially, Lambda = <s>.
inline MatchedPair<FreeProductGroup> psl2z_twist() {
  FreeProductGroup fp({2, 3}, {"s", "t"});
  auto sh = cyclic_shift_embedding(cyclic_group(2), cyclic_group(3));
  auto tau = twist_from_generators(fp, sh.sum, {sh.action.images[sh.generator], identity_aut(sh.sum->order())});
  return matched_pair_from_twist(fp, sh.sum, tau, generate_finite_subgroup(fp, {fp.generator(0)}));
}

}  // namespace bqg::presets

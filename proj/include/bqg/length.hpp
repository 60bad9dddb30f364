#pragma once

// Length functions on groups and on duals with exact rational values:
// axiom checks, averaging over finite automorphism groups, the dual length of
// a semidirect product, affording families for the bicrossed product, growth
// profiles, and the weighted length on direct sums of finite groups.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bqg/bicrossed.hpp"
#include "bqg/error.hpp"
#include "bqg/free_product.hpp"
#include "bqg/fusion_table.hpp"
#include "bqg/group.hpp"
#include "bqg/mackey.hpp"
#include "bqg/rep.hpp"

namespace bqg {

inline std::string to_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// floor(r) for r >= 0.
inline long long shell_index(const Rational& r) { return r.numerator() / r.denominator(); }

/// Values indexed by group element ids or by class ids.
using Lengths = std::vector<Rational>;

struct LengthReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// l(e) = 0, l >= 0, l(x) = l(x^-1) and l(xy) <= l(x) + l(y) over `scope`.
template <class GammaT>
LengthReport check_group_length(const GammaT& g, const std::function<Rational(const typename GammaT::Element&)>& l,
                                const std::vector<typename GammaT::Element>& scope) {
  LengthReport r;
  if (l(g.identity()) != Rational(0)) r.violations.push_back("l(e) != 0");
  for (const auto& x : scope) {
    ++r.checked;
    if (l(x) < Rational(0)) r.violations.push_back("negative at " + g.name(x));
    if (l(x) != l(g.inv(x))) r.violations.push_back("l(x) != l(x^-1) at " + g.name(x));
    for (const auto& y : scope) {
      ++r.checked;
      if (l(g.mul(x, y)) > l(x) + l(y)) r.violations.push_back("subadditivity at (" + g.name(x) + "," + g.name(y) + ")");
    }
  }
  return r;
}

inline LengthReport check_group_length(const GroupPtr& g, const Lengths& l) {
  FiniteGamma gm(g);
  return check_group_length<FiniteGamma>(gm, [&](const int& x) { return l.at(x); }, gm.elements());
}

/// l(unit) = 0, l(x) = l(conj x), and l(z) <= l(x) + l(y) whenever z is contained in x (x) y.
inline LengthReport check_dual_length(const FusionTable& t, const Lengths& l) {
  LengthReport r;
  const int n = static_cast<int>(t.size());
  if (l.size() != t.size()) throw InvalidArgument("dual length has the wrong number of values");
  if (l[t.unit] != Rational(0)) r.violations.push_back("l(unit) != 0");
  for (int x = 0; x < n; ++x) {
    ++r.checked;
    if (l[x] < Rational(0)) r.violations.push_back("negative at " + std::to_string(x));
    if (l[x] != l[t.conj[x]]) r.violations.push_back("l(x) != l(conj x) at " + std::to_string(x));
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (t(x, y, z) == 0) continue;
        ++r.checked;
        if (l[z] > l[x] + l[y])
          r.violations.push_back("triangle at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
      }
  }
  return r;
}

/// Word length on a fusion ring: the least n with x contained in a product of
/// n generators; the generating set is closed under conjugation first.
inline Lengths fusion_word_length(const FusionTable& t, std::vector<int> gens) {
  const int n = static_cast<int>(t.size());
  for (int g : std::vector<int>(gens)) gens.push_back(t.conj[g]);
  std::vector<long long> len(n, -1);
  len[t.unit] = 0;
  std::vector<int> frontier{t.unit};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int y : frontier)
      for (int s : gens)
        for (int z = 0; z < n; ++z)
          if (t(y, s, z) > 0 && len[z] < 0) {
            len[z] = len[y] + 1;
            next.push_back(z);
          }
    frontier = std::move(next);
  }
  Lengths out;
  for (long long v : len) {
    if (v < 0) throw InvalidArgument("fusion generators do not generate every class");
    out.emplace_back(v);
  }
  return out;
}

/// Checks that a set of permutations of the carrier is a group.
inline void check_closed(const std::vector<std::vector<int>>& theta) {
  std::set<std::vector<int>> s(theta.begin(), theta.end());
  if (theta.empty()) throw InvalidArgument("theta is empty");
  for (const auto& a : theta)
    for (const auto& b : theta)
      if (!s.count(compose(a, b))) throw InvalidArgument("theta is not closed under composition");
}

/// l_Theta = (1/|Theta|) sum_i l o theta_i over a finite group of permutations.
inline Lengths average_length(const Lengths& l, const std::vector<std::vector<int>>& theta) {
  check_closed(theta);
  Lengths out(l.size(), Rational(0));
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (const auto& th : theta) out[x] += l[th[x]];
    out[x] /= static_cast<long long>(theta.size());
  }
  return out;
}

/// Average of several length functions on the same carrier.
inline Lengths average_length(const std::vector<Lengths>& ls) {
  if (ls.empty()) throw InvalidArgument("nothing to average");
  Lengths out(ls.front().size(), Rational(0));
  for (const auto& l : ls)
    for (std::size_t x = 0; x < l.size(); ++x) out[x] += l[x];
  for (auto& v : out) v /= static_cast<long long>(ls.size());
  return out;
}

/// l o theta as a new length function.
inline Lengths pullback_length(const Lengths& l, const std::vector<int>& theta) {
  Lengths out(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) out[x] = l[theta[x]];
  return out;
}

/// Averages a length on an enumerable group over conjugation by a finite
/// subgroup: l_Lambda(x) = (1/|Lambda|) sum_r l(r^-1 x r).
template <class GammaT>
std::function<Rational(const typename GammaT::Element&)> conjugation_average(
    const GammaT& g, std::function<Rational(const typename GammaT::Element&)> l, std::vector<typename GammaT::Element> lambda) {
  return [g, l, lambda](const typename GammaT::Element& x) {
    Rational s = 0;
    for (const auto& r : lambda) s += l(g.mul(g.mul(g.inv(r), x), r));
    return s / static_cast<long long>(lambda.size());
  };
}

/// The permutation x -> [u^x o a] of Irr(G) induced by an automorphism a.
inline std::vector<int> irr_permutation(const std::vector<IrrClass>& irr, const AutTable& a) {
  std::vector<int> p;
  for (const auto& c : irr) {
    Character moved(c.chi.size());
    for (std::size_t g = 0; g < moved.size(); ++g) moved[g] = c.chi[a[g]];
    p.push_back(find_class(irr, moved));
  }
  return p;
}

/// True iff l is constant on every orbit of the automorphisms acting on Irr(G).
inline bool invariance_check(const std::vector<IrrClass>& irr, const Lengths& l, const std::vector<AutTable>& gens) {
  for (const auto& a : gens) {
    auto p = irr_permutation(irr, a);
    for (std::size_t x = 0; x < l.size(); ++x)
      if (l[p[x]] != l[x]) return false;
  }
  return true;
}

/// l(Psi[(u, V, v)]) = l_G([u]) on Irr(G x| Lambda); l_G must be Lambda-invariant.
inline Lengths dual_length_semidirect(const SemidirectInstance& inst, const std::vector<SemidirectIrrClass>& classes,
                                      const Lengths& l_g) {
  if (!invariance_check(inst.irr_g, l_g, inst.tau.images))
    throw InvalidArgument("dual length on Irr(G) is not Lambda-invariant");
  Lengths out;
  for (const auto& c : classes) {
    for (std::size_t r = 0; r < inst.lambda()->order(); ++r)
      if (l_g[inst.irr_action[r][c.drp.u_class]] != l_g[c.drp.u_class])
        throw AuditError("dual length differs across the Lambda-orbit of a parameter");
    out.push_back(l_g[c.drp.u_class]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Affording families

/// l_O(Psi_gamma[(u, V, v)]) = l_G([u]) + l_Gamma(gamma), one value per class.
struct AffordingFamily {
  Lengths values;
};

template <class GammaT>
const std::vector<IrrClass>& irr_g_of(const BicrossedTheory<GammaT>& t) {
  return t.isotropy(0).inst.irr_g;
}

template <class GammaT>
void require_invariance(const BicrossedTheory<GammaT>& t,
                        const std::function<Rational(const typename GammaT::Element&)>& l_gamma, const Lengths& l_g) {
  for (const auto& o : t.orbits())
    for (const auto& x : o.elements)
      if (l_gamma(x) != l_gamma(o.base())) throw InvalidArgument("l_Gamma is not beta-invariant");
  std::vector<AutTable> gens;
  for (const auto& p : probe_elements(t.pair().gamma)) gens.push_back(t.pair().tau(p));
  if (!invariance_check(irr_g_of(t), l_g, gens)) throw InvalidArgument("l_G is not Gamma-invariant");
}

template <class GammaT>
AffordingFamily build_affording_family(const BicrossedTheory<GammaT>& t,
                                       const std::function<Rational(const typename GammaT::Element&)>& l_gamma,
                                       const Lengths& l_g) {
  require_invariance(t, l_gamma, l_g);
  AffordingFamily f;
  for (const auto& c : t.classes()) f.values.push_back(l_g[c.u_class] + l_gamma(t.orbits()[c.orbit].base()));
  return f;
}

struct AffordingReport {
  std::vector<std::string> unit, conjugation, triangle, trivial_orbit, orbit_constancy;
  std::size_t triples_checked = 0;

  bool ok() const {
    return unit.empty() && conjugation.empty() && triangle.empty() && trivial_orbit.empty() && orbit_constancy.empty();
  }
  std::size_t violation_count() const {
    return unit.size() + conjugation.size() + triangle.size() + trivial_orbit.size() + orbit_constancy.size();
  }
};

/// The five conditions of a matched pair of length functions, with the
/// triangle inequality over every fusion-supported triple of the table.
template <class GammaT>
AffordingReport affording_family_check(const BicrossedTheory<GammaT>& t, const FusionTable& table,
                                       const AffordingFamily& f,
                                       const std::function<Rational(const typename GammaT::Element&)>& l_gamma,
                                       const Lengths& l_g) {
  AffordingReport r;
  const auto& l = f.values;
  const int n = static_cast<int>(t.size());
  if (l.size() != t.size()) throw InvalidArgument("affording family has the wrong number of values");
  if (t.unit() < 0 || l[t.unit()] != Rational(0)) r.unit.push_back("l(unit) != 0");
  for (int x = 0; x < n; ++x) {
    if (l[x] != l[t.conjugate(x)]) r.conjugation.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (table(x, y, z) == 0) continue;
        ++r.triples_checked;
        if (l[z] > l[x] + l[y])
          r.triangle.push_back("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
      }
  }
  const int e_orbit = t.find_orbit(t.pair().gamma.identity());
  if (e_orbit >= 0) {
    const auto& th = t.isotropy(e_orbit);
    Lengths semi = dual_length_semidirect(th.inst, th.classes, l_g);
    for (const auto& c : t.classes())
      if (c.orbit == e_orbit && l[c.id] != semi[c.isotype]) r.trivial_orbit.push_back(std::to_string(c.id));
  }
  for (std::size_t o = 0; o < t.orbits().size(); ++o) {
    int eps = -1;
    const auto& th = t.isotropy(static_cast<int>(o));
    for (const auto& c : t.classes())
      if (c.orbit == static_cast<int>(o) && th.classes[c.isotype].dim == 1) {
        const auto& chi = th.classes[c.isotype].chi;
        if (std::all_of(chi.begin(), chi.end(), [](cplx z) { return std::abs(z - 1.0) < kRoundTol; })) eps = c.id;
      }
    for (const auto& x : t.orbits()[o].elements)
      if (eps < 0 || l[eps] != l_gamma(x)) r.orbit_constancy.push_back(t.pair().gamma.name(x));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Growth

struct GrowthProfile {
  int kmax = 0;
  std::vector<long long> shells;      // k <= l < k + 1, weighted by dim^2 for duals
  std::vector<long long> cumulative;  // l < k + 1
};

/// Shell sums of weights over items with lengths; items beyond kmax are ignored.
inline GrowthProfile growth_profile(const Lengths& l, const std::vector<long long>& weights, int kmax) {
  if (kmax < 0) throw InvalidArgument("kmax must be non-negative");
  GrowthProfile p{kmax, std::vector<long long>(kmax + 1, 0), {}};
  for (std::size_t i = 0; i < l.size(); ++i) {
    long long k = shell_index(l[i]);
    if (k <= kmax) p.shells[k] += weights.empty() ? 1 : weights[i];
  }
  long long run = 0;
  for (long long s : p.shells) p.cumulative.push_back(run += s);
  return p;
}

/// Group shells of the word length on a free product, from ball(kmax + 1).
inline GrowthProfile word_growth(const FreeProductGroup& g, int kmax, std::size_t guard = kOrbitGuard) {
  Lengths l;
  for (const auto& w : g.ball(kmax + 1, guard)) l.emplace_back(g.word_length(w));
  return growth_profile(l, {}, kmax);
}

// ---------------------------------------------------------------------------
// Weighted length on direct sums

/// l(xi) = sum_i chi_i(xi_i) M_i with M_i = N_1 ... N_i on the direct sum of
/// finite groups of orders N_1, N_2, ...; factor i is produced on demand.
class DirectSumLength {
 public:
  explicit DirectSumLength(std::function<int(int)> order_of_factor) : order_(std::move(order_of_factor)) {}

  /// N_i for i >= 1.
  int factor_order(int i) const { return order_(i); }

  /// M_i, with M_0 = 1.
  long long weight(int i) const {
    long long m = 1;
    for (int j = 1; j <= i; ++j) {
      if (m > (1LL << 60) / factor_order(j)) throw InvalidArgument("direct-sum weight overflows");
      m *= factor_order(j);
    }
    return m;
  }

  /// coords[i - 1] is the id of xi_i (0 is the identity).
  long long operator()(const std::vector<int>& coords) const {
    long long s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) s += weight(static_cast<int>(i) + 1);
    return s;
  }

  /// |{xi : l(xi) < n}|, touching only the factors with M_i < n.
  long long count_below(long long n) const {
    if (n <= 0) return 0;
    std::vector<long long> w;
    std::vector<int> choices;
    for (int i = 1;; ++i) {
      long long m = weight(i);
      if (m >= n) break;
      w.push_back(m);
      choices.push_back(factor_order(i) - 1);
    }
    std::function<long long(std::size_t, long long)> rec = [&](std::size_t i, long long used) -> long long {
      if (i == w.size()) return 1;
      long long c = rec(i + 1, used);
      if (used + w[i] < n) c += choices[i] * rec(i + 1, used + w[i]);
      return c;
    };
    return rec(0, 0);
  }

  /// Largest n in [1, nmax] violating |{l < n}| <= n, or 0 if none does.
  long long first_violation(long long nmax) const {
    for (long long n = 1; n <= nmax; ++n)
      if (count_below(n) > n) return n;
    return 0;
  }

 private:
  std::function<int(int)> order_;
};

inline DirectSumLength direct_sum_length(std::vector<int> orders, int tail_order = 0) {
  for (int n : orders)
    if (n < 1) throw InvalidArgument("factor orders must be positive");
  return DirectSumLength([orders, tail_order](int i) {
    if (i >= 1 && static_cast<std::size_t>(i) <= orders.size()) return orders[i - 1];
    if (tail_order > 0) return tail_order;
    throw InvalidArgument("factor " + std::to_string(i) + " is not materialized");
  });
}

}  // namespace bqg

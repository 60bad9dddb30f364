#pragma once

// Matched pairs built by twisting G x| Lambda with a finite subgroup Lambda of
// Gamma, beta-orbits, O-representations, and the irreducible representations of
// the bicrossed product: classification, conjugation and fusion through the
// twisted tensor product.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bqg/error.hpp"
#include "bqg/free_product.hpp"
#include "bqg/fusion_table.hpp"
#include "bqg/group.hpp"
#include "bqg/mackey.hpp"
#include "bqg/rep.hpp"

namespace bqg {

/// Elements whose images determine a homomorphism out of the discrete factor.
inline std::vector<int> probe_elements(const FiniteGamma& g) { return g.elements(); }

inline std::vector<Word> probe_elements(const FreeProductGroup& g) {
  std::vector<Word> out;
  for (int f = 0; f < static_cast<int>(g.factor_count()); ++f) out.push_back(g.generator(f));
  return out;
}

/// Elements on which identities are checked: everything for a finite group,
/// the ball of radius n otherwise.
inline std::vector<int> test_elements(const FiniteGamma& g, int /*n*/) { return g.elements(); }
inline std::vector<Word> test_elements(const FreeProductGroup& g, int n) { return g.ball(n); }

using TwistMap = std::function<AutTable(const int&)>;
using WordTwistMap = std::function<AutTable(const Word&)>;

/// tau on a finite discrete factor, read off an action table.
inline TwistMap twist_from_action(const AutAction& a) {
  std::string bad = a.audit();
  if (!bad.empty()) throw InvalidArgument("tau: " + bad);
  return [a](const int& x) { return a.images[x]; };
}

/// tau on Z/n_1 * ... * Z/n_k from one automorphism per factor generator.
/// Each image must have order dividing the order of its factor.
inline WordTwistMap twist_from_generators(const FreeProductGroup& fp, const GroupPtr& g,
                                          const std::vector<AutTable>& images) {
  if (images.size() != fp.factor_count()) throw InvalidArgument("tau needs one image per free factor");
  std::vector<std::vector<AutTable>> powers(images.size());
  for (std::size_t f = 0; f < images.size(); ++f) {
    if (!is_automorphism(*g, images[f]))
      throw InvalidArgument("tau(" + fp.generator_name(static_cast<int>(f)) + ") is not an automorphism");
    AutTable p = identity_aut(g->order());
    for (int e = 0; e < fp.factor_order(static_cast<int>(f)); ++e) {
      powers[f].push_back(p);
      p = compose(p, images[f]);
    }
    if (p != identity_aut(g->order()))
      throw InvalidArgument("tau(" + fp.generator_name(static_cast<int>(f)) + ") does not respect the factor order");
  }
  const std::size_t n = g->order();
  return [powers, n](const Word& w) {
    AutTable t = identity_aut(n);
    for (const auto& s : w) t = compose(t, powers[s.factor][s.exp]);
    return t;
  };
}

/// Finite subgroup generated by `gens`; throws past `guard` elements.
template <class GammaT>
std::vector<typename GammaT::Element> generate_finite_subgroup(const GammaT& g,
                                                               const std::vector<typename GammaT::Element>& gens,
                                                               std::size_t guard = 10'000) {
  using E = typename GammaT::Element;
  std::set<E> seen{g.identity()};
  std::deque<E> todo{g.identity()};
  while (!todo.empty()) {
    E x = todo.front();
    todo.pop_front();
    for (const E& s : gens) {
      E y = g.mul(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > guard) throw InvalidArgument("generated subgroup is infinite or exceeds the bound");
        todo.push_back(std::move(y));
      }
    }
  }
  std::vector<E> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](const E& a, const E& b) { return g.less(a, b); });
  return out;
}

/// (Gamma, G x| Lambda) with alpha(gamma, (g, r)) = (tau_gamma(g), r) and
/// beta(gamma, (g, r)) = r^-1 gamma r.
template <class GammaT>
struct MatchedPair {
  using E = typename GammaT::Element;

  GammaT gamma;
  GroupPtr g;
  std::vector<E> lambda;  // Lambda id -> element of Gamma
  AutAction tau_lambda;   // Lambda -> Aut(G)
  GroupPtr k;             // G x| Lambda
  std::function<AutTable(const E&)> tau;
  std::function<int(const E&, int)> alpha;
  std::function<E(const E&, int)> beta;
  bool alpha_trivial = false;
  bool beta_trivial = false;

  int order_g() const { return static_cast<int>(g->order()); }
};

template <class GammaT>
MatchedPair<GammaT> matched_pair_from_twist(GammaT gamma, GroupPtr g, std::function<AutTable(const typename GammaT::Element&)> tau,
                                            std::vector<typename GammaT::Element> lambda) {
  using E = typename GammaT::Element;
  auto less = [&](const E& a, const E& b) { return gamma.less(a, b); };
  std::sort(lambda.begin(), lambda.end(), less);
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  std::map<E, int> index;
  for (std::size_t i = 0; i < lambda.size(); ++i) index[lambda[i]] = static_cast<int>(i);
  if (!index.count(gamma.identity())) throw InvalidArgument("lambda is not a subgroup: missing the identity");
  const std::size_t n = lambda.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(gamma.name(lambda[a]));
    if (!index.count(gamma.inv(lambda[a]))) throw InvalidArgument("lambda is not a subgroup: not closed under inverses");
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(gamma.mul(lambda[a], lambda[b]));
      if (it == index.end()) throw InvalidArgument("lambda is not a subgroup: not closed under products");
      table[a][b] = it->second;
    }
  }
  auto lam = std::make_shared<FiniteGroup>("Lambda", table, names, false);

  const auto probes = probe_elements(gamma);
  for (const E& a : probes) {
    if (!is_automorphism(*g, tau(a))) throw InvalidArgument("tau(" + gamma.name(a) + ") is not an automorphism");
    for (const E& b : probes)
      if (tau(gamma.mul(a, b)) != compose(tau(a), tau(b)))
        throw InvalidArgument("tau is not a homomorphism at (" + gamma.name(a) + "," + gamma.name(b) + ")");
  }
  AutAction tl{lam, g, {}};
  for (const E& r : lambda) tl.images.push_back(tau(r));
  if (std::string bad = tl.audit(); !bad.empty()) throw InvalidArgument("tau restricted to lambda: " + bad);

  MatchedPair<GammaT> mp{gamma, g, lambda, tl, semidirect_product(tl), tau, {}, {}, true, true};
  auto cache = std::make_shared<std::map<E, AutTable>>();
  const int ng = mp.order_g();
  mp.alpha = [tau, cache, ng](const E& x, int kk) {
    auto it = cache->find(x);
    if (it == cache->end()) it = cache->emplace(x, tau(x)).first;
    return it->second[kk % ng] + ng * (kk / ng);
  };
  mp.beta = [gm = mp.gamma, lambda, ng](const E& x, int kk) {
    const E& r = lambda[kk / ng];
    return gm.mul(gm.mul(gm.inv(r), x), r);
  };
  for (const E& a : probes) {
    if (tau(a) != identity_aut(g->order())) mp.alpha_trivial = false;
    for (const E& r : lambda)
      if (gamma.mul(a, r) != gamma.mul(r, a)) mp.beta_trivial = false;
  }
  return mp;
}

struct MatchedPairReport {
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // the first few, for display

  bool ok() const { return violation_count == 0; }
};

/// Checks the matched-pair identities and the action laws on all triples
/// drawn from `test_elements(gamma, n)` and the compact factor.
template <class GammaT>
MatchedPairReport verify_matched_pair(const MatchedPair<GammaT>& mp, int n = 4) {
  using E = typename GammaT::Element;
  const auto& gm = mp.gamma;
  const auto& k = *mp.k;
  const auto xs = test_elements(gm, n);
  const int nk = static_cast<int>(k.order());
  MatchedPairReport rep;
  auto fail = [&](const std::string& what) {
    ++rep.violation_count;
    if (rep.violations.size() < 32) rep.violations.push_back(what);
  };
  auto tag = [&](const char* law, const E& a, const E& b, int g, int h) {
    return std::string(law) + " at (" + gm.name(a) + "," + gm.name(b) + "," + k.name(g) + "," + k.name(h) + ")";
  };
  for (const E& a : xs) {
    ++rep.checked;
    if (mp.alpha(a, k.identity()) != k.identity()) fail(tag("alpha(e)", a, a, 0, 0));
    for (int g = 0; g < nk; ++g)
      for (int h = 0; h < nk; ++h) {
        ++rep.checked;
        if (mp.alpha(a, k.mul(g, h)) != k.mul(mp.alpha(a, g), mp.alpha(mp.beta(a, g), h)))
          fail(tag("alpha(gh)", a, a, g, h));
        if (mp.beta(a, k.mul(g, h)) != mp.beta(mp.beta(a, g), h)) fail(tag("beta right action", a, a, g, h));
      }
  }
  for (int g = 0; g < nk; ++g) {
    ++rep.checked;
    if (mp.beta(gm.identity(), g) != gm.identity()) fail(tag("beta(e)", gm.identity(), gm.identity(), g, g));
    for (const E& a : xs)
      for (const E& b : xs) {
        ++rep.checked;
        if (mp.beta(gm.mul(a, b), g) != gm.mul(mp.beta(a, mp.alpha(b, g)), mp.beta(b, g)))
          fail(tag("beta(rs)", a, b, g, g));
        if (mp.alpha(gm.mul(a, b), g) != mp.alpha(a, mp.alpha(b, g))) fail(tag("alpha left action", a, b, g, g));
      }
  }
  return rep;
}

template <class E>
struct BetaOrbit {
  std::vector<E> elements;    // ascending; elements.front() is the base point
  std::vector<int> sections;  // sections[i] moves the base point to elements[i]
  Subgroup isotropy;          // stabilizer of the base point in the compact factor

  const E& base() const { return elements.front(); }
  std::size_t size() const { return elements.size(); }

  int index(const E& x) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == x) return static_cast<int>(i);
    return -1;
  }
};

enum class SectionChoice { least, greatest };

/// Orbit of gamma under beta, based at its least element, with sections the
/// least (or greatest) element of G_{base, mu} and sigma_base = e.
template <class GammaT>
BetaOrbit<typename GammaT::Element> beta_orbit(const MatchedPair<GammaT>& mp, const typename GammaT::Element& x,
                                               SectionChoice choice = SectionChoice::least) {
  using E = typename GammaT::Element;
  const auto& k = *mp.k;
  auto less = [&](const E& a, const E& b) { return mp.gamma.less(a, b); };
  auto orb = orbit(k, [&](int h, const E& p) { return mp.beta(p, h); }, x, kOrbitGuard, less);
  BetaOrbit<E> out;
  out.elements = std::move(orb.points);
  out.sections.assign(out.elements.size(), -1);
  const int nk = static_cast<int>(k.order());
  for (int step = 0; step < nk; ++step) {
    int h = choice == SectionChoice::least ? step : nk - 1 - step;
    E y = mp.beta(out.base(), h);
    int i = out.index(y);
    if (i == 0) out.isotropy.elements.push_back(h);
    if (out.sections[i] < 0) out.sections[i] = h;
  }
  out.sections[0] = k.identity();
  std::sort(out.isotropy.elements.begin(), out.isotropy.elements.end());
  return out;
}

/// Stabilizer {k : beta_k(x) = x} in the compact factor.
template <class GammaT>
Subgroup isotropy_subgroup(const MatchedPair<GammaT>& mp, const typename GammaT::Element& x) {
  Subgroup s;
  for (int h = 0; h < static_cast<int>(mp.k->order()); ++h)
    if (mp.beta(x, h) == x) s.elements.push_back(h);
  return s;
}

/// Irr(G x| Lambda_gamma) via the semidirect machinery, together with the
/// identification of G x| Lambda_gamma with the isotropy group in G x| Lambda.
struct IsotropyTheory {
  Embedding lambda_gamma;  // Lambda_gamma in Lambda
  SemidirectInstance inst;
  std::vector<SemidirectIrrClass> classes;
  Embedding in_k;  // inst.product -> G x| Lambda
};

inline std::shared_ptr<const IsotropyTheory> make_isotropy_theory(const AutAction& tau_lambda, const GroupPtr& k,
                                                                  const Subgroup& lambda_gamma, std::uint64_t seed) {
  Embedding lg = embed_subgroup(tau_lambda.acting, lambda_gamma, "Lambda_gamma");
  SemidirectInstance inst = make_semidirect(tau_lambda.restrict_to(lg), seed);
  auto classes = classify_semidirect(inst, seed);
  const int ng = static_cast<int>(tau_lambda.target->order());
  std::vector<int> images;
  for (std::size_t a = 0; a < inst.product->order(); ++a)
    images.push_back(static_cast<int>(a) % ng + ng * lg.to_parent[static_cast<int>(a) / ng]);
  Embedding in_k = embedding_from_hom(inst.product, k, std::move(images));
  return std::make_shared<const IsotropyTheory>(IsotropyTheory{std::move(lg), std::move(inst), std::move(classes), std::move(in_k)});
}

struct BicrossedIrrClass {
  int id;
  int orbit;    // index into BicrossedTheory::orbits()
  int isotype;  // class of G x| Lambda_gamma at the orbit base
  int u_class;  // class in Irr(G) of the isotype's parameter u
  int dim;      // |orbit| * dim(isotype)
};

/// Irreducible representations of Gamma |><| (G x| Lambda) over the beta-orbits
/// meeting a seed set, one class per (orbit, Irr(G x| Lambda_gamma)).
template <class GammaT>
class BicrossedTheory {
 public:
  using E = typename GammaT::Element;

  BicrossedTheory(MatchedPair<GammaT> mp, const std::vector<E>& seeds, std::uint64_t seed = kDefaultSeed,
                  SectionChoice sections = SectionChoice::least)
      : mp_(std::move(mp)) {
    auto less = [this](const E& a, const E& b) { return mp_.gamma.less(a, b); };
    std::map<std::vector<int>, std::shared_ptr<const IsotropyTheory>> memo;
    std::vector<BetaOrbit<E>> found;
    std::set<E> covered;
    for (const E& x : seeds) {
      if (covered.count(x)) continue;
      auto o = beta_orbit(mp_, x, sections);
      covered.insert(o.elements.begin(), o.elements.end());
      found.push_back(std::move(o));
    }
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return less(a.base(), b.base()); });
    const int ng = mp_.order_g();
    for (auto& o : found) {
      Subgroup lg;
      for (int h : o.isotropy.elements)
        if (h % ng == 0) lg.elements.push_back(h / ng);
      auto& th = memo[lg.elements];
      if (!th) th = make_isotropy_theory(mp_.tau_lambda, mp_.k, lg, seed);
      const int oi = static_cast<int>(orbits_.size());
      for (std::size_t i = 0; i < o.elements.size(); ++i) orbit_of_[o.elements[i]] = oi;
      long long total = 0;
      for (const auto& c : th->classes) {
        int d = static_cast<int>(o.size()) * c.dim;
        total += static_cast<long long>(d) * d;
        classes_.push_back(BicrossedIrrClass{static_cast<int>(classes_.size()), oi, c.id, c.drp.u_class, d});
      }
      const long long want = static_cast<long long>(o.size()) * static_cast<long long>(o.size()) *
                             static_cast<long long>(o.isotropy.size());
      if (total != want)
        throw AuditError("orbit of " + mp_.gamma.name(o.base()) + " is incomplete: " + std::to_string(total) +
                         " != " + std::to_string(want));
      orbits_.push_back(std::move(o));
      local_.push_back(th);
    }
    unit_ = -1;
    if (auto it = orbit_of_.find(mp_.gamma.identity()); it != orbit_of_.end())
      for (const auto& c : classes_)
        if (c.orbit == it->second && c.dim == 1) {
          const auto& chi = local_[c.orbit]->classes[c.isotype].chi;
          if (std::all_of(chi.begin(), chi.end(), [](cplx z) { return std::abs(z - 1.0) < kRoundTol; })) unit_ = c.id;
        }
  }

  const MatchedPair<GammaT>& pair() const { return mp_; }
  const std::vector<BetaOrbit<E>>& orbits() const { return orbits_; }
  const std::vector<BicrossedIrrClass>& classes() const { return classes_; }
  const BicrossedIrrClass& cls(int x) const { return classes_.at(x); }
  const BetaOrbit<E>& orbit_of(int x) const { return orbits_[classes_.at(x).orbit]; }
  const IsotropyTheory& isotropy(int orbit) const { return *local_.at(orbit); }
  std::size_t size() const { return classes_.size(); }
  int unit() const { return unit_; }

  /// Orbit index containing x, or -1 when x lies outside the classified range.
  int find_orbit(const E& x) const {
    auto it = orbit_of_.find(x);
    return it == orbit_of_.end() ? -1 : it->second;
  }

  int find_class(int orbit, int isotype) const {
    for (const auto& c : classes_)
      if (c.orbit == orbit && c.isotype == isotype) return c.id;
    throw AuditError("no bicrossed class for the requested isotype");
  }

  /// Dimension of the isotype u of x on the base point's isotropy group.
  int isotype_dim(int x) const { return local_[classes_[x].orbit]->classes[classes_[x].isotype].dim; }

  /// u(k) for k in the isotropy group of the base point (ids of the compact factor).
  const Mat& isotype_matrix(int x, int k) const {
    const auto& th = *local_[classes_[x].orbit];
    int a = th.in_k.to_sub[k];
    if (a < 0) throw InvalidArgument("element outside the isotropy group");
    return th.classes[classes_[x].isotype].realized(a);
  }

  /// Block u_{r,s}(k) = u(sigma_r k sigma_s^-1) if beta_k(r) = s, else 0,
  /// where r, s are the i-th and j-th orbit points.
  Mat o_block(int x, int i, int j, int k, const std::vector<int>* sections = nullptr) const {
    const auto& o = orbit_of(x);
    const auto& sec = sections ? *sections : o.sections;
    const int d = isotype_dim(x);
    if (mp_.beta(o.elements[i], k) != o.elements[j]) return Mat::Zero(d, d);
    const auto& kk = *mp_.k;
    return isotype_matrix(x, kk.mul(kk.mul(sec[i], k), kk.inv(sec[j])));
  }

  /// The O-representation sum_{r,s} e_{r,s} (x) u_{r,s} as a representation of
  /// the compact factor.
  UnitaryRep o_representation(int x, const std::vector<int>* sections = nullptr) const {
    const auto& o = orbit_of(x);
    const int d = isotype_dim(x);
    const int n = static_cast<int>(o.size());
    UnitaryRep out{mp_.k, {}};
    for (int k = 0; k < static_cast<int>(mp_.k->order()); ++k) {
      Mat m = Mat::Zero(n * d, n * d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.block(i * d, j * d, d, d) = o_block(x, i, j, k, sections);
      out.matrices.push_back(std::move(m));
    }
    return out;
  }

  /// u_{mu,mu} restricted to the isotropy group of mu, on its embedding.
  UnitaryRep isotype_at(int x, int i, const Embedding& iso, const std::vector<int>* sections = nullptr) const {
    UnitaryRep out{iso.sub, {}};
    for (int k : iso.to_parent) out.matrices.push_back(o_block(x, i, i, k, sections));
    return out;
  }

  const Embedding& isotropy_embedding(const E& x) const {
    auto it = iso_cache_.find(x);
    if (it == iso_cache_.end()) it = iso_cache_.emplace(x, embed_subgroup(mp_.k, isotropy_subgroup(mp_, x))).first;
    return it->second;
  }

  /// The class of U^dagger: over the inverse orbit with isotype
  /// conj(u) o alpha_{gamma^-1} on G_{gamma^-1}, moved to the inverse orbit's base.
  int conjugate(int x) const {
    const auto& o = orbit_of(x);
    const auto& gm = mp_.gamma;
    const auto& kk = *mp_.k;
    E ginv = gm.inv(o.base());
    int oi = find_orbit(ginv);
    if (oi < 0) throw InvalidArgument("inverse orbit lies outside the classified range");
    const auto& o2 = orbits_[oi];
    int t = -1;
    for (int h = 0; h < static_cast<int>(kk.order()) && t < 0; ++h)
      if (mp_.beta(ginv, h) == o2.base()) t = h;
    const auto& th2 = *local_[oi];
    Character chi(th2.in_k.to_parent.size());
    for (std::size_t a = 0; a < chi.size(); ++a) {
      int h = kk.mul(kk.mul(t, th2.in_k.to_parent[a]), kk.inv(t));
      chi[a] = std::conj(isotype_matrix(x, mp_.alpha(ginv, h)).trace());
    }
    return find_class(oi, find_semidirect_class(th2.classes, chi));
  }

  /// U1 x_gamma U2 on span{delta_{g1} (x) delta_{g2} : g1 g2 = gamma} (x) H1 (x) H2
  /// as a representation of the isotropy group of gamma.
  UnitaryRep twisted_tensor(int x1, int x2, const E& gamma) const {
    const auto& o1 = orbit_of(x1);
    const auto& o2 = orbit_of(x2);
    const auto pairs = product_pairs(o1, o2, gamma);
    const Embedding& iso = isotropy_embedding(gamma);
    const int d1 = isotype_dim(x1), d2 = isotype_dim(x2), b = d1 * d2;
    const int n = static_cast<int>(pairs.size()) * b;
    UnitaryRep out{iso.sub, {}};
    for (int g : iso.to_parent) {
      Mat m = Mat::Zero(n, n);
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = 0; q < pairs.size(); ++q) {
          const auto [r1, r2] = pairs[p];
          const auto [s1, s2] = pairs[q];
          int twisted = mp_.alpha(o2.elements[r2], g);
          m.block(static_cast<Eigen::Index>(p) * b, static_cast<Eigen::Index>(q) * b, b, b) =
              kron(o_block(x1, r1, s1, twisted), o_block(x2, r2, s2, g));
        }
      out.matrices.push_back(std::move(m));
    }
    return out;
  }

  /// N_{x1 x2}^{x3} = dim Mor(u3_{gamma,gamma}|, U1 x_gamma U2), evaluated at every
  /// gamma of the third orbit; disagreement is an AuditError.
  long long fusion(int x1, int x2, int x3) const {
    const auto& o3 = orbit_of(x3);
    if (product_pairs(orbit_of(x1), orbit_of(x2), o3.base()).empty()) return 0;
    long long result = -1;
    for (std::size_t i = 0; i < o3.size(); ++i) {
      const E& gamma = o3.elements[i];
      const Embedding& iso = isotropy_embedding(gamma);
      long long m = char_mult(isotype_at(x3, static_cast<int>(i), iso).character(), twisted_tensor(x1, x2, gamma).character());
      if (result >= 0 && m != result)
        throw AuditError("twisted tensor multiplicity depends on the orbit point " + mp_.gamma.name(gamma));
      result = m;
    }
    return result;
  }

  FusionTable fusion_table() const {
    std::vector<int> dims, conj;
    for (const auto& c : classes_) {
      dims.push_back(c.dim);
      conj.push_back(conjugate(c.id));
    }
    return FusionTable::build(dims, conj, unit_, [this](int a, int b, int c) { return fusion(a, b, c); });
  }

 private:
  std::vector<std::pair<int, int>> product_pairs(const BetaOrbit<E>& o1, const BetaOrbit<E>& o2, const E& gamma) const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < o1.size(); ++i)
      for (std::size_t j = 0; j < o2.size(); ++j)
        if (mp_.gamma.mul(o1.elements[i], o2.elements[j]) == gamma)
          out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
  }

  MatchedPair<GammaT> mp_;
  std::vector<BetaOrbit<E>> orbits_;
  std::vector<std::shared_ptr<const IsotropyTheory>> local_;
  std::vector<BicrossedIrrClass> classes_;
  std::map<E, int> orbit_of_;
  mutable std::map<E, Embedding> iso_cache_;
  int unit_ = -1;
};

/// Every class of a bicrossed product with finite discrete factor; checks
/// sum dim^2 = |Gamma| |G x| Lambda|.
inline BicrossedTheory<FiniteGamma> classify_bicrossed(const MatchedPair<FiniteGamma>& mp,
                                                       std::uint64_t seed = kDefaultSeed,
                                                       SectionChoice sections = SectionChoice::least) {
  BicrossedTheory<FiniteGamma> t(mp, mp.gamma.elements(), seed, sections);
  long long total = 0;
  for (const auto& c : t.classes()) total += static_cast<long long>(c.dim) * c.dim;
  const auto want = static_cast<long long>(mp.gamma.order() * mp.k->order());
  if (total != want)
    throw AuditError("bicrossed classification incomplete: " + std::to_string(total) + " != " + std::to_string(want));
  return t;
}

/// Classes over the beta-orbits meeting ball(n); each orbit is checked for
/// internal completeness.
template <class GammaT>
BicrossedTheory<GammaT> classify_bicrossed_ball(const MatchedPair<GammaT>& mp, int n,
                                                std::uint64_t seed = kDefaultSeed) {
  return BicrossedTheory<GammaT>(mp, test_elements(mp.gamma, n), seed);
}

}  // namespace bqg

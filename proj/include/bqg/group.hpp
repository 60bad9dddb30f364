#pragma once

// Finite groups as dense multiplication tables, subgroups, homomorphisms,
// actions by automorphisms and the standard constructions used by the rest
// of the library (direct sums, semidirect products, coordinate shifts).
//
// Elements are dense ids 0..n-1 in construction order. Every list of
// elements produced here (subgroups, cosets, orbits) is sorted by id.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqg/error.hpp"

namespace bqg {

inline constexpr std::size_t kOrbitGuard = 1'000'000;

class FiniteGroup {
 public:
  /// Builds a group from a full multiplication table (row a, column b holds a*b).
  /// Validates the Latin square property, finds the identity and inverses and,
  /// when `check_associativity` is set, audits associativity on all triples.
  FiniteGroup(std::string label, const std::vector<std::vector<int>>& table,
              std::vector<std::string> names = {}, bool check_associativity = true)
      : label_(std::move(label)), n_(table.size()) {
    if (n_ == 0) throw InvalidArgument("group table is empty");
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      if (table[a].size() != n_) throw InvalidArgument("group table is not square");
      for (std::size_t b = 0; b < n_; ++b) {
        int v = table[a][b];
        if (v < 0 || static_cast<std::size_t>(v) >= n_)
          throw InvalidArgument("group table entry out of range");
        mul_[a * n_ + b] = v;
      }
    }
    finish(std::move(names), check_associativity);
  }

  const std::string& label() const noexcept { return label_; }
  std::size_t order() const noexcept { return n_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int r, int g) const { return mul(mul(r, g), inv(r)); }  // r g r^-1

  int pow(int a, long long k) const {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    int out = identity_;
    for (long long i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<int> find(std::string_view name) const {
    for (std::size_t a = 0; a < n_; ++a)
      if (names_[a] == name) return static_cast<int>(a);
    return std::nullopt;
  }

  /// Full audit: identity, inverse and associativity laws. Returns the first
  /// violated law as text, or an empty string.
  std::string audit() const {
    for (std::size_t a = 0; a < n_; ++a) {
      if (mul(identity_, a) != static_cast<int>(a) || mul(a, identity_) != static_cast<int>(a))
        return "identity law fails at " + names_[a];
      if (mul(a, inv_[a]) != identity_ || mul(inv_[a], a) != identity_)
        return "inverse law fails at " + names_[a];
    }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        int ab = mul(a, b);
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            return "associativity fails at (" + names_[a] + "," + names_[b] + "," + names_[c] + ")";
      }
    return {};
  }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
  }

 private:
  void finish(std::vector<std::string> names, bool check_associativity) {
    // Latin square.
    std::vector<char> seen(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n_; ++b) {
        if (seen[mul(a, b)]) throw InvalidArgument("group table is not a Latin square (row)");
        seen[mul(a, b)] = 1;
      }
    }
    for (std::size_t b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t a = 0; a < n_; ++a) {
        if (seen[mul(a, b)]) throw InvalidArgument("group table is not a Latin square (column)");
        seen[mul(a, b)] = 1;
      }
    }
    identity_ = -1;
    for (std::size_t e = 0; e < n_ && identity_ < 0; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n_ && ok; ++a)
        ok = mul(e, a) == static_cast<int>(a) && mul(a, e) == static_cast<int>(a);
      if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw InvalidArgument("group table has no identity");
    inv_.assign(n_, -1);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == identity_) inv_[a] = static_cast<int>(b);
    for (std::size_t a = 0; a < n_; ++a)
      if (mul(inv_[a], a) != identity_) throw InvalidArgument("group table has no two-sided inverses");
    if (names.empty()) {
      names.resize(n_);
      for (std::size_t a = 0; a < n_; ++a) names[a] = std::to_string(a);
    }
    if (names.size() != n_) throw InvalidArgument("element name list has wrong length");
    names_ = std::move(names);
    if (check_associativity) {
      std::string bad = audit();
      if (!bad.empty()) throw InvalidArgument("non-associative table: " + bad);
    }
  }

  std::string label_;
  std::size_t n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// ---------------------------------------------------------------------------
// Standard groups

inline GroupPtr cyclic_group(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return std::make_shared<FiniteGroup>("Z/" + std::to_string(n), t, std::vector<std::string>{}, false);
}

inline GroupPtr trivial_group() { return cyclic_group(1); }

/// Dihedral group of order 2n: element r^k s^e has id k + n*e.
inline GroupPtr dihedral_group(int n) {
  if (n < 1) throw InvalidArgument("dihedral group parameter must be positive");
  int N = 2 * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (int a = 0; a < N; ++a) {
    int k1 = a % n, e1 = a / n;
    names[a] = (k1 == 0 && e1 == 0) ? "e" : ((k1 ? "r^" + std::to_string(k1) : "") + (e1 ? "s" : ""));
    for (int b = 0; b < N; ++b) {
      int k2 = b % n, e2 = b / n;
      // r^k1 s^e1 r^k2 s^e2 = r^(k1 +- k2) s^(e1+e2)
      int k = e1 ? (k1 - k2 + n) % n : (k1 + k2) % n;
      t[a][b] = k + n * ((e1 + e2) % 2);
    }
  }
  return std::make_shared<FiniteGroup>("D" + std::to_string(n), t, names, false);
}

namespace detail {

inline std::string cycle_name(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace detail

/// Symmetric group on n points; permutations in lexicographic order of their
/// image lists, so the identity has id 0. Names use 1-based cycle notation.
inline GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 7) throw InvalidArgument("symmetric group degree must be in [1,7]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::size_t N = perms.size();
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (std::size_t a = 0; a < N; ++a) {
    names[a] = detail::cycle_name(perms[a]);
    for (std::size_t b = 0; b < N; ++b) {
      // (a*b)(x) = a(b(x)): apply b first.
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index[c];
    }
  }
  return std::make_shared<FiniteGroup>("S" + std::to_string(n), t, names, false);
}

/// External direct sum. Element ids are mixed radix with the first factor
/// least significant: (c_1, ..., c_k) -> c_1 + |F_1| c_2 + ...
inline GroupPtr direct_sum(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) return trivial_group();
  std::size_t N = 1;
  for (const auto& f : factors) N *= f->order();
  auto decode = [&](std::size_t id) {
    std::vector<int> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      c[i] = static_cast<int>(id % factors[i]->order());
      id /= factors[i]->order();
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    std::size_t id = 0, stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      id += stride * c[i];
      stride *= factors[i]->order();
    }
    return static_cast<int>(id);
  };
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  std::string label;
  for (std::size_t i = 0; i < factors.size(); ++i) label += (i ? "+" : "") + factors[i]->label();
  for (std::size_t a = 0; a < N; ++a) {
    auto ca = decode(a);
    std::string nm = "(";
    for (std::size_t i = 0; i < ca.size(); ++i) nm += (i ? "," : "") + factors[i]->name(ca[i]);
    names[a] = nm + ")";
    for (std::size_t b = 0; b < N; ++b) {
      auto cb = decode(b);
      std::vector<int> c(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) c[i] = factors[i]->mul(ca[i], cb[i]);
      t[a][b] = encode(c);
    }
  }
  return std::make_shared<FiniteGroup>(label, t, names, false);
}

// ---------------------------------------------------------------------------
// Subgroups

/// A subgroup given by its sorted element ids inside some parent group.
struct Subgroup {
  std::vector<int> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(g.identity())) return false;
  for (int a : s) {
    if (!s.count(g.inv(a))) return false;
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  }
  return true;
}

inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> s{g.identity()};
  std::deque<int> todo{g.identity()};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int y : gens) {
      int z = g.mul(x, y);
      if (s.insert(z).second) todo.push_back(z);
    }
  }
  return Subgroup{{s.begin(), s.end()}};
}

/// {r in H : r*gamma = gamma*r}; H defaults to the whole group.
inline Subgroup centralizer(const FiniteGroup& g, int gamma, const Subgroup* within = nullptr) {
  Subgroup h = within ? *within : whole_group(g);
  Subgroup out;
  for (int r : h.elements)
    if (g.mul(r, gamma) == g.mul(gamma, r)) out.elements.push_back(r);
  return out;
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.elements.push_back(static_cast<int>(a));
  }
  return out;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

/// r H r^-1
inline Subgroup conjugate_subgroup(const FiniteGroup& g, int r, const Subgroup& h) {
  Subgroup out;
  for (int x : h.elements) out.elements.push_back(g.conj(r, x));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Representatives of the left cosets gH, each the least id in its coset,
/// listed in increasing order.
inline std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> covered(g.order());
  std::vector<int> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (covered[a]) continue;
    reps.push_back(static_cast<int>(a));
    for (int x : h.elements) covered[g.mul(a, x)] = 1;
  }
  return reps;
}

/// A subgroup materialized as a standalone group together with the inclusion.
struct Embedding {
  GroupPtr sub;
  GroupPtr parent;
  std::vector<int> to_parent;  // sub id -> parent id
  std::vector<int> to_sub;     // parent id -> sub id, -1 outside the image

  Subgroup image() const {
    Subgroup s{to_parent};
    std::sort(s.elements.begin(), s.elements.end());
    return s;
  }
};

/// Materializes H <= G; sub ids follow increasing parent ids.
inline Embedding embed_subgroup(const GroupPtr& parent, const Subgroup& h, std::string label = {}) {
  if (!is_subgroup(*parent, h.elements)) throw InvalidArgument("element set is not a subgroup");
  Embedding e;
  e.parent = parent;
  e.to_parent = h.elements;
  e.to_sub.assign(parent->order(), -1);
  for (std::size_t i = 0; i < h.elements.size(); ++i) e.to_sub[h.elements[i]] = static_cast<int>(i);
  std::size_t n = h.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = parent->name(h.elements[a]);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = e.to_sub[parent->mul(h.elements[a], h.elements[b])];
  }
  if (label.empty()) label = "sub(" + parent->label() + ")";
  e.sub = std::make_shared<FiniteGroup>(label, t, names, false);
  return e;
}

/// Wraps an injective homomorphism sub -> parent as an embedding.
inline Embedding embedding_from_hom(const GroupPtr& sub, const GroupPtr& parent, std::vector<int> images) {
  if (images.size() != sub->order()) throw InvalidArgument("embedding image table has wrong length");
  Embedding e{sub, parent, std::move(images), std::vector<int>(parent->order(), -1)};
  for (std::size_t a = 0; a < sub->order(); ++a) {
    if (e.to_sub[e.to_parent[a]] != -1) throw InvalidArgument("embedding is not injective");
    e.to_sub[e.to_parent[a]] = static_cast<int>(a);
    for (std::size_t b = 0; b < sub->order(); ++b)
      if (e.to_parent[sub->mul(a, b)] != parent->mul(e.to_parent[a], e.to_parent[b]))
        throw InvalidArgument("embedding is not a homomorphism");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Homomorphisms and actions by automorphisms

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> images;

  int operator()(int a) const { return images[a]; }

  bool is_hom() const {
    if (images.size() != domain->order()) return false;
    for (std::size_t a = 0; a < domain->order(); ++a)
      for (std::size_t b = 0; b < domain->order(); ++b)
        if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b])) return false;
    return true;
  }

  bool is_bijective() const {
    if (domain->order() != codomain->order()) return false;
    std::vector<char> hit(codomain->order());
    for (int x : images) {
      if (hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  }
};

/// Permutation table of an automorphism, image[g] = theta(g).
using AutTable = std::vector<int>;

inline bool is_automorphism(const FiniteGroup& g, const AutTable& t) {
  if (t.size() != g.order()) return false;
  std::vector<char> hit(g.order());
  for (int x : t) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (t[g.mul(a, b)] != g.mul(t[a], t[b])) return false;
  return true;
}

inline AutTable compose(const AutTable& f, const AutTable& g) {  // f o g
  AutTable out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

inline AutTable invert(const AutTable& f) {
  AutTable out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
  return out;
}

inline AutTable identity_aut(std::size_t n) {
  AutTable t(n);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

/// Inner automorphism g -> r g r^-1.
inline AutTable inner_aut(const FiniteGroup& g, int r) {
  AutTable t(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) t[x] = g.conj(r, static_cast<int>(x));
  return t;
}

/// A homomorphism acting -> Aut(target), stored as one automorphism table per
/// acting element: images[r][g] = alpha_r(g).
struct AutAction {
  GroupPtr acting;
  GroupPtr target;
  std::vector<AutTable> images;

  int operator()(int r, int g) const { return images[r][g]; }

  bool is_trivial() const {
    for (const auto& t : images)
      if (t != identity_aut(t.size())) return false;
    return true;
  }

  /// Returns an empty string when the action is a valid homomorphism into Aut.
  std::string audit() const {
    if (images.size() != acting->order()) return "wrong number of automorphism tables";
    for (std::size_t r = 0; r < images.size(); ++r)
      if (!is_automorphism(*target, images[r]))
        return "image of " + acting->name(r) + " is not an automorphism";
    for (std::size_t r = 0; r < images.size(); ++r)
      for (std::size_t s = 0; s < images.size(); ++s)
        if (images[acting->mul(r, s)] != compose(images[r], images[s]))
          return "not a homomorphism at (" + acting->name(r) + "," + acting->name(s) + ")";
    return {};
  }

  /// Restriction along an embedding of a subgroup of the acting group.
  AutAction restrict_to(const Embedding& e) const {
    AutAction out{e.sub, target, {}};
    for (int p : e.to_parent) out.images.push_back(images[p]);
    return out;
  }
};

inline AutAction trivial_action(const GroupPtr& acting, const GroupPtr& target) {
  return AutAction{acting, target, std::vector<AutTable>(acting->order(), identity_aut(target->order()))};
}

/// Extends automorphism images of some generators of `acting` to the whole
/// group by closure, checking consistency and the homomorphism property.
inline AutAction extend_action(const GroupPtr& acting, const GroupPtr& target,
                               const std::map<int, AutTable>& generator_images) {
  for (const auto& [gen, tab] : generator_images) {
    if (gen < 0 || static_cast<std::size_t>(gen) >= acting->order())
      throw InvalidArgument("action generator id out of range");
    if (!is_automorphism(*target, tab))
      throw InvalidArgument("image of " + acting->name(gen) + " is not an automorphism of " + target->label());
  }
  std::vector<std::optional<AutTable>> img(acting->order());
  img[acting->identity()] = identity_aut(target->order());
  std::deque<int> todo{acting->identity()};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (const auto& [gen, tab] : generator_images) {
      int y = acting->mul(x, gen);
      AutTable t = compose(*img[x], tab);
      if (!img[y]) {
        img[y] = t;
        todo.push_back(y);
      } else if (*img[y] != t) {
        throw InvalidArgument("generator images do not define a homomorphism (conflict at " + acting->name(y) + ")");
      }
    }
  }
  AutAction out{acting, target, {}};
  for (std::size_t r = 0; r < acting->order(); ++r) {
    if (!img[r]) throw InvalidArgument("action generators do not generate " + acting->label());
    out.images.push_back(*img[r]);
  }
  std::string bad = out.audit();
  if (!bad.empty()) throw InvalidArgument(bad);
  return out;
}

/// G x| Lambda with (g,r)(h,s) = (g alpha_r(h), rs). The pair (g,r) has id
/// g + |G| r, so G sits on the first |G| ids.
inline GroupPtr semidirect_product(const AutAction& action) {
  std::string bad = action.audit();
  if (!bad.empty()) throw InvalidArgument("semidirect product: " + bad);
  const auto& g = *action.target;
  const auto& l = *action.acting;
  std::size_t ng = g.order(), nl = l.order(), N = ng * nl;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> names(N);
  for (std::size_t a = 0; a < N; ++a) {
    int g1 = a % ng, r1 = a / ng;
    names[a] = "(" + g.name(g1) + "," + l.name(r1) + ")";
    for (std::size_t b = 0; b < N; ++b) {
      int g2 = b % ng, r2 = b / ng;
      t[a][b] = g.mul(g1, action(r1, g2)) + static_cast<int>(ng) * l.mul(r1, r2);
    }
  }
  return std::make_shared<FiniteGroup>(g.label() + "x|" + l.label(), t, names, false);
}

inline int semidirect_id(const AutAction& action, int g, int r) {
  return g + static_cast<int>(action.target->order()) * r;
}

/// All automorphisms of g by brute force over images of a small generating set.
/// Intended for groups of order at most about 10^3.
inline std::vector<AutTable> automorphisms(const FiniteGroup& g) {
  if (g.order() > 1000) throw InvalidArgument("automorphism enumeration limited to order <= 1000");
  std::vector<int> gens;
  Subgroup span = generated_subgroup(g, gens);
  for (std::size_t a = 0; a < g.order() && span.size() < g.order(); ++a) {
    if (span.contains(static_cast<int>(a))) continue;
    gens.push_back(static_cast<int>(a));
    span = generated_subgroup(g, gens);
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (g.element_order(static_cast<int>(x)) == g.element_order(gens[i]))
        candidates[i].push_back(static_cast<int>(x));
  std::vector<AutTable> out;
  std::vector<int> choice(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      std::vector<int> img(g.order(), -1);
      img[g.identity()] = g.identity();
      std::deque<int> todo{g.identity()};
      while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int y = g.mul(x, gens[j]);
          int v = g.mul(img[x], choice[j]);
          if (img[y] < 0) {
            img[y] = v;
            todo.push_back(y);
          } else if (img[y] != v) {
            return;
          }
        }
      }
      if (is_automorphism(g, img)) out.push_back(img);
      return;
    }
    for (int c : candidates[i]) {
      choice[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Word length with respect to a generating set closed under inverses
/// (inverses are added automatically). Breadth-first search on the Cayley graph.
inline std::vector<int> word_length_table(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<int> sym = gens;
  for (int s : gens) sym.push_back(g.inv(s));
  std::vector<int> len(g.order(), -1);
  len[g.identity()] = 0;
  std::deque<int> todo{g.identity()};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int s : sym) {
      int y = g.mul(x, s);
      if (len[y] < 0) {
        len[y] = len[x] + 1;
        todo.push_back(y);
      }
    }
  }
  for (int l : len)
    if (l < 0) throw InvalidArgument("word generators do not generate " + g.label());
  return len;
}

// ---------------------------------------------------------------------------
// Orbits

template <class Point>
struct Orbit {
  std::vector<Point> points;  // canonical (ascending) order
  Subgroup stabilizer;
};

/// Orbit of `p` under a finite group acting through `act(h, point)`, with the
/// stabilizer of `p`. Throws when the orbit would exceed `bound` points.
template <class Point, class Act, class Less = std::less<Point>>
Orbit<Point> orbit(const FiniteGroup& h, const Act& act, const Point& p, std::size_t bound = kOrbitGuard,
                   Less less = Less{}) {
  std::set<Point, Less> pts(less);
  Orbit<Point> out;
  for (std::size_t x = 0; x < h.order(); ++x) {
    Point q = act(static_cast<int>(x), p);
    if (!less(q, p) && !less(p, q)) out.stabilizer.elements.push_back(static_cast<int>(x));
    pts.insert(std::move(q));
    if (pts.size() > bound) throw InvalidArgument("orbit exceeds the configured bound");
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

// ---------------------------------------------------------------------------
// Coordinate shift on an n-fold direct sum

struct ShiftEmbedding {
  GroupPtr sum;        // C^n
  AutAction action;    // A -> Aut(C^n)
  int generator;       // the chosen generator a of A
};

/// For A cyclic of order n with generator a and C nontrivial abelian, builds
/// sigma: A -> Aut(C^n) with sigma(a)(c_1,...,c_n) = (c_2,...,c_n,c_1).
inline ShiftEmbedding cyclic_shift_embedding(const GroupPtr& a, const GroupPtr& c) {
  if (!c->is_abelian() || c->order() < 2) throw InvalidArgument("shift embedding needs a nontrivial abelian C");
  int n = static_cast<int>(a->order());
  int gen = -1;
  for (int x = 0; x < n && gen < 0; ++x)
    if (a->element_order(x) == n) gen = x;
  if (gen < 0) throw InvalidArgument(a->label() + " is not cyclic");
  std::vector<GroupPtr> factors(n, c);
  GroupPtr sum = direct_sum(factors);
  std::size_t m = c->order();
  AutTable shift(sum->order());
  for (std::size_t id = 0; id < sum->order(); ++id) {
    std::vector<int> coords(n);
    std::size_t rest = id;
    for (int i = 0; i < n; ++i) {
      coords[i] = static_cast<int>(rest % m);
      rest /= m;
    }
    std::size_t out = 0, stride = 1;
    for (int i = 0; i < n; ++i) {
      out += stride * coords[(i + 1) % n];
      stride *= m;
    }
    shift[id] = static_cast<int>(out);
  }
  return ShiftEmbedding{sum, extend_action(a, sum, {{gen, shift}}), gen};
}

}  // namespace bqg

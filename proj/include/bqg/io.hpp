#pragma once

// JSON instance descriptors. Every parse or validation failure is raised as a
// ConfigError naming the offending JSON location.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bqg/bicrossed.hpp"
#include "bqg/error.hpp"
#include "bqg/free_product.hpp"
#include "bqg/group.hpp"
#include "bqg/length.hpp"
#include "bqg/mackey.hpp"

namespace bqg::io {

using json = nlohmann::json;

enum class Kind { semidirect, bicrossed, direct_sum };

struct RunParams {
  int kmax = 6;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-6;
  int restarts = 6;
  int iterations = 40;
};

/// A parsed descriptor. Group specs stay as JSON until an instance is built.
///
/// {"name": ..., "kind": "semidirect" | "bicrossed" | "direct-sum",
///  "gamma": group, "g": group, "lambda": group (semidirect) or generator names (bicrossed),
///  "tau": {generator: automorphism}, "lengths": {...}, "run": {...}}
///
/// A group is {"group": "cyclic" | "symmetric" | "dihedral", "n": N},
/// {"group": "direct-sum", "factors": [group, ...]} or, for gamma only,
/// {"group": "free-product", "orders": [...], "names": [...]}. An automorphism
/// maps element names to element names; unlisted elements are fixed.
struct InstanceConfig {
  std::string name;
  Kind kind = Kind::semidirect;
  json gamma, g, lambda, tau;
  std::vector<std::string> gamma_generators;  // word-length generators; defaults to the keys of tau
  std::optional<std::vector<long long>> g_dual;  // base length on Irr(G) by class id
  std::vector<int> factor_orders;                // direct-sum: explicit N_1, N_2, ...
  int tail_order = 0;                            // direct-sum: order of every later factor
  RunParams run;
};

inline json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(where + "." + key, "missing");
  return *it;
}

inline long long get_int(const json& j, const std::string& where, long long lo, long long hi) {
  if (!j.is_number_integer()) throw ConfigError(where, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) throw ConfigError(where, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

inline std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where, "expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> get_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline GroupPtr build_group(const json& j, const std::string& where) {
  using namespace detail;
  const std::string type = get_string(field(j, "group", where), where + ".group");
  if (type == "direct-sum") {
    const json& fs = field(j, "factors", where);
    if (!fs.is_array() || fs.empty()) throw ConfigError(where + ".factors", "expected a non-empty array");
    std::vector<GroupPtr> factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
      factors.push_back(build_group(fs[i], where + ".factors[" + std::to_string(i) + "]"));
    std::size_t order = 1;
    for (const auto& f : factors) order *= f->order();
    if (order > 4096) throw ConfigError(where, "group order exceeds 4096");
    return direct_sum(factors);
  }
  const int n = static_cast<int>(get_int(field(j, "n", where), where + ".n", 1, 4096));
  if (type == "cyclic") return cyclic_group(n);
  if (type == "dihedral") return dihedral_group(n);
  if (type == "symmetric") {
    if (n > 6) throw ConfigError(where + ".n", "symmetric groups are limited to n <= 6");
    return symmetric_group(n);
  }
  throw ConfigError(where + ".group", "unknown group type '" + type + "'");
}

/// An automorphism given as {name: image name}; unlisted elements are fixed.
inline AutTable parse_aut(const GroupPtr& g, const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where, "expected an object mapping element names to images");
  AutTable t = identity_aut(g->order());
  for (const auto& [from, to] : j.items()) {
    auto a = g->find(from);
    if (!a) throw ConfigError(where + "." + from, "unknown element of " + g->label());
    const std::string image = detail::get_string(to, where + "." + from);
    auto b = g->find(image);
    if (!b) throw ConfigError(where + "." + from, "unknown image '" + image + "' in " + g->label());
    t[*a] = *b;
  }
  if (!is_automorphism(*g, t)) throw ConfigError(where, "not an automorphism of " + g->label());
  return t;
}

inline bool is_free_product(const json& gamma) {
  return gamma.is_object() && gamma.contains("group") && gamma["group"] == "free-product";
}

inline FreeProductGroup build_free_product(const json& j, const std::string& where) {
  using namespace detail;
  const json& os = field(j, "orders", where);
  if (!os.is_array()) throw ConfigError(where + ".orders", "expected an array");
  std::vector<int> orders;
  for (std::size_t i = 0; i < os.size(); ++i)
    orders.push_back(static_cast<int>(get_int(os[i], where + ".orders[" + std::to_string(i) + "]", 2, 64)));
  std::vector<std::string> names;
  if (j.contains("names")) names = get_strings(j["names"], where + ".names");
  try {
    return FreeProductGroup(orders, names);
  } catch (const InvalidArgument& e) {
    throw ConfigError(where, e.what());
  }
}

inline InstanceConfig parse_config(const json& j) {
  using namespace detail;
  InstanceConfig c;
  if (!j.is_object()) throw ConfigError("$", "expected an object");
  c.name = j.contains("name") ? get_string(j["name"], "name") : "instance";
  const std::string kind = get_string(field(j, "kind", "$"), "kind");
  if (kind == "semidirect") {
    c.kind = Kind::semidirect;
  } else if (kind == "bicrossed") {
    c.kind = Kind::bicrossed;
  } else if (kind == "direct-sum") {
    c.kind = Kind::direct_sum;
  } else {
    throw ConfigError("kind", "unknown kind '" + kind + "'");
  }
  if (c.kind == Kind::direct_sum) {
    if (j.contains("factor_orders")) {
      const json& fo = j["factor_orders"];
      if (!fo.is_array()) throw ConfigError("factor_orders", "expected an array");
      for (std::size_t i = 0; i < fo.size(); ++i)
        c.factor_orders.push_back(static_cast<int>(get_int(fo[i], "factor_orders[" + std::to_string(i) + "]", 1, 1 << 20)));
    }
    if (j.contains("tail_order")) c.tail_order = static_cast<int>(get_int(j["tail_order"], "tail_order", 2, 1 << 20));
    if (c.factor_orders.empty() && c.tail_order == 0)
      throw ConfigError("factor_orders", "give factor_orders or tail_order");
  } else {
    c.g = field(j, "g", "$");
    c.lambda = field(j, "lambda", "$");
    c.tau = field(j, "tau", "$");
    if (!c.tau.is_object()) throw ConfigError("tau", "expected an object keyed by generator names");
    if (c.kind == Kind::bicrossed) c.gamma = field(j, "gamma", "$");
    for (const auto& [gen, img] : c.tau.items()) c.gamma_generators.push_back(gen);
  }
  if (j.contains("lengths")) {
    const json& l = j["lengths"];
    if (!l.is_object()) throw ConfigError("lengths", "expected an object");
    if (l.contains("gamma_generators")) c.gamma_generators = get_strings(l["gamma_generators"], "lengths.gamma_generators");
    if (l.contains("g_dual")) {
      const json& gd = l["g_dual"];
      if (!gd.is_array()) throw ConfigError("lengths.g_dual", "expected an array of non-negative integers");
      std::vector<long long> v;
      for (std::size_t i = 0; i < gd.size(); ++i)
        v.push_back(get_int(gd[i], "lengths.g_dual[" + std::to_string(i) + "]", 0, 1LL << 40));
      c.g_dual = v;
    }
  }
  if (j.contains("run")) {
    const json& r = j["run"];
    if (!r.is_object()) throw ConfigError("run", "expected an object");
    if (r.contains("kmax")) c.run.kmax = static_cast<int>(get_int(r["kmax"], "run.kmax", 0, 4096));
    if (r.contains("seed")) c.run.seed = static_cast<std::uint64_t>(get_int(r["seed"], "run.seed", 0, LLONG_MAX));
    if (r.contains("restarts")) c.run.restarts = static_cast<int>(get_int(r["restarts"], "run.restarts", 0, 1000));
    if (r.contains("iterations")) c.run.iterations = static_cast<int>(get_int(r["iterations"], "run.iterations", 1, 10000));
    if (r.contains("tol")) {
      if (!r["tol"].is_number() || r["tol"].get<double>() <= 0) throw ConfigError("run.tol", "expected a positive number");
      c.run.tol = r["tol"].get<double>();
    }
  }
  return c;
}

inline SemidirectInstance build_semidirect(const InstanceConfig& c) {
  GroupPtr g = build_group(c.g, "g");
  GroupPtr lambda = build_group(c.lambda, "lambda");
  std::map<int, AutTable> images;
  for (const auto& [gen, img] : c.tau.items()) {
    auto r = lambda->find(gen);
    if (!r) throw ConfigError("tau." + gen, "unknown element of " + lambda->label());
    images[*r] = parse_aut(g, img, "tau." + gen);
  }
  try {
    return make_semidirect(extend_action(lambda, g, images), c.run.seed);
  } catch (const InvalidArgument& e) {
    throw ConfigError("tau", e.what());
  }
}

inline MatchedPair<FiniteGamma> build_finite_pair(const InstanceConfig& c) {
  FiniteGamma gamma(build_group(c.gamma, "gamma"));
  GroupPtr g = build_group(c.g, "g");
  std::map<int, AutTable> images;
  for (const auto& [gen, img] : c.tau.items()) {
    auto r = gamma.group()->find(gen);
    if (!r) throw ConfigError("tau." + gen, "unknown element of " + gamma.label());
    images[*r] = parse_aut(g, img, "tau." + gen);
  }
  std::vector<int> gens;
  for (const auto& name : detail::get_strings(c.lambda, "lambda")) {
    auto r = gamma.group()->find(name);
    if (!r) throw ConfigError("lambda", "unknown element '" + name + "' of " + gamma.label());
    gens.push_back(*r);
  }
  try {
    auto tau = twist_from_action(extend_action(gamma.group(), g, images));
    return matched_pair_from_twist(gamma, g, tau, generate_finite_subgroup(gamma, gens));
  } catch (const InvalidArgument& e) {
    throw ConfigError("tau", e.what());
  }
}

inline MatchedPair<FreeProductGroup> build_free_pair(const InstanceConfig& c) {
  FreeProductGroup fp = build_free_product(c.gamma, "gamma");
  GroupPtr g = build_group(c.g, "g");
  std::vector<AutTable> images(fp.factor_count(), identity_aut(g->order()));
  for (const auto& [gen, img] : c.tau.items()) {
    std::size_t f = 0;
    while (f < fp.factor_count() && fp.generator_name(static_cast<int>(f)) != gen) ++f;
    if (f == fp.factor_count()) throw ConfigError("tau." + gen, "not a generator of " + fp.label());
    images[f] = parse_aut(g, img, "tau." + gen);
  }
  std::vector<Word> gens;
  for (const auto& name : detail::get_strings(c.lambda, "lambda")) {
    try {
      gens.push_back(fp.parse(name));
    } catch (const InvalidArgument& e) {
      throw ConfigError("lambda", e.what());
    }
  }
  try {
    return matched_pair_from_twist(fp, g, twist_from_generators(fp, g, images), generate_finite_subgroup(fp, gens));
  } catch (const InvalidArgument& e) {
    throw ConfigError("tau", e.what());
  }
}

inline DirectSumLength build_direct_sum(const InstanceConfig& c) {
  return direct_sum_length(c.factor_orders, c.tail_order);
}

// ---------------------------------------------------------------------------
// Length specs

/// Word length on a finite Gamma from the configured generators.
inline Lengths finite_word_length(const InstanceConfig& c, const FiniteGroup& g) {
  std::vector<int> gens;
  for (const auto& name : c.gamma_generators) {
    auto r = g.find(name);
    if (!r) throw ConfigError("lengths.gamma_generators", "unknown element '" + name + "'");
    gens.push_back(*r);
  }
  auto wl = word_length_table(g, gens);
  Lengths out;
  for (int v : wl) {
    if (v < 0) throw ConfigError("lengths.gamma_generators", "generators do not generate " + g.label());
    out.emplace_back(v);
  }
  return out;
}

/// l_Gamma averaged over conjugation by Lambda, so that it is beta-invariant.
template <class GammaT>
std::function<Rational(const typename GammaT::Element&)> gamma_length(const InstanceConfig& c,
                                                                     const MatchedPair<GammaT>& mp) {
  std::function<Rational(const typename GammaT::Element&)> base;
  if constexpr (std::is_same_v<GammaT, FiniteGamma>) {
    auto l = std::make_shared<Lengths>(finite_word_length(c, *mp.gamma.group()));
    base = [l](const int& x) { return (*l)[x]; };
  } else {
    FreeProductGroup fp = mp.gamma;
    base = [fp](const Word& w) { return Rational(fp.word_length(w)); };
  }
  return conjugation_average<GammaT>(mp.gamma, base, mp.lambda);
}

/// Closure of a set of permutations under composition.
inline std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& gens, std::size_t n) {
  std::set<std::vector<int>> seen{identity_aut(n)};
  std::vector<std::vector<int>> todo{identity_aut(n)};
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      auto q = compose(g, p);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

/// l_G on Irr(G), averaged over the group generated by the tau-images of the
/// probe elements, so that it is Gamma-invariant. The default base length is 0
/// on the trivial class and 1 elsewhere.
template <class GammaT>
Lengths g_dual_length(const InstanceConfig& c, const MatchedPair<GammaT>& mp, const std::vector<IrrClass>& irr) {
  Lengths base;
  if (c.g_dual) {
    if (c.g_dual->size() != irr.size())
      throw ConfigError("lengths.g_dual", "expected " + std::to_string(irr.size()) + " values");
    for (long long v : *c.g_dual) base.emplace_back(v);
  } else {
    for (const auto& x : irr)
      base.emplace_back(std::all_of(x.chi.begin(), x.chi.end(), [](cplx z) { return std::abs(z - 1.0) < kRoundTol; }) ? 0 : 1);
  }
  std::vector<std::vector<int>> gens;
  for (const auto& p : probe_elements(mp.gamma)) gens.push_back(irr_permutation(irr, mp.tau(p)));
  return average_length(base, permutation_closure(gens, irr.size()));
}

}  // namespace bqg::io

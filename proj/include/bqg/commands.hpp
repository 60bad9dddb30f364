#pragma once

// The irr, fuse, growth and rd commands. Each writes its data files into the
// output directory, logs progress to the given stream and returns the exit
// code: 0 success, 1 audit or oracle failure, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bqg/bicrossed.hpp"
#include "bqg/fusion_table.hpp"
#include "bqg/io.hpp"
#include "bqg/length.hpp"
#include "bqg/mackey.hpp"
#include "bqg/quantum_algebra.hpp"
#include "bqg/rd.hpp"

namespace bqg::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitAudit = 1;
inline constexpr int kExitConfig = 2;

struct Context {
  io::InstanceConfig cfg;
  std::filesystem::path out;
  std::ostream& log;
};

inline void write_file(const Context& ctx, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(ctx.out);
  std::ofstream f(ctx.out / name, std::ios::binary);
  if (!f) throw ConfigError("--out", "cannot write " + (ctx.out / name).string());
  f << text;
}

inline void write_json(const Context& ctx, const std::string& name, const json& j) {
  write_file(ctx, name, j.dump(2) + "\n");
}

inline std::string instance_label(const Context& ctx) { return "bqg: " + ctx.cfg.name + ": "; }

inline json fusion_entries(const FusionTable& t) {
  json e = json::array();
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t(x, y, z) != 0) e.push_back({x, y, z, t(x, y, z)});
  return e;
}

inline std::string fusion_csv(const FusionTable& t) {
  std::ostringstream s;
  s << "x,y,z,N\n";
  for (const auto& e : fusion_entries(t)) s << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "\n";
  return s.str();
}

inline json audit_json(const FusionAudit& a) {
  return {{"unit", a.unit},
          {"conjugation", a.conjugation},
          {"associativity", a.associativity},
          {"dimension", a.dimension},
          {"frobenius", a.frobenius},
          {"ok", a.ok()}};
}

inline json diff_tables(const FusionTable& a, const FusionTable& b) {
  json d = json::array();
  const int n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a(x, y, z) != b(x, y, z)) d.push_back({x, y, z, a(x, y, z), b(x, y, z)});
  return d;
}

template <class GammaT>
json bicrossed_classes(const BicrossedTheory<GammaT>& t, std::string& csv) {
  json cs = json::array();
  std::ostringstream s;
  s << "id,orbit,base,orbit_size,isotype,u_class,dim\n";
  for (const auto& c : t.classes()) {
    const auto& o = t.orbits()[c.orbit];
    const std::string base = t.pair().gamma.name(o.base());
    cs.push_back({{"id", c.id}, {"orbit", c.orbit}, {"base", base}, {"orbit_size", o.size()},
                  {"isotype", c.isotype}, {"u_class", c.u_class}, {"dim", c.dim}});
    s << c.id << "," << c.orbit << "," << base << "," << o.size() << "," << c.isotype << "," << c.u_class << ","
      << c.dim << "\n";
  }
  csv = s.str();
  return cs;
}

/// Per orbit, sum of dim^2 over its classes must be |O| |K|.
template <class GammaT>
json orbit_audit(const BicrossedTheory<GammaT>& t, bool& ok) {
  json a = json::array();
  std::vector<long long> sums(t.orbits().size(), 0);
  for (const auto& c : t.classes()) sums[c.orbit] += static_cast<long long>(c.dim) * c.dim;
  for (std::size_t o = 0; o < sums.size(); ++o) {
    const long long want = static_cast<long long>(t.orbits()[o].size() * t.pair().k->order());
    ok = ok && sums[o] == want;
    a.push_back({{"orbit", o}, {"sum_dim2", sums[o]}, {"expected", want}});
  }
  return a;
}

// ---------------------------------------------------------------------------
// irr

inline int cmd_irr(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  json j{{"instance", cfg.name}};
  std::string csv;
  bool ok = true;
  if (cfg.kind == io::Kind::semidirect) {
    auto inst = io::build_semidirect(cfg);
    auto cs = classify_semidirect(inst, cfg.run.seed);
    const long long want = static_cast<long long>(inst.product->order());
    long long total = 0;
    json arr = json::array();
    std::ostringstream s;
    s << "id,dim,u_class,stabilizer_order\n";
    for (const auto& c : cs) {
      total += static_cast<long long>(c.dim) * c.dim;
      const auto stab = c.drp.lambda0.sub->order();
      arr.push_back({{"id", c.id}, {"dim", c.dim}, {"u_class", c.drp.u_class}, {"stabilizer_order", stab}});
      s << c.id << "," << c.dim << "," << c.drp.u_class << "," << stab << "\n";
    }
    csv = s.str();
    ok = total == want;
    j["kind"] = "semidirect";
    j["classes"] = arr;
    j["sum_dim2"] = total;
    j["expected"] = want;
    ctx.log << instance_label(ctx) << cs.size() << " classes, audit " << total << "=" << want << "\n";
  } else if (cfg.kind == io::Kind::bicrossed && !io::is_free_product(cfg.gamma)) {
    auto mp = io::build_finite_pair(cfg);
    BicrossedTheory<FiniteGamma> t(mp, mp.gamma.elements(), cfg.run.seed);
    j["kind"] = "bicrossed";
    j["classes"] = bicrossed_classes(t, csv);
    j["orbits"] = orbit_audit(t, ok);
    long long total = 0;
    for (const auto& c : t.classes()) total += static_cast<long long>(c.dim) * c.dim;
    const auto want = static_cast<long long>(mp.gamma.order() * mp.k->order());
    ok = ok && total == want;
    j["sum_dim2"] = total;
    j["expected"] = want;
    ctx.log << instance_label(ctx) << t.size() << " classes, audit " << total << "=" << want << "\n";
  } else if (cfg.kind == io::Kind::bicrossed) {
    auto mp = io::build_free_pair(cfg);
    auto t = classify_bicrossed_ball(mp, cfg.run.kmax, cfg.run.seed);
    j["kind"] = "bicrossed";
    j["radius"] = cfg.run.kmax;
    j["classes"] = bicrossed_classes(t, csv);
    j["orbits"] = orbit_audit(t, ok);
    ctx.log << instance_label(ctx) << t.size() << " classes over " << t.orbits().size()
            << " orbits meeting ball(" << cfg.run.kmax << ")\n";
  } else {
    throw ConfigError("kind", "irr is not defined for direct-sum instances");
  }
  j["audit_ok"] = ok;
  write_json(ctx, "irr.json", j);
  write_file(ctx, "irr.csv", csv);
  return ok ? kExitOk : kExitAudit;
}

// ---------------------------------------------------------------------------
// fuse

inline int cmd_fuse(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  FusionTable table, oracle;
  std::string oracle_name;
  if (cfg.kind == io::Kind::semidirect) {
    auto inst = io::build_semidirect(cfg);
    auto cs = classify_semidirect(inst, cfg.run.seed);
    table = semidirect_fusion_table(inst, cs);
    oracle = semidirect_fusion_table(inst, cs, true);
    oracle_name = "character inner product";
  } else if (cfg.kind == io::Kind::bicrossed && !io::is_free_product(cfg.gamma)) {
    auto mp = io::build_finite_pair(cfg);
    BicrossedTheory<FiniteGamma> t(mp, mp.gamma.elements(), cfg.run.seed);
    table = t.fusion_table();
    CrossedProductAlgebra alg(mp);
    std::vector<Vec> chi;
    for (const auto& w : bicrossed_coreps(alg, t)) {
      if (corep_residual(alg, w) > cfg.run.tol) throw AuditError("corepresentation fails its unitarity audit");
      chi.push_back(corep_character(alg, w));
    }
    oracle = FusionTable::build(table.dims, table.conj, table.unit,
                                [&](int x, int y, int z) { return haar_fusion(alg, chi[x], chi[y], chi[z]); });
    oracle_name = "Haar trace";
  } else if (cfg.kind == io::Kind::bicrossed) {
    throw ConfigError("gamma", "fuse needs a finite gamma");
  } else {
    throw ConfigError("kind", "fuse is not defined for direct-sum instances");
  }
  auto audit = audit_fusion(table);
  json diff = diff_tables(table, oracle);
  json j{{"instance", cfg.name},
         {"dims", table.dims},
         {"conj", table.conj},
         {"unit", table.unit},
         {"entries", fusion_entries(table)},
         {"oracle", oracle_name},
         {"oracle_diff", diff},
         {"audit", audit_json(audit)}};
  write_json(ctx, "fusion.json", j);
  write_file(ctx, "fusion.csv", fusion_csv(table));
  ctx.log << instance_label(ctx) << table.size() << "^3 table, " << diff.size() << " differences against the "
          << oracle_name << " oracle, axiom audit " << (audit.ok() ? "passed" : "failed") << "\n";
  return diff.empty() && audit.ok() ? kExitOk : kExitAudit;
}

// ---------------------------------------------------------------------------
// growth

inline std::string profile_csv(const GrowthProfile& group, const GrowthProfile& dual) {
  std::ostringstream s;
  s << "k,word_shell,word_cumulative,dual_shell,dual_cumulative\n";
  for (int k = 0; k <= dual.kmax; ++k) {
    s << k << ",";
    if (group.shells.empty())
      s << ",";
    else
      s << group.shells[k] << "," << group.cumulative[k];
    s << "," << dual.shells[k] << "," << dual.cumulative[k] << "\n";
  }
  return s.str();
}

template <class GammaT>
GrowthProfile family_profile(const BicrossedTheory<GammaT>& t, const Lengths& values, int kmax) {
  std::vector<long long> w;
  for (const auto& c : t.classes()) w.push_back(static_cast<long long>(c.dim) * c.dim);
  return growth_profile(values, w, kmax);
}

/// Group shells use the word length; dual shells use the affording family built
/// from its Lambda-average l_Gamma. For a free product l_Gamma >= word length
/// - 2 max_Lambda word length, so ball(kmax + 1 + 2m) carries every orbit base
/// with l_Gamma < kmax + 1.
template <class GammaT>
std::pair<GrowthProfile, GrowthProfile> bicrossed_growth(const io::InstanceConfig& cfg, const MatchedPair<GammaT>& mp,
                                                         std::ostream& log) {
  const int kmax = cfg.run.kmax;
  auto lg = io::gamma_length(cfg, mp);
  std::vector<typename GammaT::Element> scope;
  if constexpr (std::is_same_v<GammaT, FiniteGamma>) {
    scope = mp.gamma.elements();
  } else {
    int m = 0;
    for (const auto& r : mp.lambda) m = std::max(m, mp.gamma.word_length(r));
    scope = mp.gamma.ball(kmax + 1 + 2 * m);
    log << "bqg: " << cfg.name << ": enumerating ball(" << kmax + 1 + 2 * m << ") with " << scope.size()
        << " elements\n";
  }
  Lengths gl;
  if constexpr (std::is_same_v<GammaT, FiniteGamma>) {
    gl = io::finite_word_length(cfg, *mp.gamma.group());
  } else {
    for (const auto& x : scope) gl.emplace_back(mp.gamma.word_length(x));
  }
  BicrossedTheory<GammaT> t(mp, scope, cfg.run.seed);
  auto fam = build_affording_family(t, lg, io::g_dual_length(cfg, mp, irr_g_of(t)));
  return {growth_profile(gl, {}, kmax), family_profile(t, fam.values, kmax)};
}

inline int cmd_growth(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  const int kmax = cfg.run.kmax;
  if (cfg.kind == io::Kind::direct_sum) {
    auto l = io::build_direct_sum(cfg);
    std::ostringstream s;
    s << "n,count_below,bound,ok\n";
    bool ok = true;
    for (long long n = 1; n <= kmax; ++n) {
      const long long c = l.count_below(n);
      ok = ok && c <= n;
      s << n << "," << c << "," << n << "," << (c <= n ? 1 : 0) << "\n";
    }
    write_file(ctx, "growth.csv", s.str());
    ctx.log << instance_label(ctx) << "count below n checked for n <= " << kmax << ": "
            << (ok ? "bounded by n" : "bound violated") << "\n";
    return ok ? kExitOk : kExitAudit;
  }
  GrowthProfile group, dual;
  if (cfg.kind == io::Kind::semidirect) {
    auto inst = io::build_semidirect(cfg);
    auto cs = classify_semidirect(inst, cfg.run.seed);
    std::vector<std::vector<int>> gens;
    for (std::size_t r = 0; r < inst.lambda()->order(); ++r) gens.push_back(inst.irr_action[r]);
    Lengths base;
    if (cfg.g_dual) {
      if (cfg.g_dual->size() != inst.irr_g.size())
        throw ConfigError("lengths.g_dual", "expected " + std::to_string(inst.irr_g.size()) + " values");
      for (long long v : *cfg.g_dual) base.emplace_back(v);
    } else {
      for (const auto& x : inst.irr_g)
        base.emplace_back(std::all_of(x.chi.begin(), x.chi.end(), [](cplx z) { return std::abs(z - 1.0) < kRoundTol; }) ? 0 : 1);
    }
    auto l = dual_length_semidirect(inst, cs, average_length(base, io::permutation_closure(gens, base.size())));
    std::vector<long long> w;
    for (const auto& c : cs) w.push_back(static_cast<long long>(c.dim) * c.dim);
    dual = growth_profile(l, w, kmax);
  } else if (!io::is_free_product(cfg.gamma)) {
    std::tie(group, dual) = bicrossed_growth(cfg, io::build_finite_pair(cfg), ctx.log);
  } else {
    std::tie(group, dual) = bicrossed_growth(cfg, io::build_free_pair(cfg), ctx.log);
  }
  write_file(ctx, "growth.csv", profile_csv(group, dual));
  ctx.log << instance_label(ctx) << "growth profile up to k = " << kmax << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// rd

inline int cmd_rd(const Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.kind != io::Kind::bicrossed || io::is_free_product(cfg.gamma))
    throw ConfigError("kind", "rd needs a bicrossed instance with finite gamma");
  auto mp = io::build_finite_pair(cfg);
  BicrossedTheory<FiniteGamma> t(mp, mp.gamma.elements(), cfg.run.seed);
  auto lg = io::gamma_length(cfg, mp);
  auto fam = build_affording_family(t, lg, io::g_dual_length(cfg, mp, irr_g_of(t)));
  CrossedProductAlgebra alg(mp);
  auto w = bicrossed_coreps(alg, t);
  RdOptions opt{cfg.run.seed, cfg.run.restarts, cfg.run.iterations};
  json shells = json::array();
  bool ok = true;
  const long long top = std::min<long long>(cfg.run.kmax, max_shell(fam.values));
  for (long long k = 0; k <= top; ++k) {
    RdOptions o = opt;
    o.seed = opt.seed + static_cast<std::uint64_t>(k);
    auto e = rd_ratio(alg, w, shell_support(fam.values, k), o);
    ok = ok && e.lower <= e.upper * (1 + cfg.run.tol);
    shells.push_back({{"k", k},
                      {"support", e.support},
                      {"lower", e.lower},
                      {"upper", e.upper},
                      {"argmax", e.argmax},
                      {"empty", e.empty},
                      {"seed", o.seed}});
    ctx.log << instance_label(ctx) << "shell " << k << ": " << e.support.size() << " classes, ratio in ["
            << e.lower << ", " << e.upper << "]\n";
  }
  write_json(ctx, "rd.json", {{"instance", cfg.name}, {"seed", cfg.run.seed}, {"shells", shells}});
  return ok ? kExitOk : kExitAudit;
}

/// Runs a command, mapping errors to exit codes.
inline int run_command(const std::string& name, const Context& ctx) {
  try {
    if (name == "irr") return cmd_irr(ctx);
    if (name == "fuse") return cmd_fuse(ctx);
    if (name == "growth") return cmd_growth(ctx);
    if (name == "rd") return cmd_rd(ctx);
    throw ConfigError("command", "unknown command '" + name + "'");
  } catch (const ConfigError& e) {
    ctx.log << "bqg: config error at " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    ctx.log << "bqg: invalid instance: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    ctx.log << "bqg: audit failure: " << e.what() << "\n";
    return kExitAudit;
  }
}

}  // namespace bqg::cli

#pragma once

// Dense fusion tables N_{xy}^z = dim Mor(z, x (x) y) and the fusion-ring audits.

#include <functional>
#include <string>
#include <vector>

#include "bqg/error.hpp"

namespace bqg {

struct FusionTable {
  std::vector<int> dims;
  std::vector<int> conj;  // class of the conjugate
  int unit = 0;
  std::vector<long long> n;

  std::size_t size() const { return dims.size(); }
  long long operator()(int x, int y, int z) const { return n[(static_cast<std::size_t>(x) * size() + y) * size() + z]; }
  long long& at(int x, int y, int z) { return n[(static_cast<std::size_t>(x) * size() + y) * size() + z]; }

  /// Fills the table from mult(x, y, z) = N_{xy}^z.
  static FusionTable build(std::vector<int> dims, std::vector<int> conj, int unit,
                           const std::function<long long(int, int, int)>& mult) {
    FusionTable t{std::move(dims), std::move(conj), unit, {}};
    const int c = static_cast<int>(t.size());
    t.n.assign(static_cast<std::size_t>(c) * c * c, 0);
    for (int x = 0; x < c; ++x)
      for (int y = 0; y < c; ++y)
        for (int z = 0; z < c; ++z) t.at(x, y, z) = mult(x, y, z);
    return t;
  }
};

struct FusionAudit {
  std::vector<std::string> unit, conjugation, associativity, dimension, frobenius;

  bool ok() const {
    return unit.empty() && conjugation.empty() && associativity.empty() && dimension.empty() && frobenius.empty();
  }
};

inline FusionAudit audit_fusion(const FusionTable& t) {
  FusionAudit a;
  const int c = static_cast<int>(t.size());
  auto tri = [](int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
  };
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < c; ++y) {
      long long want = x == y;
      if (t(x, t.unit, y) != want || t(t.unit, x, y) != want) a.unit.push_back(tri(x, t.unit, y));
    }
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < c; ++y) {
      long long s = 0;
      for (int z = 0; z < c; ++z) {
        s += t(x, y, z) * t.dims[z];
        if (t(x, y, z) != t(t.conj[y], t.conj[x], t.conj[z])) a.conjugation.push_back(tri(x, y, z));
        if (t(x, y, z) != t(t.conj[x], z, y)) a.frobenius.push_back(tri(x, y, z));
      }
      if (s != static_cast<long long>(t.dims[x]) * t.dims[y]) a.dimension.push_back(tri(x, y, -1));
    }
  for (int x = 0; x < c; ++x)
    for (int y = 0; y < c; ++y)
      for (int w = 0; w < c; ++w)
        for (int v = 0; v < c; ++v) {
          long long lhs = 0, rhs = 0;
          for (int z = 0; z < c; ++z) {
            lhs += t(x, y, z) * t(z, w, v);
            rhs += t(y, w, z) * t(x, z, v);
          }
          if (lhs != rhs) a.associativity.push_back(tri(x, y, w) + "->" + std::to_string(v));
        }
  return a;
}

}  // namespace bqg

#pragma once

// Free products of finite cyclic groups Z/n_1 * ... * Z/n_k with syllable
// normal forms. Each factor contributes its generator and all of its powers as
// letters of length 1 except that a^e and a^(n-e) cost the same, so the word
// length of a syllable a^e is min(e, n - e).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bqg/error.hpp"
#include "bqg/group.hpp"

namespace bqg {

struct Syllable {
  int factor;
  int exp;  // 1 .. order(factor) - 1
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Reduced word: consecutive syllables come from different factors.
using Word = std::vector<Syllable>;

class FreeProductGroup {
 public:
  using Element = Word;

  FreeProductGroup(std::vector<int> orders, std::vector<std::string> generator_names = {})
      : orders_(std::move(orders)), names_(std::move(generator_names)) {
    if (orders_.size() < 2) throw InvalidArgument("free product needs at least two factors");
    for (int n : orders_)
      if (n < 2) throw InvalidArgument("free product factors must be nontrivial finite cyclic groups");
    if (names_.empty())
      for (std::size_t i = 0; i < orders_.size(); ++i) names_.push_back(std::string(1, static_cast<char>('a' + i)));
    if (names_.size() != orders_.size()) throw InvalidArgument("generator name list has wrong length");
    for (std::size_t i = 0; i < orders_.size(); ++i) label_ += (i ? "*" : "") + ("Z/" + std::to_string(orders_[i]));
  }

  const std::string& label() const noexcept { return label_; }
  std::size_t factor_count() const noexcept { return orders_.size(); }
  int factor_order(int f) const { return orders_[f]; }
  const std::string& generator_name(int f) const { return names_[f]; }

  Element identity() const { return {}; }

  Element generator(int factor, int exp = 1) const {
    int e = ((exp % orders_[factor]) + orders_[factor]) % orders_[factor];
    if (e == 0) return {};
    return {Syllable{factor, e}};
  }

  Element mul(const Element& a, const Element& b) const {
    Element out = a;
    std::size_t i = 0;
    while (i < b.size() && !out.empty() && out.back().factor == b[i].factor) {
      int f = b[i].factor;
      int e = (out.back().exp + b[i].exp) % orders_[f];
      ++i;
      if (e == 0) {
        out.pop_back();
      } else {
        out.back().exp = e;
        break;
      }
    }
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(i), b.end());
    return out;
  }

  Element inv(const Element& a) const {
    Element out(a.rbegin(), a.rend());
    for (auto& s : out) s.exp = orders_[s.factor] - s.exp;
    return out;
  }

  Element conj(const Element& r, const Element& g) const { return mul(mul(r, g), inv(r)); }

  int syllable_length(const Syllable& s) const { return std::min(s.exp, orders_[s.factor] - s.exp); }

  int word_length(const Element& a) const {
    int l = 0;
    for (const auto& s : a) l += syllable_length(s);
    return l;
  }

  /// Shortlex order: by word length, then lexicographically by syllables.
  bool less(const Element& a, const Element& b) const {
    int la = word_length(a), lb = word_length(b);
    if (la != lb) return la < lb;
    return a < b;
  }

  /// All elements of word length < n, in shortlex order. ball(0) is empty.
  std::vector<Element> ball(int n, std::size_t guard = kOrbitGuard) const {
    std::vector<Element> out;
    Element w;
    extend(w, 0, n, out, guard);
    std::sort(out.begin(), out.end(), [this](const Element& a, const Element& b) { return less(a, b); });
    return out;
  }

  /// Elements of word length exactly k.
  std::vector<Element> sphere(int k, std::size_t guard = kOrbitGuard) const {
    std::vector<Element> out;
    for (auto& w : ball(k + 1, guard))
      if (word_length(w) == k) out.push_back(std::move(w));
    return out;
  }

  std::string name(const Element& a) const {
    if (a.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) out += "*";
      out += names_[a[i].factor];
      if (a[i].exp != 1) out += "^" + std::to_string(a[i].exp);
    }
    return out;
  }

  /// Parses products like "s*t^2*s", "t^-1" or "e" into reduced form.
  Element parse(std::string_view text) const {
    Element out;
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "e") return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find('*', pos);
      std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (tok.empty()) throw InvalidArgument("empty letter in word '" + std::string(text) + "'");
      std::string base = tok;
      long exp = 1;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        base = tok.substr(0, caret);
        try {
          std::size_t used = 0;
          exp = std::stol(tok.substr(caret + 1), &used);
          if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw InvalidArgument("bad exponent in word '" + std::string(text) + "'");
        }
      }
      if (base != "e") {
        auto it = std::find(names_.begin(), names_.end(), base);
        if (it == names_.end()) throw InvalidArgument("unknown generator '" + base + "'");
        out = mul(out, generator(static_cast<int>(it - names_.begin()), static_cast<int>(exp)));
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }

 private:
  void extend(Element& w, int len, int n, std::vector<Element>& out, std::size_t guard) const {
    if (len >= n) return;
    out.push_back(w);
    if (out.size() > guard) throw InvalidArgument("ball enumeration exceeds the configured bound");
    for (int f = 0; f < static_cast<int>(orders_.size()); ++f) {
      if (!w.empty() && w.back().factor == f) continue;
      for (int e = 1; e < orders_[f]; ++e) {
        Syllable s{f, e};
        int l = syllable_length(s);
        if (len + l >= n) continue;
        w.push_back(s);
        extend(w, len + l, n, out, guard);
        w.pop_back();
      }
    }
  }

  std::vector<int> orders_;
  std::vector<std::string> names_;
  std::string label_;
};

/// Finite group viewed through the same element interface as FreeProductGroup,
/// so code templated on the discrete factor accepts either.
class FiniteGamma {
 public:
  using Element = int;

  explicit FiniteGamma(GroupPtr g) : g_(std::move(g)) {}

  const GroupPtr& group() const noexcept { return g_; }
  const std::string& label() const { return g_->label(); }
  std::size_t order() const { return g_->order(); }
  Element identity() const { return g_->identity(); }
  Element mul(Element a, Element b) const { return g_->mul(a, b); }
  Element inv(Element a) const { return g_->inv(a); }
  Element conj(Element r, Element g) const { return g_->conj(r, g); }
  bool less(Element a, Element b) const { return a < b; }
  std::string name(Element a) const { return g_->name(a); }

  Element parse(std::string_view text) const {
    if (auto id = g_->find(text)) return *id;
    throw InvalidArgument("unknown element '" + std::string(text) + "' of " + g_->label());
  }

  std::vector<Element> elements() const {
    std::vector<Element> out(g_->order());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
  }

 private:
  GroupPtr g_;
};

}  // namespace bqg

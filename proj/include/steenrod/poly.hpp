/*
   Copyright 2026 The steenrod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* Sparse polynomials over F2 in degree-one generators t_1, t_2, ...; the
   ring H*((RP^inf)^k; Z/2). */

#ifndef STEENROD_POLY_HPP
#define STEENROD_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2.hpp"

namespace steenrod {

using Var = std::uint32_t;

/// A monomial t_{v1}^{e1} ... t_{vk}^{ek}, stored sparsely with v ascending
/// and every e positive.
class PolyMonomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  PolyMonomial() = default;
  explicit PolyMonomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
      if (e == 0) continue;
      if (!factors_.empty() && factors_.back().first == v)
        factors_.back().second += e;
      else
        factors_.emplace_back(v, e);
    }
  }

  static PolyMonomial variable(Var v, std::uint32_t exponent = 1) {
    return PolyMonomial({{v, exponent}});
  }

  [[nodiscard]] const std::vector<Factor>& factors() const noexcept { return factors_; }
  [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }

  [[nodiscard]] std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  [[nodiscard]] std::uint32_t exponent(Var v) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  [[nodiscard]] Var max_variable() const noexcept { return factors_.empty() ? 0 : factors_.back().first; }

  /// Copy with variable `v` removed.
  [[nodiscard]] PolyMonomial without(Var v) const {
    PolyMonomial out;
    for (const auto& f : factors_)
      if (f.first != v) out.factors_.push_back(f);
    return out;
  }

  friend PolyMonomial operator*(const PolyMonomial& a, const PolyMonomial& b) {
    PolyMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
        out.factors_.push_back(*i++);
      else if (i == a.factors_.end() || j->first < i->first)
        out.factors_.push_back(*j++);
      else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;

  /// Graded lexicographic: lower degree first; within a degree, a larger
  /// exponent on the lowest-indexed differing variable comes first.
  friend bool operator<(const PolyMonomial& a, const PolyMonomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
      if (i->first != j->first) return i->first < j->first;
      if (i->second != j->second) return i->second > j->second;
    }
    return false;  // equal degree and one is a prefix of the other: equal
  }

 private:
  std::vector<Factor> factors_;
};

using PolyElement = FormalSum<PolyMonomial>;

inline PolyElement poly_one() { return PolyElement{PolyMonomial{}}; }
inline PolyElement poly_var(Var v, std::uint32_t exponent = 1) {
  return PolyElement{PolyMonomial::variable(v, exponent)};
}

/// Product t_1 t_2 ... t_n (1 when n = 0).
inline PolyMonomial product_of_variables(Var n) {
  std::vector<PolyMonomial::Factor> fs;
  for (Var v = 1; v <= n; ++v) fs.emplace_back(v, 1);
  return PolyMonomial(std::move(fs));
}

inline PolyElement cup(const PolyElement& p, const PolyElement& q) {
  PolyElement out;
  for (const auto& a : p)
    for (const auto& b : q) out.toggle(a * b);
  return out;
}

/// Common degree of all monomials; nullopt for zero or inhomogeneous input.
inline std::optional<std::uint64_t> homogeneous_degree(const PolyElement& p) {
  if (p.is_zero()) return std::nullopt;
  const auto d = p.begin()->degree();
  for (const auto& m : p)
    if (m.degree() != d) return std::nullopt;
  return d;
}

inline bool is_homogeneous(const PolyElement& p) { return p.is_zero() || homogeneous_degree(p).has_value(); }

inline Var max_variable(const PolyElement& p) {
  Var v = 0;
  for (const auto& m : p) v = std::max(v, m.max_variable());
  return v;
}

inline bool uses_variable(const PolyElement& p, Var v) {
  return std::any_of(p.begin(), p.end(), [v](const PolyMonomial& m) { return m.exponent(v) != 0; });
}

/// The polynomial c with p = sum_k c_k u^k, read off at u^k.
inline PolyElement coefficient_of_power(const PolyElement& p, Var u, std::uint32_t k) {
  PolyElement out;
  for (const auto& m : p)
    if (m.exponent(u) == k) out.toggle(m.without(u));
  return out;
}

/// p with every occurrence of variable `from` replaced by variable `to`.
inline PolyElement substitute_variable(const PolyElement& p, Var from, Var to) {
  PolyElement out;
  for (const auto& m : p) {
    const auto e = m.exponent(from);
    out.toggle(e == 0 ? m : m.without(from) * PolyMonomial::variable(to, e));
  }
  return out;
}

using VariableNamer = std::function<std::string(Var)>;

inline std::string default_variable_name(Var v) { return "t" + std::to_string(v); }

/// "t1^3*t2"; the unit monomial prints as "1".
inline std::string to_string(const PolyMonomial& m, const VariableNamer& name = default_variable_name) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += name(v);
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// "t1^3*t2 + t2^4"; zero prints as "0".
inline std::string to_string(const PolyElement& p, const VariableNamer& name = default_variable_name) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& m : p) {
    if (!s.empty()) s += " + ";
    s += to_string(m, name);
  }
  return s;
}

}  // namespace steenrod

#endif  // STEENROD_POLY_HPP

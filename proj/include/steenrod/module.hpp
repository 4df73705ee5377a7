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

/* Finite graded F2-modules with a Steenrod action table and, optionally,
   cup products: truncated models of mod 2 cohomology of spheres, real and
   complex projective spaces, their wedges and suspensions.

   Positive-degree generators carry all the data. A formal unit in degree 0
   may be present; it is represented by the index `kUnit`. */

#ifndef STEENROD_MODULE_HPP
#define STEENROD_MODULE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adem.hpp"
#include "f2.hpp"
#include "f2_matrix.hpp"

namespace steenrod {

using GenIndex = std::size_t;
inline constexpr GenIndex kUnit = std::numeric_limits<GenIndex>::max();

/// A cohomology class: an F2-sum of generators (possibly the unit).
using ModuleElement = FormalSum<GenIndex>;

struct Generator {
  std::string id;
  std::uint32_t degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class GradedModule {
 public:
  using SqKey = std::pair<GenIndex, std::uint32_t>;
  using ProductKey = std::pair<GenIndex, GenIndex>;  // first <= second

  GradedModule(std::string name, std::uint32_t top_degree, bool has_unit = true)
      : name_(std::move(name)), top_degree_(top_degree), has_unit_(has_unit) {}

  GenIndex add_generator(std::string id, std::uint32_t degree) {
    if (degree == 0) throw std::invalid_argument("generator '" + id + "' must have positive degree");
    if (id.empty()) throw std::invalid_argument("generator id must be nonempty");
    if (find(id)) throw std::invalid_argument("duplicate generator id '" + id + "'");
    gens_.push_back({std::move(id), degree});
    return gens_.size() - 1;
  }

  /// Stores Sq^i(g). Degree consistency is not enforced here; verify_axioms
  /// reports violations.
  void set_sq(GenIndex g, std::uint32_t i, ModuleElement value) {
    check_generator(g);
    if (i == 0) throw std::invalid_argument("Sq^0 is the identity and cannot be stored");
    for (auto t : value) check_generator(t);
    if (value.is_zero())
      sq_table_.erase({g, i});
    else
      sq_table_[{g, i}] = std::move(value);
  }

  /// Stores g ^ h (and h ^ g). Marks products as known.
  void set_product(GenIndex g, GenIndex h, ModuleElement value) {
    check_generator(g);
    check_generator(h);
    for (auto t : value) check_generator(t);
    has_products_ = true;
    const ProductKey key = std::minmax(g, h);
    if (value.is_zero())
      product_table_.erase(key);
    else
      product_table_[key] = std::move(value);
  }

  /// Declares the product table complete (absent pairs multiply to zero).
  void set_has_products(bool v) noexcept { has_products_ = v; }

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  [[nodiscard]] std::uint32_t top_degree() const noexcept { return top_degree_; }
  [[nodiscard]] bool has_unit() const noexcept { return has_unit_; }
  [[nodiscard]] bool has_products() const noexcept { return has_products_; }
  [[nodiscard]] const std::vector<Generator>& generators() const noexcept { return gens_; }
  [[nodiscard]] const Generator& generator(GenIndex g) const { return gens_.at(g); }
  [[nodiscard]] const std::map<SqKey, ModuleElement>& sq_table() const noexcept { return sq_table_; }
  [[nodiscard]] const std::map<ProductKey, ModuleElement>& product_table() const noexcept {
    return product_table_;
  }

  [[nodiscard]] std::optional<GenIndex> find(const std::string& id) const {
    for (GenIndex g = 0; g < gens_.size(); ++g)
      if (gens_[g].id == id) return g;
    return std::nullopt;
  }

  [[nodiscard]] std::uint32_t degree_of(GenIndex g) const {
    return g == kUnit ? 0 : gens_.at(g).degree;
  }

  [[nodiscard]] std::string id_of(GenIndex g) const { return g == kUnit ? "1" : gens_.at(g).id; }

  /// Basis of the degree-d part, in generator order.
  [[nodiscard]] std::vector<GenIndex> basis(std::uint32_t d) const {
    std::vector<GenIndex> out;
    if (d == 0) {
      if (has_unit_) out.push_back(kUnit);
      return out;
    }
    for (GenIndex g = 0; g < gens_.size(); ++g)
      if (gens_[g].degree == d) out.push_back(g);
    return out;
  }

  [[nodiscard]] ModuleElement sq_entry(GenIndex g, std::uint32_t i) const {
    auto it = sq_table_.find({g, i});
    return it == sq_table_.end() ? ModuleElement{} : it->second;
  }

  [[nodiscard]] ModuleElement product_entry(GenIndex g, GenIndex h) const {
    auto it = product_table_.find(std::minmax(g, h));
    return it == product_table_.end() ? ModuleElement{} : it->second;
  }

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  void check_generator(GenIndex g) const {
    if (g == kUnit) throw std::invalid_argument("the unit cannot appear in action or product tables");
    if (g >= gens_.size()) throw std::out_of_range("generator index out of range");
  }

  std::string name_;
  std::uint32_t top_degree_;
  bool has_unit_;
  bool has_products_ = false;
  std::vector<Generator> gens_;
  std::map<SqKey, ModuleElement> sq_table_;
  std::map<ProductKey, ModuleElement> product_table_;
};

inline ModuleElement generator_element(GenIndex g) { return ModuleElement{g}; }

/// Common degree of the terms of x; nullopt for zero or mixed degree.
inline std::optional<std::uint32_t> homogeneous_degree(const GradedModule& M, const ModuleElement& x) {
  if (x.is_zero()) return std::nullopt;
  const auto d = M.degree_of(*x.begin());
  for (auto g : x)
    if (M.degree_of(g) != d) return std::nullopt;
  return d;
}

/// Sq^i on a class, read from the table with Sq^0 = id, Sq^i(g) = 0 for
/// i > |g| and everything above the top degree truncated to 0.
inline ModuleElement sq(const GradedModule& M, std::uint32_t i, const ModuleElement& x) {
  if (i == 0) return x;
  ModuleElement out;
  for (auto g : x) {
    if (g == kUnit) continue;
    const auto d = M.degree_of(g);
    if (i > d || d + i > M.top_degree()) continue;
    out += M.sq_entry(g, i);
  }
  return out;
}

inline ModuleElement cup(const GradedModule& M, const ModuleElement& x, const ModuleElement& y) {
  ModuleElement out;
  for (auto g : x) {
    for (auto h : y) {
      if (g == kUnit) {
        out.toggle(h);
      } else if (h == kUnit) {
        out.toggle(g);
      } else if (M.degree_of(g) + M.degree_of(h) <= M.top_degree()) {
        out += M.product_entry(g, h);
      }
    }
  }
  return out;
}

inline ModuleElement act_on_module(const GradedModule& M, const SqWord& w, const ModuleElement& x) {
  ModuleElement cur = x;
  const auto& e = w.exponents();
  for (auto it = e.rbegin(); it != e.rend() && !cur.is_zero(); ++it) cur = sq(M, *it, cur);
  return cur;
}

inline ModuleElement act_on_module(const GradedModule& M, const AdemElement& e, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& w : e) out += act_on_module(M, w, x);
  return out;
}

/// Matrix of Sq^i from degree d to degree d+i; column c is the image of the
/// c-th degree-d basis element in the degree-(d+i) basis.
inline F2Matrix sq_matrix(const GradedModule& M, std::uint32_t i, std::uint32_t d) {
  const auto dom = M.basis(d);
  const auto cod = M.basis(d + i);
  F2Matrix mat(cod.size(), dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    const auto image = sq(M, i, generator_element(dom[c]));
    for (std::size_t r = 0; r < cod.size(); ++r)
      if (image.contains(cod[r])) mat.set(r, c, F2::one());
  }
  return mat;
}

inline std::string to_string(const GradedModule& M, const ModuleElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (auto g : x) {
    if (!s.empty()) s += " + ";
    s += M.id_of(g);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Catalog

/// H*(S^n): one generator in degree n, trivial action and products.
inline GradedModule sphere(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("sphere: dimension must be at least 1");
  GradedModule M("s" + std::to_string(n), n);
  M.add_generator("x" + std::to_string(n), n);
  M.set_has_products(true);
  return M;
}

namespace detail {

// Truncated polynomial algebra on one generator of degree `step`, with
// Sq^{step*j}(x^k) = C(k, j) x^{k+j} and all other squares zero.
inline GradedModule truncated_polynomial(std::string name, std::string symbol, std::uint32_t step,
                                         std::uint32_t n) {
  GradedModule M(std::move(name), step * n);
  for (std::uint32_t k = 1; k <= n; ++k)
    M.add_generator(k == 1 ? symbol : symbol + "^" + std::to_string(k), step * k);
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t j = 1; j <= k && k + j <= n; ++j)
      if (binom_mod2(k, j).is_one()) M.set_sq(k - 1, step * j, generator_element(k + j - 1));
    for (std::uint32_t l = k; k + l <= n; ++l) M.set_product(k - 1, l - 1, generator_element(k + l - 1));
  }
  M.set_has_products(true);
  return M;
}

}  // namespace detail

/// H*(RP^n): t, ..., t^n with Sq^i(t^k) = C(k, i) t^{k+i}.
inline GradedModule real_proj(std::uint32_t n) {
  return detail::truncated_polynomial("rp" + std::to_string(n), "t", 1, n);
}

/// H*(CP^n): x, ..., x^n in degrees 2, ..., 2n with Sq^2(x) = x^2 and
/// Sq^1(x) = 0, extended by the Cartan formula.
inline GradedModule complex_proj(std::uint32_t n) {
  return detail::truncated_polynomial("cp" + std::to_string(n), "x", 2, n);
}

/// Shifts every generator up one degree, keeps the action table and makes
/// all products of positive classes vanish.
inline GradedModule suspend(const GradedModule& M) {
  GradedModule S("susp(" + M.name() + ")", M.top_degree() + 1, M.has_unit());
  for (const auto& g : M.generators()) S.add_generator("s" + g.id, g.degree + 1);
  for (const auto& [key, value] : M.sq_table()) S.set_sq(key.first, key.second, value);
  S.set_has_products(true);
  return S;
}

/// One-point union: generators of both sides, cross products zero. If any
/// generator id occurs on both sides, ids are prefixed with "l." and "r.".
inline GradedModule wedge(const GradedModule& M, const GradedModule& N) {
  bool collision = false;
  for (const auto& g : M.generators())
    if (N.find(g.id)) collision = true;
  GradedModule W("wedge(" + M.name() + "," + N.name() + ")", std::max(M.top_degree(), N.top_degree()),
                 M.has_unit() || N.has_unit());
  for (const auto& g : M.generators()) W.add_generator(collision ? "l." + g.id : g.id, g.degree);
  const GenIndex offset = M.generators().size();
  for (const auto& g : N.generators()) W.add_generator(collision ? "r." + g.id : g.id, g.degree);

  auto shifted = [offset](const ModuleElement& x) {
    ModuleElement out;
    for (auto g : x) out.toggle(g + offset);
    return out;
  };
  for (const auto& [key, value] : M.sq_table()) W.set_sq(key.first, key.second, value);
  for (const auto& [key, value] : N.sq_table()) W.set_sq(key.first + offset, key.second, shifted(value));
  for (const auto& [key, value] : M.product_table()) W.set_product(key.first, key.second, value);
  for (const auto& [key, value] : N.product_table())
    W.set_product(key.first + offset, key.second + offset, shifted(value));
  W.set_has_products(M.has_products() && N.has_products());
  return W;
}

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomFailure {
  std::string axiom;  // "degree", "I1", "I2", "I3", "C", "additivity", "A"
  std::string detail;
  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

struct VerifyReport {
  std::string module;
  std::uint32_t max_degree = 0;
  std::map<std::string, std::size_t> checks;  // instances checked per axiom
  std::vector<AxiomFailure> failures;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
  [[nodiscard]] bool failed(const std::string& axiom) const {
    return std::any_of(failures.begin(), failures.end(),
                       [&](const AxiomFailure& f) { return f.axiom == axiom; });
  }
};

/// Checks the table-level consistency and the square axioms on every
/// generator (and pair of generators) of degree at most D. Failures are
/// collected, never thrown.
inline VerifyReport verify_axioms(const GradedModule& M, std::uint32_t D) {
  VerifyReport rep;
  rep.module = M.name();
  rep.max_degree = D;
  auto fail = [&](std::string axiom, std::string detail) {
    rep.failures.push_back({std::move(axiom), std::move(detail)});
  };
  auto show = [&](const ModuleElement& x) { return to_string(M, x); };
  auto gen = [&](GenIndex g) { return M.id_of(g); };

  // Degree consistency and instability of the stored tables.
  for (const auto& [key, value] : M.sq_table()) {
    const auto [g, i] = key;
    const auto d = M.degree_of(g);
    if (d > D) continue;
    ++rep.checks["degree"];
    ++rep.checks["I2"];
    if (i > d)
      fail("I2", "Sq" + std::to_string(i) + "(" + gen(g) + ") is stored but exceeds degree " +
                     std::to_string(d));
    for (auto h : value)
      if (M.degree_of(h) != d + i)
        fail("degree", "Sq" + std::to_string(i) + "(" + gen(g) + ") contains " + gen(h) + " of degree " +
                           std::to_string(M.degree_of(h)) + ", expected " + std::to_string(d + i));
  }
  for (const auto& [key, value] : M.product_table()) {
    const auto d = M.degree_of(key.first) + M.degree_of(key.second);
    if (d > D) continue;
    ++rep.checks["degree"];
    for (auto h : value)
      if (M.degree_of(h) != d)
        fail("degree", gen(key.first) + "*" + gen(key.second) + " contains " + gen(h) + " of degree " +
                           std::to_string(M.degree_of(h)) + ", expected " + std::to_string(d));
  }

  std::vector<GenIndex> low;
  if (M.has_unit()) low.push_back(kUnit);
  for (GenIndex g = 0; g < M.generators().size(); ++g)
    if (M.degree_of(g) <= D) low.push_back(g);

  for (auto g : low) {
    const auto x = generator_element(g);
    const auto d = M.degree_of(g);
    ++rep.checks["I1"];
    if (!(sq(M, 0, x) == x)) fail("I1", "Sq0(" + gen(g) + ") != " + gen(g));
    for (std::uint32_t i = d + 1; i <= D; ++i) {
      ++rep.checks["I2"];
      if (!sq(M, i, x).is_zero()) fail("I2", "Sq" + std::to_string(i) + "(" + gen(g) + ") != 0");
    }
    if (M.has_products()) {
      ++rep.checks["I3"];
      const auto lhs = sq(M, d, x);
      const auto rhs = cup(M, x, x);
      if (!(lhs == rhs))
        fail("I3", "Sq" + std::to_string(d) + "(" + gen(g) + ") = " + show(lhs) + " but " + gen(g) + "^2 = " +
                       show(rhs));
    }
  }

  if (M.has_products()) {
    for (std::size_t a = 0; a < low.size(); ++a) {
      for (std::size_t b = a; b < low.size(); ++b) {
        const auto g = low[a];
        const auto h = low[b];
        const auto dg = M.degree_of(g);
        const auto dh = M.degree_of(h);
        if (dg + dh > D) continue;
        const auto x = generator_element(g);
        const auto y = generator_element(h);
        const auto xy = cup(M, x, y);
        for (std::uint32_t n = 0; n <= dg + dh; ++n) {
          ++rep.checks["C"];
          ModuleElement rhs;
          for (std::uint32_t i = 0; i <= n; ++i) rhs += cup(M, sq(M, i, x), sq(M, n - i, y));
          const auto lhs = sq(M, n, xy);
          if (!(lhs == rhs))
            fail("C", "Sq" + std::to_string(n) + "(" + gen(g) + "*" + gen(h) + ") = " + show(lhs) +
                          " but the Cartan sum is " + show(rhs));
        }
      }
    }
  }

  // Additivity on random pairs of homogeneous classes; fixed seed.
  std::mt19937_64 rng(0x5eed5eedULL + D);
  for (std::uint32_t d = 1; d <= D; ++d) {
    const auto B = M.basis(d);
    if (B.empty()) continue;
    auto random_class = [&] {
      ModuleElement x;
      for (auto g : B)
        if (rng() & 1U) x.toggle(g);
      return x;
    };
    for (int trial = 0; trial < 4; ++trial) {
      const auto x = random_class();
      const auto y = random_class();
      for (std::uint32_t n = 0; n <= d; ++n) {
        ++rep.checks["additivity"];
        if (!(sq(M, n, x + y) == sq(M, n, x) + sq(M, n, y)))
          fail("additivity", "Sq" + std::to_string(n) + "(" + show(x) + " + " + show(y) + ")");
      }
    }
  }

  // Adem relations, both sides evaluated by iterated table lookups.
  for (std::uint32_t total = 2; total <= D; ++total) {
    for (std::uint32_t k = 1; k < total; ++k) {
      const std::uint32_t n = total - k;
      if (n >= 2 * k) continue;
      AdemElement rhs;
      for (std::uint32_t i = 0; i <= n / 2; ++i)
        if (adem_coeff(n, k, i).is_one()) rhs.toggle(SqWord::from_exponents({n + k - i, i}));
      for (auto g : low) {
        ++rep.checks["A"];
        const auto x = generator_element(g);
        const auto l = act_on_module(M, SqWord{n, k}, x);
        const auto r = act_on_module(M, rhs, x);
        if (!(l == r))
          fail("A", "Sq" + std::to_string(n) + " Sq" + std::to_string(k) + "(" + gen(g) + ") = " + show(l) +
                        " but " + to_string(rhs) + " gives " + show(r));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sq^2 separates susp(CP^2) from S^5 v S^3

struct SeparationReport {
  std::string first_name;
  std::string second_name;
  F2Matrix first_matrix;   // Sq^2 : H^3 -> H^5 on the suspension of CP^2
  F2Matrix second_matrix;  // Sq^2 : H^3 -> H^5 on S^5 v S^3
  std::size_t first_rank = 0;
  std::size_t second_rank = 0;
  std::size_t first_h3 = 0, first_h5 = 0, second_h3 = 0, second_h5 = 0;
  bool distinct = false;
  std::vector<std::string> conclusion;
};

inline SeparationReport distinguish_susp_cp2() {
  const auto susp_cp2 = suspend(complex_proj(2));
  const auto s5_s3 = wedge(sphere(5), sphere(3));
  SeparationReport r;
  r.first_name = susp_cp2.name();
  r.second_name = s5_s3.name();
  r.first_matrix = sq_matrix(susp_cp2, 2, 3);
  r.second_matrix = sq_matrix(s5_s3, 2, 3);
  r.first_rank = r.first_matrix.rank();
  r.second_rank = r.second_matrix.rank();
  r.first_h3 = susp_cp2.basis(3).size();
  r.first_h5 = susp_cp2.basis(5).size();
  r.second_h3 = s5_s3.basis(3).size();
  r.second_h5 = s5_s3.basis(5).size();
  r.distinct = r.first_rank != r.second_rank;
  if (r.distinct) {
    r.conclusion = {
        "Sq2 : H3 -> H5 has rank " + std::to_string(r.first_rank) + " on " + r.first_name + " and rank " +
            std::to_string(r.second_rank) + " on " + r.second_name,
        "Steenrod squares are natural, so the spaces are not homotopy equivalent: ΣCP² ≄ S⁵ ∨ S³",
        "ΣCP² is the cofibre of Σh : S⁴ -> S³ and S⁵ ∨ S³ is the cofibre of the constant map, so Σh is "
        "not null-homotopic",
        "π₄(S³) ≠ 0",
    };
  } else {
    r.conclusion = {"Sq2 does not distinguish the two models; no conclusion"};
  }
  return r;
}

}  // namespace steenrod

#endif  // STEENROD_MODULE_HPP

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

/* Symbolic re-derivation of Adem relations.

   For a generic class a of degree m and two auxiliary degree-one classes
   u, v, the iterated total square (a^u)^v is symmetric in u and v. Each
   side is expanded term by term with the Cartan formula: squares landing on
   the symbolic part w(a) prepend to the word (and vanish past the degree of
   w(a)), squares landing on the u/v monomial use Sq^i(x^n) = C(n,i) x^{n+i}.
   Comparing the coefficient of every bimonomial u^s v^r of the two sides
   yields a sum of words of length <= 2 that must act as zero on a. Words
   are never normalized here. */

#ifndef STEENROD_DERIVATION_HPP
#define STEENROD_DERIVATION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "action.hpp"
#include "adem.hpp"
#include "poly.hpp"

namespace steenrod {

/// w(a) * x, where x is a monomial in the auxiliary variables.
struct SymbolicTerm {
  SqWord word;
  PolyMonomial aux;

  friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
  friend bool operator<(const SymbolicTerm& l, const SymbolicTerm& r) {
    return std::tie(l.word, l.aux) < std::tie(r.word, r.aux);
  }
};

/// An F2-sum of terms w(a) * x over a generic class a of fixed degree.
class SymbolicClass {
 public:
  explicit SymbolicClass(std::uint32_t base_degree) : base_degree_(base_degree) {}

  /// The class a itself.
  static SymbolicClass generic(std::uint32_t base_degree) {
    SymbolicClass c(base_degree);
    c.terms_.toggle(SymbolicTerm{SqWord{}, PolyMonomial{}});
    return c;
  }

  [[nodiscard]] std::uint32_t base_degree() const noexcept { return base_degree_; }
  [[nodiscard]] const FormalSum<SymbolicTerm>& terms() const noexcept { return terms_; }

  /// Degree of w(a), the symbolic factor of a term.
  [[nodiscard]] std::uint64_t symbolic_degree(const SymbolicTerm& t) const noexcept {
    return base_degree_ + t.word.degree();
  }
  [[nodiscard]] std::uint64_t degree(const SymbolicTerm& t) const noexcept {
    return symbolic_degree(t) + t.aux.degree();
  }

  void toggle(SymbolicTerm t) { terms_.toggle(std::move(t)); }

  /// Sq^p(w(a) * x) = sum_{p=q+r} Sq^q(w(a)) * Sq^r(x), with Sq^q(w(a))
  /// dropped when q exceeds the degree of w(a).
  [[nodiscard]] SymbolicClass square(std::uint32_t n) const {
    SymbolicClass out(base_degree_);
    for (const auto& t : terms_) add_square_of_term(t, n, PolyMonomial{}, out);
    return out;
  }

  /// The total square sum_j Sq^j(c) x^{d-j} of a homogeneous class c of
  /// degree d, in the fresh auxiliary variable x.
  [[nodiscard]] SymbolicClass total_square(Var x) const {
    SymbolicClass out(base_degree_);
    for (const auto& t : terms_) {
      if (t.aux.exponent(x) != 0)
        throw std::invalid_argument("SymbolicClass::total_square: variable is not fresh");
      const auto d = static_cast<std::uint32_t>(degree(t));
      for (std::uint32_t j = 0; j <= d; ++j) {
        const PolyMonomial power = d - j == 0 ? PolyMonomial{} : PolyMonomial::variable(x, d - j);
        add_square_of_term(t, j, power, out);
      }
    }
    return out;
  }

  /// Coefficients grouped by auxiliary monomial.
  [[nodiscard]] std::map<PolyMonomial, AdemElement> by_monomial() const {
    std::map<PolyMonomial, AdemElement> out;
    for (const auto& t : terms_) out[t.aux].toggle(t.word);
    return out;
  }

  friend bool operator==(const SymbolicClass&, const SymbolicClass&) = default;

 private:
  void add_square_of_term(const SymbolicTerm& t, std::uint32_t n, const PolyMonomial& extra,
                          SymbolicClass& out) const {
    const auto sym_deg = symbolic_degree(t);
    for (std::uint32_t q = 0; q <= n; ++q) {
      if (q > sym_deg) break;
      const PolyElement aux_sq = sq(n - q, t.aux);
      if (aux_sq.is_zero()) continue;
      SqWord word = q == 0 ? t.word : SqWord{q} * t.word;
      for (const auto& m : aux_sq) out.terms_.toggle(SymbolicTerm{word, m * extra});
    }
  }

  std::uint32_t base_degree_;
  FormalSum<SymbolicTerm> terms_;
};

/// Auxiliary variable indices used by the derivation.
inline constexpr Var kDerivationU = 1;
inline constexpr Var kDerivationV = 2;

inline std::string derivation_variable_name(Var v) {
  if (v == kDerivationU) return "u";
  if (v == kDerivationV) return "v";
  return default_variable_name(v);
}

/// Both iterated total squares (a^u)^v and (a^v)^u of a generic degree-m
/// class.
struct IteratedSquares {
  SymbolicClass uv;
  SymbolicClass vu;
};

inline IteratedSquares iterated_total_squares(std::uint32_t m) {
  const auto a = SymbolicClass::generic(m);
  return {a.total_square(kDerivationU).total_square(kDerivationV),
          a.total_square(kDerivationV).total_square(kDerivationU)};
}

/// One relation read off from a bimonomial coefficient.
struct DerivedRelation {
  PolyMonomial witness;  // the bimonomial u^s v^r it came from (first occurrence)
  AdemElement relation;  // sum of words acting as zero on degree-m classes
};

/// Distinct nonzero relations from equating the coefficients of the two
/// iterated total squares, ordered by degree and then canonically.
inline std::vector<DerivedRelation> derive_adem_relations_with_witnesses(std::uint32_t m) {
  const auto squares = iterated_total_squares(m);
  auto lhs = squares.uv.by_monomial();
  const auto rhs = squares.vu.by_monomial();
  for (const auto& [mono, coeff] : rhs) lhs[mono] += coeff;

  std::map<AdemElement, PolyMonomial> seen;
  for (const auto& [mono, diff] : lhs) {
    if (diff.is_zero()) continue;
    seen.emplace(diff, mono);
  }
  std::vector<DerivedRelation> out;
  out.reserve(seen.size());
  for (const auto& [rel, mono] : seen) out.push_back({mono, rel});
  std::stable_sort(out.begin(), out.end(), [](const DerivedRelation& x, const DerivedRelation& y) {
    return x.relation.begin()->degree() < y.relation.begin()->degree();
  });
  return out;
}

inline std::vector<AdemElement> derive_adem_relations(std::uint32_t m) {
  std::vector<AdemElement> out;
  for (auto& r : derive_adem_relations_with_witnesses(m)) out.push_back(std::move(r.relation));
  return out;
}

}  // namespace steenrod

#endif  // STEENROD_DERIVATION_HPP

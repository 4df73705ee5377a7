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

/* Action of the Steenrod squares on F2[t_1, ..., t_k] generated by
   Sq(t) = t + t^2 and the Cartan formula. Nothing in here rewrites words,
   so `act` serves as an independent check on `normalize`. */

#ifndef STEENROD_ACTION_HPP
#define STEENROD_ACTION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "adem.hpp"
#include "f2_matrix.hpp"
#include "poly.hpp"

namespace steenrod {

/// Sq^i(t_v^n) = C(n, i) t_v^{n+i}.
inline PolyElement sq_on_power(Var v, std::uint32_t n, std::uint32_t i) {
  if (binom_mod2(n, i).is_zero()) return {};
  return poly_var(v, n + i);
}

namespace detail {

// Cartan convolution across the factors of a monomial: distribute the
// i squares over the factors, keeping only odd binomial coefficients.
inline void sq_monomial_rec(const std::vector<PolyMonomial::Factor>& fs, std::size_t k,
                            std::uint32_t remaining, std::vector<PolyMonomial::Factor>& acc,
                            PolyElement& out) {
  if (k == fs.size()) {
    if (remaining == 0) out.toggle(PolyMonomial(acc));
    return;
  }
  const auto [v, n] = fs[k];
  std::uint32_t later = 0;
  for (std::size_t r = k + 1; r < fs.size(); ++r) later += fs[r].second;
  for (std::uint32_t i = 0; i <= std::min(n, remaining); ++i) {
    if (binom_mod2(n, i).is_zero()) continue;
    if (remaining - i > later) continue;  // later factors can absorb at most their degree
    acc.emplace_back(v, n + i);
    sq_monomial_rec(fs, k + 1, remaining - i, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

inline PolyElement sq(std::uint32_t i, const PolyMonomial& m) {
  PolyElement out;
  if (i > m.degree()) return out;
  std::vector<PolyMonomial::Factor> acc;
  acc.reserve(m.factors().size());
  detail::sq_monomial_rec(m.factors(), 0, i, acc, out);
  return out;
}

/// Sq^i extended additively.
inline PolyElement sq(std::uint32_t i, const PolyElement& p) {
  if (i == 0) return p;
  PolyElement out;
  for (const auto& m : p) out += sq(i, m);
  return out;
}

/// Applies each word right to left and sums the results.
inline PolyElement act(const SqWord& w, const PolyElement& p) {
  PolyElement cur = p;
  const auto& x = w.exponents();
  for (auto it = x.rbegin(); it != x.rend() && !cur.is_zero(); ++it) cur = sq(*it, cur);
  return cur;
}

inline PolyElement act(const AdemElement& e, const PolyElement& p) {
  PolyElement out;
  for (const auto& w : e) out += act(w, p);
  return out;
}

/// sum_{i=0}^{m} Sq^i(p) u^{m-i} for p homogeneous of degree m, u fresh.
inline PolyElement total_sq(const PolyElement& p, Var u) {
  if (!is_homogeneous(p)) throw std::invalid_argument("total_sq: input is not homogeneous");
  if (u == 0) throw std::invalid_argument("total_sq: variable indices start at 1");
  if (uses_variable(p, u)) throw std::invalid_argument("total_sq: variable already occurs in input");
  if (p.is_zero()) return {};
  const auto m = static_cast<std::uint32_t>(*homogeneous_degree(p));
  PolyElement out;
  for (std::uint32_t i = 0; i <= m; ++i) {
    const PolyElement s = sq(i, p);
    out += m - i == 0 ? s : cup(s, poly_var(u, m - i));
  }
  return out;
}

/// Reads Sq^i(p) back out of total_sq(p, u); u must not occur in p.
inline PolyElement extract_square(const PolyElement& total, Var u, std::uint32_t m, std::uint32_t i) {
  if (i > m) return {};
  return coefficient_of_power(total, u, m - i);
}

/// total_sq(p q) == total_sq(p) total_sq(q).
inline bool check_total_sq_multiplicative(const PolyElement& p, const PolyElement& q) {
  const Var u = std::max(max_variable(p), max_variable(q)) + 1;
  return total_sq(cup(p, q), u) == cup(total_sq(p, u), total_sq(q, u));
}

/// For each t_j, j <= k: total_sq(t_j, u) vanishes after u := t_j.
inline bool check_tautological_vanishing(Var k) {
  const Var u = k + 1;
  for (Var j = 1; j <= k; ++j)
    if (!substitute_variable(total_sq(poly_var(j), u), u, j).is_zero()) return false;
  return true;
}

/// Sq^0 on a degree-one class is multiplication by a scalar c. Combining
/// the vanishing of total_sq(t, u) at u = t with Sq^1(t) = t^2 leaves
/// c t^2 + t^2 = 0; returns every c in F2 that solves it.
inline std::vector<F2> solve_sq0_scalar_on_degree_one() {
  const Var t = 1;
  const PolyElement top = cup(poly_var(t), poly_var(t));  // Sq^1 t = t ^ t
  std::vector<F2> solutions;
  for (F2 c : {F2::zero(), F2::one()}) {
    PolyElement sq0 = c.is_one() ? poly_var(t) : PolyElement{};
    // total square at u := t is Sq^0(t) t + Sq^1(t)
    if ((cup(sq0, poly_var(t)) + top).is_zero()) solutions.push_back(c);
  }
  return solutions;
}

/// Rank over F2 of the rows act(w, t_1 ... t_d), w ranging over the
/// admissible basis in degree d.
inline std::size_t faithful_rank(std::uint32_t d) {
  const auto basis = admissible_basis(d);
  const PolyElement probe{product_of_variables(d)};
  std::vector<PolyElement> rows;
  rows.reserve(basis.size());
  std::map<PolyMonomial, std::size_t> columns;
  for (const auto& w : basis) {
    rows.push_back(act(w, probe));
    for (const auto& m : rows.back()) columns.emplace(m, 0);
  }
  std::size_t idx = 0;
  for (auto& [m, c] : columns) c = idx++;
  F2Matrix mat(rows.size(), columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& m : rows[r]) mat.set(r, columns.at(m), F2::one());
  return mat.rank();
}

}  // namespace steenrod

#endif  // STEENROD_ACTION_HPP

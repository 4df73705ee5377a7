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

/* The mod 2 Steenrod algebra presented by composable words in the squares
   Sq^i, reduced to the admissible basis by the Adem relations

       Sq^a Sq^b = sum_{c=0}^{a/2} C(b-c-1, a-2c) Sq^{a+b-c} Sq^c,  a < 2b.

   Sq^0 is the identity and is never stored inside a word. */

#ifndef STEENROD_ADEM_HPP
#define STEENROD_ADEM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"

namespace steenrod {

/// A composition Sq^{i_1} o ... o Sq^{i_k}, applied right to left. Every
/// exponent is positive; the empty word is the identity.
class SqWord {
 public:
  using exponent_type = std::uint32_t;

  SqWord() = default;
  SqWord(std::initializer_list<exponent_type> exps) : SqWord(std::vector<exponent_type>(exps)) {}
  explicit SqWord(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
    if (std::find(exps_.begin(), exps_.end(), 0U) != exps_.end())
      throw std::invalid_argument("SqWord: Sq^0 must not appear inside a word");
  }

  /// Builds a word from exponents that may contain zeros (dropped as Sq^0 = id).
  static SqWord from_exponents(const std::vector<exponent_type>& exps) {
    std::vector<exponent_type> kept;
    kept.reserve(exps.size());
    for (auto e : exps)
      if (e != 0) kept.push_back(e);
    return SqWord(std::move(kept));
  }

  [[nodiscard]] const std::vector<exponent_type>& exponents() const noexcept { return exps_; }
  [[nodiscard]] std::size_t length() const noexcept { return exps_.size(); }
  [[nodiscard]] bool empty() const noexcept { return exps_.empty(); }
  [[nodiscard]] exponent_type operator[](std::size_t i) const { return exps_.at(i); }

  [[nodiscard]] std::uint64_t degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }

  /// max(0, i_1 - (i_2 + ... + i_k)); zero for the empty word.
  [[nodiscard]] std::uint64_t excess() const noexcept {
    if (exps_.empty()) return 0;
    const std::uint64_t first = exps_.front();
    const std::uint64_t rest = degree() - first;
    return first > rest ? first - rest : 0;
  }

  /// Position of the first adjacent pair with i_j < 2 i_{j+1}, or length().
  [[nodiscard]] std::size_t first_inadmissible_pair() const noexcept {
    for (std::size_t j = 0; j + 1 < exps_.size(); ++j)
      if (exps_[j] < 2 * exps_[j + 1]) return j;
    return exps_.size();
  }

  [[nodiscard]] bool is_admissible() const noexcept { return first_inadmissible_pair() == exps_.size(); }

  /// Composition `*this o rhs`.
  friend SqWord operator*(const SqWord& lhs, const SqWord& rhs) {
    SqWord out;
    out.exps_ = lhs.exps_;
    out.exps_.insert(out.exps_.end(), rhs.exps_.begin(), rhs.exps_.end());
    return out;
  }

  friend bool operator==(const SqWord&, const SqWord&) = default;

  /// Canonical order: degree, then length, then lexicographic exponents.
  friend bool operator<(const SqWord& a, const SqWord& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    if (a.exps_.size() != b.exps_.size()) return a.exps_.size() < b.exps_.size();
    return a.exps_ < b.exps_;
  }

 private:
  std::vector<exponent_type> exps_;
};

/// An F2-linear combination of words; possibly inhomogeneous.
using AdemElement = FormalSum<SqWord>;

inline std::uint64_t degree(const SqWord& w) noexcept { return w.degree(); }
inline std::uint64_t excess(const SqWord& w) noexcept { return w.excess(); }
inline bool is_admissible(const SqWord& w) noexcept { return w.is_admissible(); }

/// True iff every word of `e` is admissible.
inline bool is_admissible(const AdemElement& e) {
  return std::all_of(e.begin(), e.end(), [](const SqWord& w) { return w.is_admissible(); });
}

/// Degrees occurring in `e`, ascending.
inline std::vector<std::uint64_t> degrees(const AdemElement& e) {
  std::set<std::uint64_t> ds;
  for (const auto& w : e) ds.insert(w.degree());
  return {ds.begin(), ds.end()};
}

/// Thrown when normalization runs past its rewrite budget.
class StepBudgetExceeded : public std::runtime_error {
 public:
  explicit StepBudgetExceeded(std::size_t budget)
      : std::runtime_error("step-budget exceeded: more than " + std::to_string(budget) +
                           " Adem rewrites"),
        budget_(budget) {}
  [[nodiscard]] std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

struct NormalizeOptions {
  std::size_t step_budget = 1'000'000;
};

/// The Adem expansion of Sq^a Sq^b. Requires 1 <= a < 2b.
inline AdemElement adem_rewrite(SqWord::exponent_type a, SqWord::exponent_type b) {
  if (a < 1 || a >= 2 * b)
    throw std::domain_error("adem_rewrite: requires 1 <= a < 2b, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
  AdemElement out;
  for (SqWord::exponent_type c = 0; c <= a / 2; ++c)
    if (adem_coeff(a, b, c).is_one()) out.toggle(SqWord::from_exponents({a + b - c, c}));
  return out;
}

namespace detail {

// Pure lexicographic order on exponent sequences. Rewriting the first
// inadmissible pair (a, b) replaces a by a+b-c > a while keeping the prefix,
// so every produced word is strictly larger in this order than its source.
struct LexWordLess {
  bool operator()(const SqWord& x, const SqWord& y) const { return x.exponents() < y.exponents(); }
};

}  // namespace detail

/// Reduces `e` to a sum of admissible words.
///
/// Inadmissible words are kept in a worklist ordered lexicographically and
/// the smallest is rewritten at its leftmost inadmissible pair. Because each
/// rewrite only produces lexicographically larger words, every word is
/// expanded at most once and all cancellation happens before expansion.
inline AdemElement normalize(const AdemElement& e, const NormalizeOptions& opts = {}) {
  AdemElement done;
  FormalSum<SqWord, detail::LexWordLess> pending;
  for (const auto& w : e) {
    if (w.is_admissible())
      done.toggle(w);
    else
      pending.toggle(w);
  }

  std::size_t steps = 0;
  while (!pending.is_zero()) {
    const SqWord w = *pending.begin();
    pending.toggle(w);
    if (++steps > opts.step_budget) throw StepBudgetExceeded(opts.step_budget);

    const auto& x = w.exponents();
    const std::size_t j = w.first_inadmissible_pair();
    const AdemElement replacement = adem_rewrite(x[j], x[j + 1]);
    for (const auto& r : replacement) {
      std::vector<SqWord::exponent_type> spliced(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j));
      spliced.insert(spliced.end(), r.exponents().begin(), r.exponents().end());
      spliced.insert(spliced.end(), x.begin() + static_cast<std::ptrdiff_t>(j + 2), x.end());
      SqWord next(std::move(spliced));
      if (next.is_admissible())
        done.toggle(std::move(next));
      else
        pending.toggle(std::move(next));
    }
  }
  return done;
}

inline AdemElement normalize(const SqWord& w, const NormalizeOptions& opts = {}) {
  return normalize(AdemElement{w}, opts);
}

/// Normal form of the operation `e` restricted to classes of degree m: the
/// admissible form with every word of excess > m removed, since such words
/// annihilate classes of degree m.
inline AdemElement normalize_on_degree(const AdemElement& e, std::uint64_t m,
                                       const NormalizeOptions& opts = {}) {
  AdemElement out;
  for (const auto& w : normalize(e, opts))
    if (w.excess() <= m) out.toggle(w);
  return out;
}

/// Composition product `lhs o rhs`, normalized.
inline AdemElement product(const AdemElement& lhs, const AdemElement& rhs,
                           const NormalizeOptions& opts = {}) {
  AdemElement raw;
  for (const auto& a : lhs)
    for (const auto& b : rhs) raw.toggle(a * b);
  return normalize(raw, opts);
}

/// All admissible words of degree `d` in canonical order.
inline std::vector<SqWord> admissible_basis(std::uint32_t d) {
  std::vector<SqWord> out;
  std::vector<SqWord::exponent_type> prefix;
  auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t cap) -> void {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (std::uint32_t i = 1; i <= std::min(remaining, cap); ++i) {
      prefix.push_back(i);
      self(self, remaining - i, i / 2);
      prefix.pop_back();
    }
  };
  rec(rec, d, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// "Sq3 Sq1"; the empty word prints as "1".
inline std::string to_string(const SqWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) s += ' ';
    s += "Sq" + std::to_string(w[i]);
  }
  return s;
}

/// "Sq3 Sq1 + Sq4"; zero prints as "0".
inline std::string to_string(const AdemElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& w : e) {
    if (!s.empty()) s += " + ";
    s += to_string(w);
  }
  return s;
}

}  // namespace steenrod

#endif  // STEENROD_ADEM_HPP

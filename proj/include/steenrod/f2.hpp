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

#ifndef STEENROD_F2_HPP
#define STEENROD_F2_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <utility>

namespace steenrod {

/// An element of the field with two elements.
class F2 {
  bool value_ = false;

 public:
  constexpr F2() noexcept = default;
  constexpr explicit F2(bool v) noexcept : value_(v) {}

  static constexpr F2 zero() noexcept { return F2(false); }
  static constexpr F2 one() noexcept { return F2(true); }

  [[nodiscard]] constexpr bool is_one() const noexcept { return value_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return !value_; }
  constexpr explicit operator bool() const noexcept { return value_; }

  friend constexpr F2 operator+(F2 a, F2 b) noexcept { return F2(a.value_ != b.value_); }
  friend constexpr F2 operator-(F2 a, F2 b) noexcept { return a + b; }
  friend constexpr F2 operator*(F2 a, F2 b) noexcept { return F2(a.value_ && b.value_); }
  constexpr F2& operator+=(F2 b) noexcept { return *this = *this + b; }
  constexpr F2& operator*=(F2 b) noexcept { return *this = *this * b; }
  friend constexpr bool operator==(F2, F2) noexcept = default;
};

/// C(n, k) mod 2. By Lucas, odd exactly when the bits of k are a subset of
/// the bits of n; this also yields 0 for k > n.
[[nodiscard]] constexpr F2 binom_mod2(std::uint64_t n, std::uint64_t k) noexcept {
  return F2((k & ~n) == 0);
}

/// Coefficient of Sq^{a+b-c} Sq^c in the Adem expansion of Sq^a Sq^b, i.e.
/// C(b-c-1, a-2c) mod 2. Negative arguments give 0.
[[nodiscard]] constexpr F2 adem_coeff(std::int64_t a, std::int64_t b, std::int64_t c) noexcept {
  const std::int64_t top = b - c - 1;
  const std::int64_t bottom = a - 2 * c;
  if (top < 0 || bottom < 0) return F2::zero();
  return binom_mod2(static_cast<std::uint64_t>(top), static_cast<std::uint64_t>(bottom));
}

/// A finite formal sum over F2: a set of basis terms where adding a term
/// that is already present removes it. Iteration follows `Compare`.
template <class B, class Compare = std::less<B>>
class FormalSum {
 public:
  using term_type = B;
  using container_type = std::set<B, Compare>;
  using const_iterator = typename container_type::const_iterator;

  FormalSum() = default;
  FormalSum(std::initializer_list<B> terms) {
    for (const auto& t : terms) toggle(t);
  }
  template <class It>
  FormalSum(It first, It last) {
    for (; first != last; ++first) toggle(*first);
  }

  /// Adds a single term with coefficient 1.
  void toggle(const B& term) {
    auto [it, inserted] = terms_.insert(term);
    if (!inserted) terms_.erase(it);
  }
  void toggle(B&& term) {
    auto it = terms_.find(term);
    if (it != terms_.end())
      terms_.erase(it);
    else
      terms_.insert(std::move(term));
  }

  [[nodiscard]] bool contains(const B& term) const { return terms_.count(term) != 0; }
  [[nodiscard]] F2 coefficient(const B& term) const { return F2(contains(term)); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const_iterator begin() const noexcept { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return terms_.end(); }
  [[nodiscard]] const container_type& terms() const noexcept { return terms_; }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& t : other.terms_) toggle(t);
    return *this;
  }
  friend FormalSum operator+(FormalSum lhs, const FormalSum& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend FormalSum operator-(FormalSum lhs, const FormalSum& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const FormalSum& a, const FormalSum& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                        b.terms_.end(), Compare{});
  }

 private:
  container_type terms_;
};

/// Free-function spelling of `x + y`.
template <class B, class C>
[[nodiscard]] FormalSum<B, C> sum_add(const FormalSum<B, C>& x, const FormalSum<B, C>& y) {
  return x + y;
}

}  // namespace steenrod

#endif  // STEENROD_F2_HPP

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "steenrod/action.hpp"
#include "steenrod/poly.hpp"
#include "test_support.hpp"

using namespace steenrod;
using steenrod::testing::monomials_of_degree;
using steenrod::testing::monomials_up_to_degree;
using steenrod::testing::random_poly;

namespace {

PolyElement t(Var v, std::uint32_t e = 1) { return poly_var(v, e); }

PolyElement power(const PolyElement& p, std::uint32_t n) {
  PolyElement out = poly_one();
  for (std::uint32_t k = 0; k < n; ++k) out = cup(out, p);
  return out;
}

PolyElement degree_part(const PolyElement& p, std::uint64_t d) {
  PolyElement out;
  for (const auto& m : p)
    if (m.degree() == d) out.toggle(m);
  return out;
}

// Oracle for Sq^i on a monomial that uses only ring multiplication: the
// total square of t_v is t_v + t_v^2, and the total square is multiplicative,
// so Sq^i(prod t_v^{n_v}) is the degree (|m| + i) part of prod (t_v + t_v^2)^{n_v}.
PolyElement sq_oracle(std::uint32_t i, const PolyMonomial& m) {
  PolyElement total = poly_one();
  for (const auto& [v, n] : m.factors()) total = cup(total, power(t(v) + t(v, 2), n));
  return degree_part(total, m.degree() + i);
}

}  // namespace

TEST_CASE("cup", "[poly]") {
  CHECK(cup(t(1), t(1)) == t(1, 2));
  CHECK(cup(t(1) + t(2), t(1) + t(2)) == t(1, 2) + t(2, 2));
  const auto p = t(1, 3) + cup(t(2), t(3));
  CHECK(cup(p, poly_one()) == p);
  CHECK(cup(p, PolyElement{}).is_zero());
}

TEST_CASE("cup is commutative and associative", "[poly][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 3, rng() % 4, 3);
    const auto b = random_poly(rng, 3, rng() % 4, 3);
    const auto c = random_poly(rng, 3, rng() % 4, 3);
    CHECK(cup(a, b) == cup(b, a));
    CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
    CHECK(cup(a, b + c) == cup(a, b) + cup(a, c));
  }
}

TEST_CASE("monomial order is graded lexicographic", "[poly]") {
  const auto m = [](std::vector<PolyMonomial::Factor> f) { return PolyMonomial(std::move(f)); };
  CHECK(m({}) < m({{1, 1}}));
  CHECK(m({{1, 2}}) < m({{1, 1}, {2, 1}}));
  CHECK(m({{1, 1}, {2, 1}}) < m({{2, 2}}));
  CHECK(m({{3, 1}}) < m({{1, 2}}));
  CHECK(to_string(cup(t(1, 3), t(2)) + t(2, 4)) == "t1^3*t2 + t2^4");
}

TEST_CASE("sq_on_power examples", "[action]") {
  CHECK(sq_on_power(1, 1, 1) == t(1, 2));
  CHECK(sq_on_power(1, 5, 0) == t(1, 5));
  CHECK(sq_on_power(1, 2, 3).is_zero());
  CHECK(sq_on_power(1, 3, 2) == t(1, 5));
  CHECK(sq_on_power(1, 2, 1).is_zero());
}

TEST_CASE("sq_on_power matches the Cartan expansion of t*...*t", "[action][oracle]") {
  for (std::uint32_t n = 0; n <= 20; ++n)
    for (std::uint32_t i = 0; i <= 22; ++i)
      CHECK(sq_on_power(2, n, i) == sq_oracle(i, PolyMonomial::variable(2, n)));
}

TEST_CASE("sq examples", "[action]") {
  const auto t1t2 = cup(t(1), t(2));
  CHECK(sq(1, t1t2) == cup(t(1, 2), t(2)) + cup(t(1), t(2, 2)));
  CHECK(sq(2, t1t2) == cup(t(1, 2), t(2, 2)));
  const auto p = t(1, 3) + t1t2;
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(sq(i, p + p).is_zero());
}

TEST_CASE("sq agrees with the multiplicative oracle on all small monomials", "[action][oracle]") {
  for (const auto& m : monomials_up_to_degree(4, 6))
    for (std::uint32_t i = 0; i <= 8; ++i) {
      INFO("Sq" << i << " " << to_string(m));
      CHECK(sq(i, m) == sq_oracle(i, m));
    }
}

TEST_CASE("act examples", "[action]") {
  CHECK(act(SqWord{1, 1}, t(1)).is_zero());
  const auto p = t(1, 2) + t(2, 3);
  CHECK(act(AdemElement{SqWord{}}, p) == p);
  CHECK(act(AdemElement{}, p).is_zero());
  const PolyElement probe{product_of_variables(4)};
  CHECK(act(SqWord{2, 2}, probe) == act(SqWord{3, 1}, probe));
  CHECK_FALSE(act(SqWord{2, 2}, probe).is_zero());
}

TEST_CASE("Cartan formula, instability, top square, pointedness", "[action][axioms]") {
  const auto monos = monomials_up_to_degree(3, 8);
  for (const auto& p : monos) {
    const PolyElement P{p};
    const auto m = static_cast<std::uint32_t>(p.degree());
    CHECK(sq(0, P) == P);
    for (std::uint32_t n = m + 1; n <= m + 3; ++n) CHECK(sq(n, P).is_zero());
    if (m <= 6) CHECK(sq(m, P) == cup(P, P));
    for (std::uint32_t n = 0; n <= 8; ++n) {
      CHECK(sq(n, PolyElement{}).is_zero());
      const auto s = sq(n, P);
      if (!s.is_zero()) CHECK(homogeneous_degree(s) == p.degree() + n);
    }
  }
  for (const auto& p : monos)
    for (const auto& q : monos) {
      if (p.degree() + q.degree() > 8) continue;
      const PolyElement P{p}, Q{q};
      for (std::uint32_t n = 0; n <= 8; ++n) {
        PolyElement rhs;
        for (std::uint32_t i = 0; i <= n; ++i) rhs += cup(sq(i, P), sq(n - i, Q));
        CHECK(sq(n, cup(P, Q)) == rhs);
      }
    }
}

TEST_CASE("sq is additive", "[action][property]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = static_cast<std::uint32_t>(rng() % 6);
    const auto a = random_poly(rng, 3, d, 4), b = random_poly(rng, 3, d, 4);
    for (std::uint32_t n = 0; n <= d; ++n) CHECK(sq(n, a + b) == sq(n, a) + sq(n, b));
  }
}

TEST_CASE("total_sq examples", "[action][total]") {
  const Var u = 9;
  CHECK(total_sq(t(1), u) == cup(t(1), t(u)) + t(1, 2));
  CHECK(total_sq(poly_one(), u) == poly_one());
  CHECK(total_sq(t(1, 2), u) == cup(t(1, 2), t(u, 2)) + t(1, 4));
  CHECK(total_sq(PolyElement{}, u).is_zero());
}

TEST_CASE("total_sq rejects bad input", "[action][total]") {
  CHECK_THROWS_AS(total_sq(t(1) + t(1, 2), 5), std::invalid_argument);
  CHECK_THROWS_AS(total_sq(t(1), 1), std::invalid_argument);
}

TEST_CASE("coefficients of total_sq are the individual squares", "[action][total][property]") {
  const Var u = 7;
  std::mt19937_64 rng(12);
  for (std::uint32_t m = 0; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_poly(rng, 4, m, 3);
      const auto total = total_sq(p, u);
      if (!p.is_zero()) CHECK(homogeneous_degree(total) == 2 * m);
      for (std::uint32_t i = 0; i <= m; ++i) CHECK(extract_square(total, u, m, i) == sq(i, p));
    }
  }
}

TEST_CASE("total square is multiplicative", "[action][total]") {
  CHECK(check_total_sq_multiplicative(t(1), t(1)));
  CHECK(check_total_sq_multiplicative(poly_one(), t(2, 3) + t(1, 3)));
  CHECK(check_total_sq_multiplicative(t(1), t(2)));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng, 3, rng() % 4, 3);
    const auto q = random_poly(rng, 3, rng() % 4, 3);
    CHECK(check_total_sq_multiplicative(p, q));
  }
}

TEST_CASE("tautological class squares to zero", "[action][total]") {
  CHECK(check_tautological_vanishing(0));
  CHECK(check_tautological_vanishing(1));
  CHECK(check_tautological_vanishing(2));
  CHECK(check_tautological_vanishing(6));
}

TEST_CASE("Sq0 is forced to be the identity on degree one", "[action][total]") {
  const auto cs = solve_sq0_scalar_on_degree_one();
  REQUIRE(cs.size() == 1);
  CHECK(cs.front() == F2::one());
  // and the u^1 coefficient of total_sq(t, u) is indeed 1 * t
  CHECK(extract_square(total_sq(t(1), 2), 2, 1, 0) == t(1));
}

TEST_CASE("faithful_rank", "[action][faithful]") {
  CHECK(faithful_rank(0) == 1);
  CHECK(faithful_rank(1) == 1);
  CHECK(faithful_rank(3) == 2);
  for (std::uint32_t d = 0; d <= 8; ++d) CHECK(faithful_rank(d) == admissible_basis(d).size());
}

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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. With a criterion number as the only
// argument, runs just that criterion.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "steenrod/steenrod.hpp"
#include "test_support.hpp"

namespace {

using namespace steenrod;
using steenrod::testing::all_words;
using steenrod::testing::monomials_of_degree;
using steenrod::testing::monomials_up_to_degree;
using steenrod::testing::random_element;

// Pinned limits. All comparisons are exact equalities over F2.
constexpr std::uint32_t kSoundnessMaxDegree = 10;
constexpr std::size_t kSoundnessMaxLength = 4;
constexpr std::uint32_t kProbeMaxDegree = 6;
constexpr Var kProbeVariables = 3;
constexpr std::uint32_t kAxiomMaxDegree = 8;
constexpr std::uint32_t kAdemMaxTotal = 10;
constexpr std::uint32_t kDerivationMaxM = 6;
constexpr std::uint32_t kFaithfulMaxDegree = 8;
constexpr int kRandomTrials = 10'000;
constexpr std::uint32_t kRandomMaxDegree = 14;
constexpr std::uint32_t kCatalogMaxDegree = 10;
constexpr double kSeparationSeconds = 1.0;
constexpr double kSuiteSeconds = 60.0;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void adem_soundness(Outcome& out) {
  const auto probes = monomials_up_to_degree(kProbeVariables, kProbeMaxDegree);
  std::size_t words = 0;
  for (const auto& w : all_words(kSoundnessMaxDegree, kSoundnessMaxLength)) {
    ++words;
    const auto nf = normalize(w);
    for (const auto& m : probes) {
      const PolyElement p{m};
      out.require(act(w, p) == act(nf, p), to_string(w) + " on " + to_string(p));
    }
  }
  out.note << words << " words x " << probes.size() << " monomials";
}

void axiom_suite(Outcome& out) {
  const auto monos = monomials_up_to_degree(kProbeVariables, kAxiomMaxDegree);
  std::size_t checks = 0;
  for (const auto& m : monos) {
    const PolyElement p{m};
    const auto d = static_cast<std::uint32_t>(m.degree());
    ++checks;
    out.require(sq(0, p) == p, "I1 on " + to_string(p));
    for (std::uint32_t n = d + 1; n <= kAxiomMaxDegree + 1; ++n) {
      ++checks;
      out.require(sq(n, p).is_zero(), "I2 on " + to_string(p));
    }
    ++checks;
    out.require(sq(d, p) == cup(p, p), "I3 on " + to_string(p));
  }
  for (const auto& a : monos)
    for (const auto& b : monos) {
      if (a.degree() + b.degree() > kAxiomMaxDegree) continue;
      const PolyElement p{a}, q{b};
      for (std::uint32_t n = 0; n <= a.degree() + b.degree(); ++n) {
        PolyElement rhs;
        for (std::uint32_t i = 0; i <= n; ++i) rhs += cup(sq(i, p), sq(n - i, q));
        ++checks;
        out.require(sq(n, cup(p, q)) == rhs, "C on " + to_string(p) + ", " + to_string(q));
      }
    }
  const auto probes = monomials_up_to_degree(kProbeVariables, kProbeMaxDegree);
  for (std::uint32_t k = 1; k < kAdemMaxTotal; ++k)
    for (std::uint32_t n = 1; n < 2 * k && n + k <= kAdemMaxTotal; ++n) {
      AdemElement rhs;
      for (std::uint32_t i = 0; i <= n / 2; ++i)
        if (adem_coeff(n, k, i).is_one()) rhs.toggle(SqWord::from_exponents({n + k - i, i}));
      for (const auto& m : probes) {
        ++checks;
        out.require(act(SqWord{n, k}, PolyElement{m}) == act(rhs, PolyElement{m}),
                    "A for Sq" + std::to_string(n) + " Sq" + std::to_string(k));
      }
    }
  out.note << checks << " instances";
}

void derivation(Outcome& out) {
  std::size_t total = 0, stable_nonzero = 0, unstable_nonzero = 0, stable_range = 0, action_checks = 0;
  std::string example;
  for (std::uint32_t m = 1; m <= kDerivationMaxM; ++m) {
    const auto rels = derive_adem_relations(m);
    out.require(!rels.empty(), "empty relation set for m = " + std::to_string(m));
    const auto probes = monomials_of_degree(2 * kProbeVariables, m);
    for (const auto& r : rels) {
      ++total;
      const auto nf = normalize(r);
      if (!nf.is_zero()) {
        ++stable_nonzero;
        if (example.empty()) example = to_string(r) + " -> " + to_string(nf) + " at m = " + std::to_string(m);
      }
      if (!normalize_on_degree(r, m).is_zero()) ++unstable_nonzero;
      if (r.begin()->degree() <= m) {
        ++stable_range;
        out.require(nf.is_zero(), "stable-range relation " + to_string(r));
      }
      for (const auto& mono : probes) {
        ++action_checks;
        out.require(act(r, PolyElement{mono}).is_zero(), to_string(r) + " on " + to_string(mono));
      }
    }
  }
  std::vector<AdemElement> degree_two;
  for (const auto& r : derive_adem_relations(1))
    if (r.begin()->degree() == 2) degree_two.push_back(r);
  out.require(degree_two.size() == 1 && degree_two.front() == AdemElement{SqWord{1, 1}},
              "m = 1 degree-2 outputs are not exactly {Sq1 Sq1}");
  out.require(unstable_nonzero == 0, "a relation survives on its own degree");
  out.require(stable_nonzero == 0, std::to_string(stable_nonzero) + " of " + std::to_string(total) +
                                       " relations have a nonzero normal form, e.g. " + example);
  out.note << total << " relations; " << unstable_nonzero << " nonzero on degree m; " << stable_range
           << " in the stable range; " << action_checks << " action checks";
}

void total_square_shadow(Outcome& out) {
  const Var t = 1, u = 2;
  const auto total = total_sq(poly_var(t), u);
  out.require(total == cup(poly_var(t), poly_var(u)) + poly_var(t, 2), "total_sq(t, u) = " + to_string(total));
  out.require(substitute_variable(total, u, t).is_zero(), "substituting u := t is nonzero");
  out.require(extract_square(total, u, 1, 0) == poly_var(t), "coefficient of u is not t");
  const auto scalars = solve_sq0_scalar_on_degree_one();
  out.require(scalars.size() == 1 && scalars.front() == F2::one(), "Sq0 scalar is not forced to 1");
  out.note << "total_sq(t,u) = " << to_string(total) << "; c = 1";
}

void separation(Outcome& out) {
  const auto t0 = Clock::now();
  const auto r = distinguish_susp_cp2();
  const double secs = seconds_since(t0);
  out.require(r.first_rank == 1, "rank on " + r.first_name);
  out.require(r.second_rank == 0, "rank on " + r.second_name);
  out.require(r.distinct, "modules not distinguished");
  out.require(!r.conclusion.empty() && r.conclusion.back() == "π₄(S³) ≠ 0", "conclusion line");
  out.require(secs < kSeparationSeconds, "took " + std::to_string(secs) + " s");
  out.note << "ranks " << r.first_rank << " and " << r.second_rank << " in " << secs << " s";
}

void faithfulness(Outcome& out) {
  for (std::uint32_t d = 0; d <= kFaithfulMaxDegree; ++d) {
    const auto rank = faithful_rank(d);
    const auto size = admissible_basis(d).size();
    out.require(rank == size, "degree " + std::to_string(d));
    out.note << rank << (d < kFaithfulMaxDegree ? "," : "");
  }
}

std::vector<GradedModule> catalog() {
  std::vector<GradedModule> base;
  for (std::uint32_t n = 1; n <= 8; ++n) base.push_back(sphere(n));
  for (std::uint32_t n = 1; n <= 8; ++n) base.push_back(real_proj(n));
  for (std::uint32_t n = 1; n <= 3; ++n) base.push_back(complex_proj(n));
  std::vector<GradedModule> all = base;
  for (const auto& a : base) all.push_back(suspend(a));
  for (const auto& a : base)
    for (const auto& b : base) all.push_back(wedge(a, b));
  return all;
}

void structural(Outcome& out) {
  std::mt19937_64 rng(0xace);
  for (int k = 0; k < kRandomTrials; ++k) {
    const auto e = random_element(rng, kRandomMaxDegree, 6, 4);
    const auto n = normalize(e);
    out.require(normalize(n) == n && is_admissible(n), "idempotence on " + to_string(e));
  }
  for (int k = 0; k < kRandomTrials; ++k) {
    const auto e = random_element(rng, kRandomMaxDegree, 6, 4, false);
    out.require(parse_sq(to_string(e)) == e, "round trip of " + to_string(e));
  }
  const auto mods = catalog();
  for (const auto& M : mods) out.require(verify_axioms(M, kCatalogMaxDegree).passed(), "verify " + M.name());

  auto corrupt = real_proj(8);
  corrupt.set_name("corrupt-rp8");
  corrupt.set_sq(0, 1, generator_element(0));
  out.require(!verify_axioms(corrupt, kCatalogMaxDegree).passed(), "negative control passed");
  out.note << kRandomTrials << " idempotence, " << kRandomTrials << " round trips, " << mods.size()
           << " catalog modules, negative control rejected";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "adem-soundness", adem_soundness},     {2, "axiom-suite", axiom_suite},
      {3, "adem-derivation", derivation},        {4, "total-square", total_square_shadow},
      {5, "pi4-separation", separation},         {6, "faithfulness", faithfulness},
      {7, "structural", structural},
  };
  int only = 0;
  if (argc == 2) only = std::atoi(argv[1]);
  if (argc > 2 || only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: acceptance [criterion 1-" << criteria.size() << "]\n";
    return 2;
  }

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome out;
    const auto t0 = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    out.require(secs < kSuiteSeconds, "exceeded " + std::to_string(kSuiteSeconds) + " s");
    all_ok = all_ok && out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << secs << " s): "
              << out.note.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}

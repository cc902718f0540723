// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bk/errors.hpp"
#include "bk/robust_hard.hpp"

using bk::BigInt;
using bk::Items;
using bk::Rat;
using bk::SubsetSumInstance;
using bk::TiePolicy;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.push_back(BigInt(x));
  return out;
}

// Direct exponential subset-sum decision.
bool subset_sum_brute(const std::vector<BigInt>& w, const BigInt& target) {
  const std::size_t m = w.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t(1) << i)) s += w[i];
    }
    if (s == target) return true;
  }
  return false;
}

SubsetSumInstance random_ss(std::mt19937& gen, int max_m, int max_w) {
  std::uniform_int_distribution<int> mdist(1, max_m);
  std::uniform_int_distribution<int> wdist(1, max_w);
  SubsetSumInstance ss;
  const int m = mdist(gen);
  BigInt total = 0;
  for (int i = 0; i < m; ++i) {
    ss.w.push_back(BigInt(wdist(gen)));
    total += ss.w.back();
  }
  if (total < 2) {
    ss.w.push_back(BigInt(2));
    total += 2;
  }
  std::uniform_int_distribution<long> tdist(1, static_cast<long>(total) - 1);
  ss.target = BigInt(tdist(gen));
  return ss;
}

}  // namespace

TEST_CASE("scenario expansion of a product set") {
  bk::ProductFiniteUncertainty u{{{Rat(1), Rat(2)}, {Rat(3)}, {Rat(4), Rat(5)}}};
  auto scenarios = bk::expand_product(u);
  REQUIRE(scenarios.size() == 4);
  CHECK(scenarios[0] == std::vector<Rat>{Rat(1), Rat(3), Rat(4)});
  CHECK(scenarios[3] == std::vector<Rat>{Rat(2), Rat(3), Rat(5)});
  bk::ProductFiniteUncertainty big;
  for (int i = 0; i < 25; ++i) big.options.push_back({Rat(1), Rat(2)});
  CHECK_THROWS_AS(bk::expand_product(big), bk::BudgetError);
}

TEST_CASE("product reduction instance layout") {
  SubsetSumInstance ss{ints({1, 2}), BigInt(2)};
  bk::GadgetProduct g = bk::gen_gadget_product(ss);
  CHECK(g.items.a ==
        std::vector<Rat>{Rat(1, 4), Rat(1), Rat(2), Rat(13, 4)});
  CHECK(g.items.d ==
        std::vector<Rat>{Rat(-13, 4), Rat(-1), Rat(-2), Rat(1, 4)});
  CHECK(g.range.b_lo == Rat(2));
  CHECK(g.range.b_hi == Rat(5, 2));
  // Option sets are i*a_i and (n+i)*a_i with 1-based i.
  CHECK(g.u.options[0] == std::vector<Rat>{Rat(1, 4), Rat(5, 4)});
  CHECK(g.u.options[3] == std::vector<Rat>{Rat(13), Rat(26)});

  SubsetSumInstance single{ints({2}), BigInt(1)};
  bk::GadgetProduct g1 = bk::gen_gadget_product(single);
  CHECK(g1.items.a == std::vector<Rat>{Rat(1, 4), Rat(2), Rat(9, 4)});

  CHECK_THROWS_AS(bk::gen_gadget_product({ints({1}), BigInt(1)}),
                  bk::InputError);
}

TEST_CASE("subset-sum decision through the product gadget") {
  CHECK(bk::decide_subset_sum_product({ints({1, 2}), BigInt(2)}));
  CHECK_FALSE(bk::decide_subset_sum_product({ints({2, 4}), BigInt(3)}));
  CHECK(bk::decide_subset_sum_product({ints({3, 5, 7}), BigInt(12)}));

  std::mt19937 gen(5);
  for (int trial = 0; trial < 25; ++trial) {
    SubsetSumInstance ss = random_ss(gen, 6, 8);
    CHECK(bk::decide_subset_sum_product(ss) ==
          subset_sum_brute(ss.w, ss.target));
  }
}

TEST_CASE("closed-form objective of the product gadget") {
  SubsetSumInstance yes{ints({1, 2}), BigInt(2)};
  const Rat eps(1, 4);
  const Rat big(13, 4);
  // At the top of the leader range of a yes instance: -M - W + eps^2/M.
  CHECK(bk::shape_f_product(yes, Rat(5, 2)) ==
        -big - 2 + eps * eps / big);
  // Left endpoint of a linear piece: exactly -M - V1.
  CHECK(bk::shape_f_product(yes, Rat(1) + eps) == -big - 1);
  CHECK_THROWS_AS(bk::shape_f_product(yes, Rat(1, 8)), bk::InputError);
  CHECK_THROWS_AS(bk::shape_f_product(yes, big), bk::InputError);

  // The closed form agrees with brute-force worst-case evaluation.
  std::mt19937 gen(9);
  for (int trial = 0; trial < 6; ++trial) {
    SubsetSumInstance ss = random_ss(gen, 4, 6);
    bk::GadgetProduct g = bk::gen_gadget_product(ss);
    bk::FiniteUncertainty fin{bk::expand_product(g.u)};
    Rat top = Rat(ss.total()) + Rat(1, 4);
    for (int k = 1; k <= 20; ++k) {
      Rat b = Rat(1, 4) + (top - Rat(1, 4) - Rat(1, 100)) * k / 20;
      auto [v, s] = bk::eval_robust_finite(g.items, fin,
                                           TiePolicy::kPessimistic, b);
      CHECK(bk::shape_f_product(ss, b) == v);
    }
  }
}

TEST_CASE("product solve matches the reference box instance") {
  // One two-option factor and four singletons reproduce the two-scenario
  // worst case.
  Items items{{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
              {Rat(2), Rat(-1), Rat(1), Rat(-2), Rat(0)}};
  bk::ProductFiniteUncertainty u{
      {{Rat(5)}, {Rat(4)}, {Rat(3)}, {Rat(2)}, {Rat(1), Rat(6)}}};
  bk::SolveResult r = bk::solve_product_finite(items, u, {Rat(0), Rat(5)},
                                               TiePolicy::kPessimistic);
  CHECK(r.b_star == Rat(5, 2));
  CHECK(r.value == Rat(3, 2));
  // Option-set order and dominated duplicates are irrelevant.
  bk::ProductFiniteUncertainty shuffled{
      {{Rat(5), Rat(5)}, {Rat(4)}, {Rat(3)}, {Rat(2)}, {Rat(6), Rat(1), Rat(1)}}};
  bk::SolveResult r2 = bk::solve_product_finite(items, shuffled,
                                                {Rat(0), Rat(5)},
                                                TiePolicy::kPessimistic);
  CHECK(r2.b_star == r.b_star);
  CHECK(r2.value == r.value);
}

TEST_CASE("simplex reduction instance layout") {
  bk::GadgetSimplex g = bk::gen_gadget_simplex({ints({1, 2}), BigInt(2)});
  CHECK(g.items.a == std::vector<Rat>{Rat(1), Rat(2), Rat(4)});
  CHECK(g.items.d == std::vector<Rat>{Rat(-1), Rat(-2), Rat(4)});
  CHECK(g.u.c_hat == std::vector<Rat>{Rat(7), Rat(14), Rat(32)});
  CHECK(g.u.gamma == Rat(2));
  CHECK(g.range.b_lo == Rat(0));
  CHECK(g.range.b_hi == Rat(7));

  bk::GadgetSimplex g1 = bk::gen_gadget_simplex({ints({2}), BigInt(1)});
  CHECK(g1.u.c_hat == std::vector<Rat>{Rat(10), Rat(18)});
}

TEST_CASE("simplex family optimum") {
  bk::GadgetSimplex g = bk::gen_gadget_simplex({ints({1, 2}), BigInt(2)});
  bk::SolveResult r = bk::solve_simplex_family(g.items, g.u, g.range,
                                               TiePolicy::kPessimistic);
  CHECK(r.b_star == Rat(6));
  CHECK(r.value == Rat(2));

  bk::GadgetSimplex g2 = bk::gen_gadget_simplex({ints({2, 4}), BigInt(3)});
  bk::SolveResult r2 = bk::solve_simplex_family(g2.items, g2.u, g2.range,
                                                TiePolicy::kPessimistic);
  CHECK(r2.b_star == Rat(9));  // V* = 2, M = 7
  CHECK(r2.value == Rat(5));

  // Unconstrained deviation budget buys every weight.
  bk::GadgetSimplex g3 = g;
  g3.u.gamma = Rat(100);
  bk::SolveResult r3 = bk::solve_simplex_family(g3.items, g3.u, g3.range,
                                                TiePolicy::kPessimistic);
  CHECK(r3.b_star == Rat(3) + Rat(4));
  CHECK(r3.value == Rat(4) - Rat(3));

  // Non-gadget instances are refused.
  Items other{{Rat(1), Rat(2)}, {Rat(1), Rat(2)}};
  CHECK_THROWS_AS(
      bk::solve_simplex_family(other, {{Rat(1), Rat(1)}, Rat(1)},
                               {Rat(0), Rat(3)}, TiePolicy::kPessimistic),
      bk::InputError);
}

TEST_CASE("simplex family: V* equals exhaustive subset max, f(W) = -W iff YES") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    SubsetSumInstance ss = random_ss(gen, 8, 10);
    bk::GadgetSimplex g = bk::gen_gadget_simplex(ss);
    bk::SolveResult r = bk::solve_simplex_family(g.items, g.u, g.range,
                                                 TiePolicy::kPessimistic);
    BigInt best = 0;
    const std::size_t m = ss.w.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      BigInt s = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (std::size_t(1) << i)) s += ss.w[i];
      }
      if (s <= ss.target && s > best) best = s;
    }
    const Rat big = Rat(ss.total()) + 1;
    CHECK(r.b_star == Rat(best) + big);
    CHECK(r.value == big - Rat(best));
    bool yes = subset_sum_brute(ss.w, ss.target);
    Rat fW = bk::eval_simplex_family(g.items, g.u, Rat(ss.target));
    CHECK((fW == -Rat(ss.target)) == yes);
    // Witness subset sums to V* and stays within the deviation budget.
    Rat witness_sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      witness_sum += r.follower_x[i] * g.items.a[i];
    }
    CHECK(witness_sum == Rat(best));
  }
}

TEST_CASE("p-norm reduction instance") {
  const Rat big(4);  // sum(w) + 1 for w = (1, 2)
  bk::GadgetPNorm p1 = bk::gen_gadget_pnorm({ints({1, 2}), BigInt(2)}, Rat(1));
  CHECK(p1.u.c_hat ==
        std::vector<Rat>{2 * big - 1, 2 * big * 2 - 2, 2 * big * big});
  CHECK(p1.u.gamma == Rat(2));

  // Perfect square at p = 2: exact root.
  bk::GadgetPNorm p2 = bk::gen_gadget_pnorm({ints({4}), BigInt(4)}, Rat(2));
  CHECK(p2.u.gamma == Rat(2));
  CHECK(p2.u.c_hat[0] == Rat(5 * 2 * 4) - 2);

  // Irrational root: floor approximant within one unit of the last bit.
  bk::GadgetPNorm p3 = bk::gen_gadget_pnorm({ints({2, 3}), BigInt(2)}, Rat(2), 32);
  Rat g = p3.u.gamma;
  Rat ulp = Rat(1, BigInt(1) << 32);
  CHECK(g * g <= 2);
  CHECK((g + ulp) * (g + ulp) > 2);
  CHECK(p3.u.precision_bits == 32);

  CHECK_THROWS_AS(bk::gen_gadget_pnorm({ints({1, 2}), BigInt(2)}, Rat(1, 2)),
                  bk::InputError);
}

TEST_CASE("largest reachable subset sum") {
  CHECK(bk::largest_subset_sum_leq(ints({3, 5, 7}), BigInt(11)) == 10);
  CHECK(bk::largest_subset_sum_leq(ints({3, 5, 7}), BigInt(100)) == 15);
  CHECK(bk::largest_subset_sum_leq(ints({4}), BigInt(3)) == 0);
  CHECK(bk::largest_subset_sum_leq({}, BigInt(3)) == 0);
  CHECK_THROWS_AS(bk::largest_subset_sum_leq(ints({5}), BigInt(2), 3),
                  bk::BudgetError);
}

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

#include <random>

#include "bk/certain.hpp"
#include "bk/errors.hpp"
#include "bk/robust_interval.hpp"

using bk::IntervalOrder;
using bk::IntervalUncertainty;
using bk::Items;
using bk::Rat;
using bk::TiePolicy;

namespace {

std::vector<Rat> rats(std::initializer_list<int> xs) {
  std::vector<Rat> out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

const Items kFive{rats({1, 1, 1, 1, 1}), rats({2, -1, 1, -2, 0})};
const IntervalUncertainty kHull{rats({5, 4, 3, 2, 1}), rats({5, 4, 3, 2, 6})};

Rat dot(const std::vector<Rat>& d, const std::vector<Rat>& x) {
  Rat v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * x[i];
  return v;
}

// Worst case over feasible prefixes via brute force: pack greedily along
// every linear extension and keep the minimum.
Rat adversary_oracle(const Items& items, const IntervalOrder& order,
                     const Rat& b) {
  Rat best;
  bool have = false;
  for (const auto& ext : bk::enumerate_linear_extensions(order)) {
    Rat remaining = b;
    Rat v = 0;
    for (int i : ext) {
      if (remaining <= 0) break;
      Rat take = items.a[i] < remaining ? items.a[i] : remaining;
      v += items.d[i] * take / items.a[i];
      remaining -= take;
    }
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

struct RandomInstance {
  Items items;
  IntervalUncertainty u;
};

RandomInstance random_instance(std::mt19937& gen, std::size_t n) {
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> dval(-6, 6);
  std::uniform_int_distribution<int> lo(1, 8);
  std::uniform_int_distribution<int> width(0, 4);
  RandomInstance inst;
  for (std::size_t i = 0; i < n; ++i) {
    inst.items.a.push_back(Rat(size(gen)));
    inst.items.d.push_back(Rat(dval(gen), size(gen)));
    int l = lo(gen);
    inst.u.c_lo.push_back(Rat(l));
    inst.u.c_hi.push_back(Rat(l + width(gen)));
  }
  return inst;
}

}  // namespace

TEST_CASE("induced order of the reference box") {
  IntervalOrder order = bk::build_interval_order(kFive, kHull);
  CHECK(order.p_lo == rats({-5, -4, -3, -2, -6}));
  CHECK(order.p_hi == rats({-5, -4, -3, -2, -1}));
  // Chain over the four degenerate intervals; the wide one is incomparable.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(order.precedes(i, j) == (i < j));
    CHECK_FALSE(order.precedes(i, 4));
    CHECK_FALSE(order.precedes(4, i));
  }
}

TEST_CASE("overlap geometry determines the relation") {
  Items items{rats({1, 1, 1}), rats({0, 0, 0})};
  // Pairwise overlapping intervals: no relations at all.
  IntervalUncertainty overlap{rats({1, 2, 3}), rats({5, 6, 7})};
  IntervalOrder o1 = bk::build_interval_order(items, overlap);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK_FALSE(o1.precedes(i, j));
  }
  // Disjoint intervals in decreasing position: a total order.
  IntervalUncertainty chain{rats({7, 4, 1}), rats({8, 5, 2})};
  IntervalOrder o2 = bk::build_interval_order(items, chain);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(o2.precedes(i, j) == (i < j));
  }
}

TEST_CASE("worst-case follower at one capacity") {
  Items items{rats({1, 1, 1}), rats({-1, 1, 0})};
  IntervalUncertainty u{rats({3, 2, 1}), rats({3, 2, 4})};
  IntervalOrder order = bk::build_interval_order(items, u);
  bk::AdversaryResult adv = bk::adversary_solve(items, order, Rat(3, 2));
  CHECK(adv.prefix.members == std::vector<int>{0, 2});
  CHECK(adv.prefix.last == 2);
  CHECK(adv.prefix.fraction == Rat(1, 2));
  CHECK(adv.value == Rat(-1));
  CHECK(adv.head == 0);  // both candidate heads tie; the smallest one wins
  CHECK(adversary_oracle(items, order, Rat(3, 2)) == adv.value);

  // Recovered objective: the fractional item sits strictly inside its range.
  std::vector<Rat> c = bk::recover_scenario(items, u, order, adv.prefix,
                                            adv.head);
  CHECK(c == rats({3, 2, 3}));
  auto x = bk::follower_solve(items, c, Rat(3, 2), TiePolicy::kPessimistic).x;
  CHECK(x == adv.prefix.to_x(3));

  CHECK(bk::adversary_solve(items, order, Rat(0)).prefix.empty());
  bk::AdversaryResult full = bk::adversary_solve(items, order, Rat(3));
  CHECK(full.prefix.members == std::vector<int>{0, 1, 2});
  CHECK(full.value == Rat(0));
}

TEST_CASE("worst case equals prefix enumeration on random instances") {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    RandomInstance inst = random_instance(gen, 2 + trial % 5);
    IntervalOrder order = bk::build_interval_order(inst.items, inst.u);
    Rat total = inst.items.total_size();
    for (int k = 0; k <= 12; ++k) {
      Rat b = total * k / 12;
      bk::AdversaryResult adv = bk::adversary_solve(inst.items, order, b);
      CHECK(adv.value == adversary_oracle(inst.items, order, b));
      CHECK(dot(inst.items.d, adv.prefix.to_x(inst.items.n())) == adv.value);
      if (!adv.prefix.empty()) {
        // Scenario recovery is consistent with the greedy follower.
        std::vector<Rat> c = bk::recover_scenario(inst.items, inst.u, order,
                                                  adv.prefix, adv.head);
        for (std::size_t i = 0; i < inst.items.n(); ++i) {
          CHECK(inst.u.c_lo[i] <= c[i]);
          CHECK(c[i] <= inst.u.c_hi[i]);
        }
        auto x = bk::follower_solve(inst.items, c, b, TiePolicy::kPessimistic);
        CHECK(x.x == adv.prefix.to_x(inst.items.n()));
      }
    }
  }
}

TEST_CASE("reference box optimum and envelope") {
  bk::SolveResult r = bk::solve_robust_interval(
      kFive, kHull, {Rat(0), Rat(5)}, TiePolicy::kPessimistic);
  CHECK(r.b_star == Rat(5, 3));  // leftmost of the two maximizers 5/3, 10/3
  CHECK(r.value == Rat(4, 3));
  REQUIRE(r.worst_c.has_value());
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(kHull.c_lo[i] <= (*r.worst_c)[i]);
    CHECK((*r.worst_c)[i] <= kHull.c_hi[i]);
  }

  IntervalOrder order = bk::build_interval_order(kFive, kHull);
  bk::PartialPwl env =
      bk::robust_interval_envelope(kFive, order, Rat(0), Rat(5));
  REQUIRE(env.pieces().size() == 1);
  CHECK(env.pieces()[0].points() ==
        std::vector<bk::PwlPoint>{{Rat(0), Rat(0)},
                                  {Rat(1), Rat(0)},
                                  {Rat(5, 3), Rat(4, 3)},
                                  {Rat(2), Rat(1)},
                                  {Rat(3), Rat(1)},
                                  {Rat(10, 3), Rat(4, 3)},
                                  {Rat(4), Rat(0)},
                                  {Rat(5), Rat(0)}});
  // The envelope value agrees with the adversary everywhere.
  for (int k = 0; k <= 30; ++k) {
    Rat b = Rat(5 * k, 30);
    CHECK(env.eval(b) == bk::adversary_solve(kFive, order, b).value);
  }
}

TEST_CASE("extension enumeration") {
  IntervalOrder order = bk::build_interval_order(kFive, kHull);
  auto exts = bk::enumerate_linear_extensions(order);
  CHECK(exts.size() == 5);  // the wide item can take any slot in the chain
  CHECK(exts.front() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(exts.back() == std::vector<int>{4, 0, 1, 2, 3});

  Items three{rats({1, 1, 1}), rats({0, 0, 0})};
  IntervalOrder empty_rel =
      bk::build_interval_order(three, {rats({1, 1, 1}), rats({2, 2, 2})});
  CHECK(bk::enumerate_linear_extensions(empty_rel).size() == 6);
  IntervalOrder total =
      bk::build_interval_order(three, {rats({7, 4, 1}), rats({8, 5, 2})});
  CHECK(bk::enumerate_linear_extensions(total).size() == 1);
  CHECK_THROWS_AS(bk::enumerate_linear_extensions(total, 2), bk::BudgetError);
}

TEST_CASE("algorithmic solve equals extension oracle") {
  std::mt19937 gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstance inst = random_instance(gen, 2 + trial % 5);
    Rat total = inst.items.total_size();
    bk::CapacityRange range{Rat(0), total};
    if (trial % 3 == 0) range.b_lo = total / 4;
    for (TiePolicy tie : {TiePolicy::kPessimistic, TiePolicy::kOptimistic}) {
      bk::SolveResult fast =
          bk::solve_robust_interval(inst.items, inst.u, range, tie);
      bk::SolveResult slow =
          bk::oracle_solve_interval(inst.items, inst.u, range, tie);
      CHECK(fast.value == slow.value);
      CHECK(fast.b_star == slow.b_star);
    }
  }
}

TEST_CASE("degenerate intervals reduce to the certain solver") {
  IntervalUncertainty degenerate{rats({5, 4, 3, 2, 1}), rats({5, 4, 3, 2, 1})};
  bk::SolveResult r = bk::solve_robust_interval(
      kFive, degenerate, {Rat(0), Rat(5)}, TiePolicy::kPessimistic);
  bk::SolveResult c = bk::solve_certain(kFive, degenerate.c_lo, {Rat(0), Rat(5)},
                                        TiePolicy::kPessimistic);
  CHECK(r.value == c.value);
  CHECK(r.b_star == c.b_star);
}

TEST_CASE("touching endpoints under the optimistic policy") {
  Items items{rats({1, 1}), rats({0, 1})};
  // p-intervals [-4,-2] and [-2,-1] touch at -2; the follower prefers the
  // leader-friendly second item only in the optimistic reading.
  IntervalUncertainty u{rats({2, 1}), rats({4, 2})};
  IntervalOrder base = bk::build_interval_order(items, u);
  CHECK_FALSE(base.precedes(0, 1));
  IntervalOrder opt = bk::optimistic_preprocess(items, u, base);
  CHECK(opt.precedes(0, 1));
  CHECK_FALSE(opt.precedes(1, 0));
  // With the leader-hostile values swapped nothing is added.
  Items hostile{rats({1, 1}), rats({1, 0})};
  IntervalOrder same = bk::optimistic_preprocess(hostile, u, base);
  CHECK_FALSE(same.precedes(0, 1));
  // No touching endpoints: identity.
  IntervalUncertainty apart{rats({5, 1}), rats({6, 2})};
  IntervalOrder o = bk::build_interval_order(items, apart);
  CHECK(bk::optimistic_preprocess(items, apart, o).forced.empty());
}

TEST_CASE("pessimistic value never exceeds the optimistic value") {
  std::mt19937 gen(53);
  for (int trial = 0; trial < 40; ++trial) {
    RandomInstance inst = random_instance(gen, 2 + trial % 5);
    bk::CapacityRange range{Rat(0), inst.items.total_size()};
    Rat pes = bk::solve_robust_interval(inst.items, inst.u, range,
                                        TiePolicy::kPessimistic)
                  .value;
    Rat opt = bk::solve_robust_interval(inst.items, inst.u, range,
                                        TiePolicy::kOptimistic)
                  .value;
    CHECK(pes <= opt);
  }
}

TEST_CASE("shrinking the box never hurts the leader") {
  std::mt19937 gen(67);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    RandomInstance inst = random_instance(gen, 2 + trial % 5);
    IntervalUncertainty shrunk = inst.u;
    for (std::size_t i = 0; i < inst.items.n(); ++i) {
      if (shrunk.c_lo[i] == shrunk.c_hi[i]) continue;
      if (coin(gen)) {
        shrunk.c_lo[i] += Rat(1, 2);
      } else {
        shrunk.c_hi[i] -= Rat(1, 2);
      }
    }
    bk::CapacityRange range{Rat(0), inst.items.total_size()};
    Rat wide = bk::solve_robust_interval(inst.items, inst.u, range,
                                         TiePolicy::kPessimistic)
                   .value;
    Rat narrow = bk::solve_robust_interval(inst.items, shrunk, range,
                                           TiePolicy::kPessimistic)
                     .value;
    CHECK(narrow >= wide);
  }
}

TEST_CASE("box validation") {
  CHECK_THROWS_AS(
      bk::build_interval_order(kFive, {rats({0, 1, 1, 1, 1}),
                                       rats({1, 1, 1, 1, 1})}),
      bk::InputError);
  CHECK_THROWS_AS(
      bk::build_interval_order(kFive, {rats({2, 1, 1, 1, 1}),
                                       rats({1, 1, 1, 1, 1})}),
      bk::InputError);
}

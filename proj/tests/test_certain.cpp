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

using bk::Items;
using bk::Pwl;
using bk::PwlPoint;
using bk::Rat;
using bk::TiePolicy;

namespace {

std::vector<Rat> rats(std::initializer_list<int> xs) {
  std::vector<Rat> out;
  for (int x : xs) out.push_back(Rat(x));
  return out;
}

const Items kFive{rats({1, 1, 1, 1, 1}), rats({2, -1, 1, -2, 0})};

Rat dot(const std::vector<Rat>& d, const std::vector<Rat>& x) {
  Rat v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * x[i];
  return v;
}

}  // namespace

TEST_CASE("objective normalization keeps the value identical") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> val(1, 9);
  std::uniform_int_distribution<int> dval(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Rat> a, d_raw, x;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(Rat(val(gen), val(gen)));
      d_raw.push_back(Rat(dval(gen), val(gen)));
      x.push_back(Rat(val(gen) - 1, 9));  // in [0, 1)
    }
    Rat delta(dval(gen), val(gen));
    bk::NormalizedObjective norm = bk::normalize_objective(d_raw, delta, a);
    Rat b = dot(a, x);
    Rat original = dot(d_raw, x) - delta * b;
    CHECK(dot(norm.d_pure, x) == original);
    CHECK(dot(norm.d_nonneg, x) - norm.delta_nonneg * b == original);
    for (std::size_t i = 0; i < n; ++i) CHECK(norm.d_nonneg[i] >= 0);
    if (delta >= 0) CHECK(norm.delta_nonneg >= 0);
  }
}

TEST_CASE("greedy follower packs by profit density") {
  // c = (5,4,3,2,1): items in index order; at b = 5/2 the third is half.
  auto x = bk::follower_solve(kFive, rats({5, 4, 3, 2, 1}), Rat(5, 2),
                              TiePolicy::kPessimistic)
               .x;
  CHECK(x == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2), Rat(0), Rat(0)});
  // c = (5,4,3,2,6): the last item moves to the front.
  x = bk::follower_solve(kFive, rats({5, 4, 3, 2, 6}), Rat(2),
                         TiePolicy::kPessimistic)
          .x;
  CHECK(x == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("tie policy resolves equal profit densities") {
  Items items{rats({1, 1}), rats({3, -5})};
  std::vector<Rat> c = rats({2, 2});
  auto opt = bk::follower_solve(items, c, Rat(1), TiePolicy::kOptimistic).x;
  CHECK(opt == std::vector<Rat>{Rat(1), Rat(0)});
  auto pes = bk::follower_solve(items, c, Rat(1), TiePolicy::kPessimistic).x;
  CHECK(pes == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("leader profiles of the two reference scenarios") {
  Pwl f1 = bk::leader_pwl(kFive, rats({5, 4, 3, 2, 1}),
                          TiePolicy::kPessimistic, Rat(0), Rat(5));
  CHECK(f1.points() == std::vector<PwlPoint>{{Rat(0), Rat(0)},
                                             {Rat(1), Rat(2)},
                                             {Rat(2), Rat(1)},
                                             {Rat(3), Rat(2)},
                                             {Rat(4), Rat(0)},
                                             {Rat(5), Rat(0)}});
  Pwl f2 = bk::leader_pwl(kFive, rats({5, 4, 3, 2, 6}),
                          TiePolicy::kPessimistic, Rat(0), Rat(5));
  CHECK(f2.points() == std::vector<PwlPoint>{{Rat(0), Rat(0)},
                                             {Rat(1), Rat(0)},
                                             {Rat(2), Rat(2)},
                                             {Rat(3), Rat(1)},
                                             {Rat(4), Rat(2)},
                                             {Rat(5), Rat(0)}});
}

TEST_CASE("value-minimal greedy fill") {
  Items items{rats({2, 1, 3}), rats({4, -2, 3})};
  // Ascending d/a order: item 1 (-2), item 3 (1), item 0 (2).
  bk::FractionalPrefix p = bk::dantzig_min({0, 1, 2}, items, Rat(3));
  CHECK(p.members == std::vector<int>{1, 2});
  CHECK(p.last == 2);
  CHECK(p.fraction == Rat(2, 3));
  // Zero capacity gives the empty prefix.
  CHECK(bk::dantzig_min({0, 1, 2}, items, Rat(0)).empty());
  // A capacity hitting a prefix sum exactly keeps a dedicated last item.
  p = bk::dantzig_min({0, 1, 2}, items, Rat(4));
  CHECK(p.last == 2);
  CHECK(p.fraction == Rat(1));
  CHECK_THROWS_AS(bk::dantzig_min({0, 1}, items, Rat(4)), bk::InputError);
}

TEST_CASE("minimum-value profile matches pointwise minimization") {
  std::mt19937 gen(17);
  std::uniform_int_distribution<int> val(1, 6);
  std::uniform_int_distribution<int> dval(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Items items;
    for (std::size_t i = 0; i < n; ++i) {
      items.a.push_back(Rat(val(gen)));
      items.d.push_back(Rat(dval(gen)));
    }
    std::vector<int> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = static_cast<int>(i);
    Rat total = items.total_size();
    Pwl profile = bk::min_profile(subset, items, Rat(0), total);
    for (int k = 0; k <= 24; ++k) {
      Rat b = total * k / 24;
      bk::FractionalPrefix p = bk::dantzig_min(subset, items, b);
      CHECK(profile.eval(b) == dot(items.d, p.to_x(n)));
    }
  }
}

TEST_CASE("single-scenario solve") {
  bk::CapacityRange range{Rat(0), Rat(5)};
  bk::SolveResult r = bk::solve_certain(kFive, rats({5, 4, 3, 2, 1}), range,
                                        TiePolicy::kPessimistic);
  // Profile peaks at b = 1 and b = 3 with value 2; leftmost wins.
  CHECK(r.b_star == Rat(1));
  CHECK(r.value == Rat(2));
  CHECK(r.follower_x ==
        std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(dot(kFive.d, r.follower_x) == r.value);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(bk::solve_certain(Items{rats({1, -1}), rats({0, 0})},
                                    rats({1, 1}), {Rat(0), Rat(1)},
                                    TiePolicy::kPessimistic),
                  bk::InputError);
  CHECK_THROWS_AS(bk::solve_certain(kFive, rats({1, 1, 1, 1, 0}),
                                    {Rat(0), Rat(5)},
                                    TiePolicy::kPessimistic),
                  bk::InputError);
  CHECK_THROWS_AS(bk::solve_certain(kFive, rats({1, 1, 1, 1, 1}),
                                    {Rat(0), Rat(6)},
                                    TiePolicy::kPessimistic),
                  bk::InputError);
}

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

#include "bk/stochastic.hpp"

#include <cmath>
#include <random>

#include "bk/certain.hpp"
#include "bk/errors.hpp"
#include "bk/robust_hard.hpp"

namespace bk {

void FiniteSupportDistribution::validate(const Items& items) const {
  if (scenarios.empty() || scenarios.size() != probs.size()) {
    throw InputError(
        "finite distribution: scenarios and probabilities must match");
  }
  Rat total = 0;
  for (const Rat& p : probs) {
    if (!(0 < p && p <= 1)) {
      throw InputError("finite distribution: probabilities must be in (0, 1]");
    }
    total += p;
  }
  if (total != 1) {
    throw InputError("finite distribution: probabilities must sum to 1");
  }
  for (const auto& c : scenarios) validate_profits(items, c);
}

void ProductUniformDiscrete::validate(const Items& items) const {
  if (supports.size() != items.n()) {
    throw InputError("discrete product: one support per item required");
  }
  for (const auto& set : supports) {
    if (set.empty()) {
      throw InputError("discrete product: supports must be nonempty");
    }
    for (const Rat& c : set) {
      if (c <= 0) {
        throw InputError("discrete product: support values must be positive");
      }
    }
  }
}

void ProductUniformContinuous::validate(const Items& items) const {
  if (boxes.size() != items.n()) {
    throw InputError("continuous product: one interval per item required");
  }
  for (const auto& [lo, hi] : boxes) {
    if (!(0 < lo && lo <= hi)) {
      throw InputError("continuous product: need 0 < lo <= hi per interval");
    }
  }
}

SolveResult solve_stochastic_finite(const Items& items,
                                    const FiniteSupportDistribution& dist,
                                    const CapacityRange& range, TiePolicy tie) {
  items.validate();
  dist.validate(items);
  range.validate(items);
  std::vector<Pwl> profiles;
  profiles.reserve(dist.scenarios.size());
  for (const auto& c : dist.scenarios) {
    profiles.push_back(leader_pwl(items, c, tie, range.b_lo, range.b_hi));
  }
  Pwl expected = weighted_sum(profiles, dist.probs);
  MaxResult m = maximize(expected, range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  out.solver = "stochastic_finite";
  return out;
}

Pwl expected_pwl_product_discrete(const Items& items,
                                  const ProductUniformDiscrete& dist,
                                  TiePolicy tie, std::size_t budget) {
  items.validate();
  dist.validate(items);
  ProductFiniteUncertainty prod{dist.supports};
  std::vector<std::vector<Rat>> scenarios = expand_product(prod, budget);
  const Rat total = items.total_size();
  std::vector<Pwl> profiles;
  profiles.reserve(scenarios.size());
  for (const auto& c : scenarios) {
    profiles.push_back(leader_pwl(items, c, tie, Rat(0), total));
  }
  std::vector<Rat> weights(profiles.size(),
                           Rat(1, static_cast<long>(profiles.size())));
  return weighted_sum(profiles, weights);
}

SolveResult solve_stochastic_product_discrete(const Items& items,
                                              const ProductUniformDiscrete& dist,
                                              const CapacityRange& range,
                                              TiePolicy tie,
                                              std::size_t budget) {
  range.validate(items);
  Pwl expected = expected_pwl_product_discrete(items, dist, tie, budget)
                     .clip(range.b_lo, range.b_hi);
  MaxResult m = maximize(expected, range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  out.solver = "stochastic_product_discrete";
  return out;
}

GadgetStochastic gen_gadget_stochastic(const std::vector<BigInt>& a_star,
                                       const BigInt& b_star, const Rat& tau) {
  if (a_star.empty()) {
    throw InputError("counting gadget: at least one weight required");
  }
  if (tau < -1 || tau > 1) {
    throw InputError("counting gadget: tau must lie in [-1, 1]");
  }
  BigInt total = 0;
  BigInt smallest = a_star.front();
  for (const BigInt& ai : a_star) {
    if (ai <= 0) throw InputError("counting gadget: weights must be positive");
    total += ai;
    if (ai < smallest) smallest = ai;
  }
  if (b_star < 0 || b_star > total) {
    throw InputError("counting gadget: capacity outside [0, sum of weights]");
  }
  GadgetStochastic g;
  const Rat eps = Rat(smallest) / (2 * Rat(total));
  for (const BigInt& ai : a_star) {
    g.items.a.push_back(Rat(ai));
    g.items.d.push_back((1 + tau) * Rat(ai));
    g.dist.supports.push_back({eps, Rat(1)});
  }
  g.items.a.push_back(Rat(total));
  g.items.d.push_back((-1 + tau) * Rat(total));
  g.dist.supports.push_back({Rat(1)});
  g.range.b_lo = 0;
  g.range.b_hi = Rat(total);
  return g;
}

BigInt count_knapsack_bisection(
    const std::vector<BigInt>& a_star, const BigInt& b_star,
    const std::function<Rat(const GadgetStochastic&)>& solver) {
  const std::size_t m = a_star.size();
  BigInt total = 0;
  for (const BigInt& ai : a_star) {
    if (ai <= 0) throw InputError("counting: weights must be positive");
    total += ai;
  }
  if (b_star < 0 || b_star > total) {
    throw InputError("counting: capacity outside [0, sum of weights]");
  }
  if (b_star == total) return BigInt(1) << m;
  if (m == 1) {
    // The one-weight gadget collapses (its filler item has the same size as
    // the weight), so count directly.
    return a_star[0] <= b_star ? 2 : 1;
  }
  Rat s_lo = -1;
  Rat s_hi = 1;
  for (std::size_t k = 0; k <= m; ++k) {
    Rat mid = (s_lo + s_hi) / 2;
    GadgetStochastic g = gen_gadget_stochastic(a_star, b_star, -mid);
    Rat b_next = solver(g);
    // Maximizer right of b_star means the tau-shifted slope at b_star is
    // still nonnegative.
    if (Rat(b_star) < b_next) {
      s_lo = mid;
    } else {
      s_hi = mid;
    }
  }
  Rat slope = (s_lo + s_hi) / 2;
  Rat count = Rat(BigInt(1) << (m - 1)) * (1 - slope) + Rat(1, 2);
  return numerator(count) / denominator(count);  // floor: count >= 0
}

McEstimate eval_stochastic_mc(const Items& items,
                              const ProductUniformContinuous& dist,
                              const Rat& b, TiePolicy tie,
                              std::uint64_t samples, std::uint64_t seed) {
  items.validate();
  dist.validate(items);
  if (samples < 1) throw InputError("sampling: need at least one sample");
  if (b < 0 || b > items.total_size()) {
    throw InputError("sampling: capacity outside [0, sum of sizes]");
  }
  std::mt19937_64 gen(seed);
  const Rat denom = Rat(BigInt(1) << 64);
  Rat sum = 0;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  std::vector<Rat> c(items.n());
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < items.n(); ++i) {
      const auto& [lo, hi] = dist.boxes[i];
      if (lo == hi) {
        c[i] = lo;
      } else {
        Rat u = Rat(BigInt(gen())) / denom;
        c[i] = lo + (hi - lo) * u;
      }
    }
    FollowerSolution sol = follower_solve(items, c, b, tie);
    Rat v = 0;
    for (std::size_t i = 0; i < items.n(); ++i) v += items.d[i] * sol.x[i];
    sum += v;
    values.push_back(to_double(v));
  }
  McEstimate out;
  out.mean = sum / Rat(BigInt(samples));
  out.stderr_ = 0.0;
  if (samples > 1) {
    double mean_d = to_double(out.mean);
    double ss = 0.0;
    for (double v : values) ss += (v - mean_d) * (v - mean_d);
    out.stderr_ = std::sqrt(ss / (static_cast<double>(samples) *
                                  (static_cast<double>(samples) - 1.0)));
  }
  return out;
}

}  // namespace bk

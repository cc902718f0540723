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

#ifndef BK_STOCHASTIC_HPP
#define BK_STOCHASTIC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"

namespace bk {

struct FiniteSupportDistribution {
  std::vector<std::vector<Rat>> scenarios;
  std::vector<Rat> probs;

  /// Requires probs in (0, 1] summing to exactly 1.
  void validate(const Items& items) const;
};

// Independent per-item uniform draws from finite sets.
struct ProductUniformDiscrete {
  std::vector<std::vector<Rat>> supports;

  void validate(const Items& items) const;
};

// Independent per-item uniform draws from intervals.
struct ProductUniformContinuous {
  std::vector<std::pair<Rat, Rat>> boxes;  // 0 < lo <= hi

  void validate(const Items& items) const;
};

inline constexpr std::size_t kDefaultSupportBudget = std::size_t(1) << 20;

/// Maximizes the probability-weighted average of the scenario profiles.
SolveResult solve_stochastic_finite(const Items& items,
                                    const FiniteSupportDistribution& dist,
                                    const CapacityRange& range, TiePolicy tie);

/// Exact expected leader profile over the full capacity range [0, sum(a)],
/// by expanding every scenario of the product. Throws BudgetError past
/// budget.
Pwl expected_pwl_product_discrete(const Items& items,
                                  const ProductUniformDiscrete& dist,
                                  TiePolicy tie,
                                  std::size_t budget = kDefaultSupportBudget);

SolveResult solve_stochastic_product_discrete(
    const Items& items, const ProductUniformDiscrete& dist,
    const CapacityRange& range, TiePolicy tie,
    std::size_t budget = kDefaultSupportBudget);

struct GadgetStochastic {
  Items items;
  ProductUniformDiscrete dist;
  CapacityRange range;
};

/// Family of expectation instances parameterized by tau in [-1, 1]: the
/// slope of the expected profile at integer capacities encodes the number
/// of knapsack vectors below that capacity.
GadgetStochastic gen_gadget_stochastic(const std::vector<BigInt>& a_star,
                                       const BigInt& b_star, const Rat& tau);

/// Counts {x in {0,1}^m : a_star . x <= b_star} with m + 1 calls to a
/// solver for the tau-gadget; the callback maps tau to the optimal
/// capacity of the corresponding instance.
BigInt count_knapsack_bisection(
    const std::vector<BigInt>& a_star, const BigInt& b_star,
    const std::function<Rat(const GadgetStochastic&)>& solver);

struct McEstimate {
  Rat mean;       // exact average of the sampled values
  double stderr_; // sample standard error, informational only
};

/// Deterministic Monte Carlo estimate of the expected leader value at one
/// capacity under independent uniform draws from the boxes.
McEstimate eval_stochastic_mc(const Items& items,
                              const ProductUniformContinuous& dist,
                              const Rat& b, TiePolicy tie,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace bk

#endif  // BK_STOCHASTIC_HPP

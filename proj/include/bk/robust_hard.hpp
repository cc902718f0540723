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

#ifndef BK_ROBUST_HARD_HPP
#define BK_ROBUST_HARD_HPP

#include <vector>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"
#include "bk/robust_finite.hpp"

namespace bk {

// Independent finite option sets per item; the adversary picks one entry
// from each.
struct ProductFiniteUncertainty {
  std::vector<std::vector<Rat>> options;

  void validate(const Items& items) const;
  /// Product of the option-set sizes, saturating at budget + 1.
  std::size_t scenario_count(std::size_t cap) const;
};

// {c : c >= c_hat, sum(c - c_hat) <= gamma}.
struct SimplexUncertainty {
  std::vector<Rat> c_hat;
  Rat gamma;

  void validate(const Items& items) const;
};

// Gamma-ball around c_hat in the p-norm, intersected with c >= c_hat by
// construction of the generated instances. Irrational p-th roots are stored
// as dyadic approximants with `precision_bits` fractional bits.
struct PNormUncertainty {
  std::vector<Rat> c_hat;
  Rat gamma;
  Rat p;
  unsigned precision_bits = 64;

  void validate(const Items& items) const;
};

struct SubsetSumInstance {
  std::vector<BigInt> w;
  BigInt target;

  /// Requires positive weights and 1 <= target <= sum(w) - 1.
  void validate() const;
  BigInt total() const;
};

struct GadgetProduct {
  Items items;
  ProductFiniteUncertainty u;
  CapacityRange range;
};

struct GadgetSimplex {
  Items items;
  SimplexUncertainty u;
  CapacityRange range;
};

struct GadgetPNorm {
  Items items;
  PNormUncertainty u;
  CapacityRange range;
};

inline constexpr std::size_t kDefaultScenarioBudget = std::size_t(1) << 20;

/// Explicit scenario list for a product set; throws BudgetError past budget.
std::vector<std::vector<Rat>> expand_product(const ProductFiniteUncertainty& u,
                                             std::size_t budget =
                                                 kDefaultScenarioBudget);

SolveResult solve_product_finite(const Items& items,
                                 const ProductFiniteUncertainty& u,
                                 const CapacityRange& range, TiePolicy tie,
                                 std::size_t budget = kDefaultScenarioBudget);

/// Reduction instance whose optimal capacity reveals whether some subset of
/// w sums to the target.
GadgetProduct gen_gadget_product(const SubsetSumInstance& ss);

/// Solves the product gadget exactly; YES iff the optimal b differs from
/// the top of the range.
bool decide_subset_sum_product(const SubsetSumInstance& ss,
                               std::size_t budget = kDefaultScenarioBudget);

/// Closed form of the gadget objective on [eps, M) where eps = 1/4 and
/// M = sum(w) + eps; piecewise between consecutive attainable subset sums.
Rat shape_f_product(const SubsetSumInstance& ss, const Rat& b);

GadgetSimplex gen_gadget_simplex(const SubsetSumInstance& ss);

/// Exact solver for instances with the gen_gadget_simplex structure only
/// (validated; others are rejected with InputError). The best deviation
/// budget buys the largest subset sum V* <= gamma; the optimum is then
/// b* = V* + M with value M - V*. The tie policy has no effect: equal-ratio
/// items resolved in the leader's favor are recovered by the adversary
/// spending the same budget on a strict shift.
SolveResult solve_simplex_family(const Items& items,
                                 const SimplexUncertainty& u,
                                 const CapacityRange& range, TiePolicy tie,
                                 unsigned m_budget = 22);

/// Objective value of the simplex gadget at one capacity, via the worst
/// two-slope profile f_V with V the largest subset sum <= gamma.
Rat eval_simplex_family(const Items& items, const SimplexUncertainty& u,
                        const Rat& b, unsigned m_budget = 22);

/// The full worst-case profile f_V of a simplex gadget on its whole range.
Pwl simplex_family_profile(const Items& items, const SimplexUncertainty& u,
                           unsigned m_budget = 22);

/// Same skeleton as the simplex gadget with c_hat_i = 2*M*w_i - w_i^(1/p)
/// and gamma = target^(1/p); non-integer roots are floor approximants with
/// the configured number of fractional bits.
GadgetPNorm gen_gadget_pnorm(const SubsetSumInstance& ss, const Rat& p,
                             unsigned precision_bits = 64);

/// Largest sum of a sub-multiset of w not exceeding cap (cap >= 0), by
/// dynamic programming over attainable sums. Throws BudgetError when
/// sum(w) exceeds `table_budget`.
BigInt largest_subset_sum_leq(const std::vector<BigInt>& w, const BigInt& cap,
                              std::size_t table_budget = 1000000);

}  // namespace bk

#endif  // BK_ROBUST_HARD_HPP

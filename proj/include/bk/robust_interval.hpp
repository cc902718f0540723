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

#ifndef BK_ROBUST_INTERVAL_HPP
#define BK_ROBUST_INTERVAL_HPP

#include <set>
#include <utility>
#include <vector>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"

namespace bk {

// Componentwise box of follower objectives.
struct IntervalUncertainty {
  std::vector<Rat> c_lo;
  std::vector<Rat> c_hi;

  /// Requires 0 < c_lo <= c_hi componentwise, lengths matching items.
  void validate(const Items& items) const;
};

// The induced order on items: i precedes j iff every objective in the box
// ranks i strictly more efficient than j. p_i ranges over [-c_i_hi/a_i,
// -c_i_lo/a_i]. `forced` holds extra relations added for the optimistic
// policy at touching endpoints; they never perturb the p values.
struct IntervalOrder {
  std::vector<Rat> p_lo;
  std::vector<Rat> p_hi;
  std::set<std::pair<int, int>> forced;

  bool precedes(int i, int j) const {
    return p_hi[i] < p_lo[j] || forced.count({i, j}) != 0;
  }
};

IntervalOrder build_interval_order(const Items& items,
                                   const IntervalUncertainty& u);

/// For every pair with p_i_hi == p_j_lo and d_i/a_i < d_j/a_j, records the
/// relation i before j explicitly. Used under the optimistic policy, where
/// the follower resolves one-point intersections in the leader's favor.
IntervalOrder optimistic_preprocess(const Items& items,
                                    const IntervalUncertainty& u,
                                    IntervalOrder order);

struct AdversaryResult {
  FractionalPrefix prefix;
  Rat value;
  int head = -1;  // -1 for the empty prefix at b == 0
};

/// Worst case over feasible fractional prefixes at capacity b: for each
/// candidate head, greedily minimizes over the head's incomparable items;
/// ties between heads break towards the smallest head index.
AdversaryResult adversary_solve(const Items& items, const IntervalOrder& order,
                                const Rat& b);

/// A concrete objective vector in the box under which the greedy follower
/// reproduces the given prefix. `head` must be the iteration that produced
/// the prefix.
std::vector<Rat> recover_scenario(const Items& items,
                                  const IntervalUncertainty& u,
                                  const IntervalOrder& order,
                                  const FractionalPrefix& prefix, int head);

/// Worst-case leader profile as a partial function on [lo, hi]; the point
/// (0, 0) is included when lo == 0.
PartialPwl robust_interval_envelope(const Items& items,
                                    const IntervalOrder& order, const Rat& lo,
                                    const Rat& hi);

SolveResult solve_robust_interval(const Items& items,
                                  const IntervalUncertainty& u,
                                  const CapacityRange& range, TiePolicy tie);

/// All permutations compatible with the order, lexicographically smallest
/// first. Throws BudgetError when n exceeds `bound`.
std::vector<std::vector<int>> enumerate_linear_extensions(
    const IntervalOrder& order, std::size_t bound = 9);

/// Reference solver: one profile per linear extension, lower envelope,
/// maximize. Exponential; for cross-checking only.
SolveResult oracle_solve_interval(const Items& items,
                                  const IntervalUncertainty& u,
                                  const CapacityRange& range, TiePolicy tie,
                                  std::size_t bound = 9);

}  // namespace bk

#endif  // BK_ROBUST_INTERVAL_HPP

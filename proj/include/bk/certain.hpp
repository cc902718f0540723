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

#ifndef BK_CERTAIN_HPP
#define BK_CERTAIN_HPP

#include <vector>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"

namespace bk {

struct NormalizedObjective {
  std::vector<Rat> d_pure;      // delta folded into d (delta = 0 form)
  std::vector<Rat> d_nonneg;    // nonnegative-d form
  Rat delta_nonneg;             // its capacity price, >= 0 when inputs are
};

/// Converts a leader objective d_raw^T x - delta * b into the two
/// equivalent forms: d_pure = d_raw - delta * a, and the nonnegative pair
/// (d_raw - eps * a, delta - eps) with eps = min(delta, min_i d_raw_i/a_i).
NormalizedObjective normalize_objective(const std::vector<Rat>& d_raw,
                                        const Rat& delta,
                                        const std::vector<Rat>& a);

/// Greedy fill in decreasing c_i/a_i order; profit ties are broken by
/// d_i/a_i (descending when optimistic, ascending when pessimistic), then by
/// item index. The critical item is taken fractionally.
FollowerSolution follower_solve(const Items& items, const std::vector<Rat>& c,
                                const Rat& b, TiePolicy tie);

/// The item permutation follower_solve packs in, exposed for profile
/// construction.
std::vector<int> follower_order(const Items& items, const std::vector<Rat>& c,
                                TiePolicy tie);

/// Minimizes d^T x subject to a^T x = b, 0 <= x <= 1 over the given items:
/// fills in ascending d_i/a_i order (ties by index). b = 0 yields the empty
/// prefix; a capacity hitting a prefix sum exactly still designates a
/// dedicated last item with fraction 1.
FractionalPrefix dantzig_min(const std::vector<int>& subset,
                             const Items& items, const Rat& b);

/// The minimum value of dantzig_min as a function of capacity, restricted
/// to [lo, hi] (which must lie within [0, sum of subset sizes]).
Pwl min_profile(const std::vector<int>& subset, const Items& items,
                const Rat& lo, const Rat& hi);

/// The leader's profile d^T x(b) for the certain problem, clipped to
/// [lo, hi].
Pwl leader_pwl(const Items& items, const std::vector<Rat>& c, TiePolicy tie,
               const Rat& lo, const Rat& hi);

SolveResult solve_certain(const Items& items, const std::vector<Rat>& c,
                          const CapacityRange& range, TiePolicy tie);

}  // namespace bk

#endif  // BK_CERTAIN_HPP

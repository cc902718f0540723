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

#ifndef BK_ROBUST_FINITE_HPP
#define BK_ROBUST_FINITE_HPP

#include <vector>

#include "bk/instance.hpp"
#include "bk/pwl.hpp"

namespace bk {

// Finitely many candidate follower objectives; the leader guards against
// the worst one.
struct FiniteUncertainty {
  std::vector<std::vector<Rat>> scenarios;

  void validate(const Items& items) const;
};

/// Pointwise minimum over all scenario profiles, clipped to [lo, hi].
Pwl robust_finite_envelope(const Items& items, const FiniteUncertainty& u,
                           TiePolicy tie, const Rat& lo, const Rat& hi);

/// Worst-case value at one capacity, with the smallest scenario index
/// attaining it.
std::pair<Rat, std::size_t> eval_robust_finite(const Items& items,
                                               const FiniteUncertainty& u,
                                               TiePolicy tie, const Rat& b);

SolveResult solve_robust_finite(const Items& items, const FiniteUncertainty& u,
                                const CapacityRange& range, TiePolicy tie);

}  // namespace bk

#endif  // BK_ROBUST_FINITE_HPP

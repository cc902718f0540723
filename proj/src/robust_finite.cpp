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

#include "bk/robust_finite.hpp"

#include <algorithm>

#include "bk/certain.hpp"
#include "bk/errors.hpp"

namespace bk {

void FiniteUncertainty::validate(const Items& items) const {
  if (scenarios.empty()) {
    throw InputError("finite uncertainty: at least one scenario required");
  }
  for (const auto& c : scenarios) validate_profits(items, c);
}

Pwl robust_finite_envelope(const Items& items, const FiniteUncertainty& u,
                           TiePolicy tie, const Rat& lo, const Rat& hi) {
  u.validate(items);
  // Duplicate scenarios contribute identical profiles; drop them.
  std::vector<std::vector<Rat>> unique = u.scenarios;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<Pwl> profiles;
  profiles.reserve(unique.size());
  for (const auto& c : unique) {
    profiles.push_back(leader_pwl(items, c, tie, lo, hi));
  }
  return lower_envelope(profiles);
}

std::pair<Rat, std::size_t> eval_robust_finite(const Items& items,
                                               const FiniteUncertainty& u,
                                               TiePolicy tie, const Rat& b) {
  u.validate(items);
  Rat best;
  std::size_t best_idx = 0;
  bool have = false;
  for (std::size_t s = 0; s < u.scenarios.size(); ++s) {
    FollowerSolution sol = follower_solve(items, u.scenarios[s], b, tie);
    Rat v = 0;
    for (std::size_t i = 0; i < items.n(); ++i) v += items.d[i] * sol.x[i];
    if (!have || v < best) {
      best = v;
      best_idx = s;
      have = true;
    }
  }
  return {best, best_idx};
}

SolveResult solve_robust_finite(const Items& items, const FiniteUncertainty& u,
                                const CapacityRange& range, TiePolicy tie) {
  items.validate();
  range.validate(items);
  Pwl env = robust_finite_envelope(items, u, tie, range.b_lo, range.b_hi);
  MaxResult m = maximize(env, range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  auto [worst_v, worst_s] = eval_robust_finite(items, u, tie, m.b_star);
  if (worst_v != m.value) {
    throw InternalError("robust envelope and scenario recomputation disagree");
  }
  out.worst_scenario = worst_s;
  out.worst_c = u.scenarios[worst_s];
  out.follower_x = follower_solve(items, u.scenarios[worst_s], m.b_star, tie).x;
  out.solver = "robust_finite";
  return out;
}

}  // namespace bk

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

#include "bk/certain.hpp"

#include <algorithm>
#include <numeric>

#include "bk/errors.hpp"

namespace bk {

NormalizedObjective normalize_objective(const std::vector<Rat>& d_raw,
                                        const Rat& delta,
                                        const std::vector<Rat>& a) {
  if (d_raw.size() != a.size()) {
    throw InputError("normalize_objective: vector lengths differ");
  }
  if (a.empty()) throw InputError("normalize_objective: empty instance");
  for (const Rat& ai : a) {
    if (ai <= 0) throw InputError("normalize_objective: sizes must be positive");
  }
  NormalizedObjective out;
  out.d_pure.reserve(a.size());
  Rat eps = delta;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.d_pure.push_back(d_raw[i] - delta * a[i]);
    Rat ratio = d_raw[i] / a[i];
    if (ratio < eps) eps = ratio;
  }
  out.d_nonneg.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.d_nonneg.push_back(d_raw[i] - eps * a[i]);
  }
  out.delta_nonneg = delta - eps;
  return out;
}

std::vector<int> follower_order(const Items& items, const std::vector<Rat>& c,
                                TiePolicy tie) {
  items.validate();
  validate_profits(items, c);
  std::vector<int> order(items.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    Rat pi = c[i] / items.a[i];
    Rat pj = c[j] / items.a[j];
    if (pi != pj) return pi > pj;
    Rat di = items.d[i] / items.a[i];
    Rat dj = items.d[j] / items.a[j];
    if (di != dj) {
      return tie == TiePolicy::kOptimistic ? di > dj : di < dj;
    }
    return i < j;
  });
  return order;
}

FollowerSolution follower_solve(const Items& items, const std::vector<Rat>& c,
                                const Rat& b, TiePolicy tie) {
  if (b < 0 || b > items.total_size()) {
    throw InputError("follower_solve: capacity outside [0, sum of sizes]");
  }
  std::vector<int> order = follower_order(items, c, tie);
  FollowerSolution sol;
  sol.x.assign(items.n(), Rat(0));
  Rat remaining = b;
  for (int i : order) {
    if (remaining <= 0) break;
    if (items.a[i] <= remaining) {
      sol.x[static_cast<std::size_t>(i)] = 1;
      remaining -= items.a[i];
    } else {
      sol.x[static_cast<std::size_t>(i)] = remaining / items.a[i];
      remaining = 0;
    }
  }
  return sol;
}

FractionalPrefix dantzig_min(const std::vector<int>& subset,
                             const Items& items, const Rat& b) {
  FractionalPrefix out;
  if (b == 0) return out;
  if (b < 0) throw InputError("dantzig_min: negative capacity");
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    Rat ri = items.d[i] / items.a[i];
    Rat rj = items.d[j] / items.a[j];
    if (ri != rj) return ri < rj;
    return i < j;
  });
  Rat remaining = b;
  for (int i : order) {
    out.members.push_back(i);
    out.last = i;
    if (items.a[i] < remaining) {
      remaining -= items.a[i];
    } else {
      out.fraction = remaining / items.a[i];
      std::sort(out.members.begin(), out.members.end());
      return out;
    }
  }
  throw InputError("dantzig_min: capacity exceeds the subset's total size");
}

Pwl min_profile(const std::vector<int>& subset, const Items& items,
                const Rat& lo, const Rat& hi) {
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    Rat ri = items.d[i] / items.a[i];
    Rat rj = items.d[j] / items.a[j];
    if (ri != rj) return ri < rj;
    return i < j;
  });
  std::vector<PwlPoint> pts;
  pts.reserve(order.size() + 1);
  Rat b = 0;
  Rat v = 0;
  pts.push_back({b, v});
  for (int i : order) {
    b += items.a[i];
    v += items.d[i];
    pts.push_back({b, v});
  }
  if (lo < 0 || hi > b) {
    throw InputError("min_profile: range exceeds [0, sum of subset sizes]");
  }
  return Pwl(std::move(pts)).clip(lo, hi);
}

Pwl leader_pwl(const Items& items, const std::vector<Rat>& c, TiePolicy tie,
               const Rat& lo, const Rat& hi) {
  std::vector<int> order = follower_order(items, c, tie);
  std::vector<PwlPoint> pts;
  pts.reserve(order.size() + 1);
  Rat b = 0;
  Rat v = 0;
  pts.push_back({b, v});
  for (int i : order) {
    b += items.a[i];
    v += items.d[i];
    pts.push_back({b, v});
  }
  return Pwl(std::move(pts)).clip(lo, hi);
}

SolveResult solve_certain(const Items& items, const std::vector<Rat>& c,
                          const CapacityRange& range, TiePolicy tie) {
  items.validate();
  validate_profits(items, c);
  range.validate(items);
  Pwl f = leader_pwl(items, c, tie, range.b_lo, range.b_hi);
  MaxResult m = maximize(f, range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  out.follower_x = follower_solve(items, c, m.b_star, tie).x;
  out.solver = "certain";
  return out;
}

}  // namespace bk

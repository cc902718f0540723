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

#include "bk/robust_interval.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bk/certain.hpp"
#include "bk/errors.hpp"

namespace bk {

void IntervalUncertainty::validate(const Items& items) const {
  if (c_lo.size() != items.n() || c_hi.size() != items.n()) {
    throw InputError("interval uncertainty: bound lengths must match items");
  }
  for (std::size_t i = 0; i < items.n(); ++i) {
    if (!(0 < c_lo[i] && c_lo[i] <= c_hi[i])) {
      throw InputError("interval uncertainty: need 0 < c_lo <= c_hi");
    }
  }
}

IntervalOrder build_interval_order(const Items& items,
                                   const IntervalUncertainty& u) {
  items.validate();
  u.validate(items);
  IntervalOrder order;
  order.p_lo.reserve(items.n());
  order.p_hi.reserve(items.n());
  for (std::size_t i = 0; i < items.n(); ++i) {
    order.p_lo.push_back(-u.c_hi[i] / items.a[i]);
    order.p_hi.push_back(-u.c_lo[i] / items.a[i]);
  }
  return order;
}

IntervalOrder optimistic_preprocess(const Items& items,
                                    const IntervalUncertainty& u,
                                    IntervalOrder order) {
  u.validate(items);
  const int n = static_cast<int>(items.n());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || order.p_hi[i] != order.p_lo[j]) continue;
      if (items.d[i] / items.a[i] < items.d[j] / items.a[j]) {
        order.forced.insert({i, j});
      }
    }
  }
  return order;
}

namespace {

struct HeadSets {
  bool feasible = false;   // p-interval geometry admits this head at all
  std::vector<int> zero;   // items incomparable to the head, including it
  Rat minus_a;             // total size of items strictly before the head
  Rat minus_d;             // total value of items strictly before the head
  Rat zero_a;              // total size of `zero`
};

// Items strictly before head k are packed fully; `zero` covers everything
// whose p-interval contains p_lo[k] and that is not separated from k by a
// forced relation. A forced pair inside `zero` drops the successor: with it
// present the unconstrained greedy could pick the successor alone, which no
// linear extension allows.
HeadSets head_sets(const Items& items, const IntervalOrder& order, int k) {
  const int n = static_cast<int>(items.n());
  HeadSets out;
  std::vector<int> base;
  for (int i = 0; i < n; ++i) {
    if (i != k && order.precedes(i, k)) {
      out.minus_a += items.a[i];
      out.minus_d += items.d[i];
      continue;
    }
    if (order.p_lo[i] <= order.p_lo[k] && order.p_lo[k] <= order.p_hi[i] &&
        !order.forced.count({i, k}) && !order.forced.count({k, i})) {
      base.push_back(i);
    }
  }
  if (std::find(base.begin(), base.end(), k) == base.end()) return out;
  out.feasible = true;
  for (int j : base) {
    bool dominated = false;
    for (int i : base) {
      if (i != j && order.forced.count({i, j})) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      out.zero.push_back(j);
      out.zero_a += items.a[j];
    }
  }
  return out;
}

Rat prefix_value(const Items& items, const FractionalPrefix& p) {
  Rat v = 0;
  for (int i : p.members) v += items.d[i];
  if (!p.empty()) v -= (1 - p.fraction) * items.d[p.last];
  return v;
}

}  // namespace

AdversaryResult adversary_solve(const Items& items, const IntervalOrder& order,
                                const Rat& b) {
  if (b < 0 || b > items.total_size()) {
    throw InputError("adversary_solve: capacity outside [0, sum of sizes]");
  }
  AdversaryResult best;
  best.value = 0;
  if (b == 0) return best;
  bool have = false;
  const int n = static_cast<int>(items.n());
  // Without forced relations every head set is a function of p_lo[k] alone,
  // so later heads sharing the endpoint repeat an earlier computation; the
  // smallest-head tie break keeps the first representative anyway.
  std::set<Rat> seen;
  for (int k = 0; k < n; ++k) {
    if (order.forced.empty() && !seen.insert(order.p_lo[k]).second) continue;
    HeadSets hs = head_sets(items, order, k);
    if (!hs.feasible) continue;
    Rat avail = b - hs.minus_a;
    if (!(0 < avail && avail <= hs.zero_a)) continue;
    FractionalPrefix sub = dantzig_min(hs.zero, items, avail);
    Rat value = hs.minus_d + prefix_value(items, sub);
    if (have && value >= best.value) continue;
    have = true;
    best.value = value;
    best.head = k;
    best.prefix = sub;
    for (int i = 0; i < n; ++i) {
      if (i != k && order.precedes(i, k)) best.prefix.members.push_back(i);
    }
    std::sort(best.prefix.members.begin(), best.prefix.members.end());
  }
  if (!have) throw InternalError("adversary_solve: no head admits capacity b");
  return best;
}

std::vector<Rat> recover_scenario(const Items& items,
                                  const IntervalUncertainty& u,
                                  const IntervalOrder& order,
                                  const FractionalPrefix& prefix, int head) {
  u.validate(items);
  if (prefix.empty()) return u.c_lo;
  const int n = static_cast<int>(items.n());
  if (head < 0 || head >= n) {
    throw InputError("recover_scenario: head index out of range");
  }
  std::vector<Rat> c = u.c_lo;
  for (int i : prefix.members) c[static_cast<std::size_t>(i)] = u.c_hi[i];
  const int j = prefix.last;
  c[static_cast<std::size_t>(j)] =
      u.c_hi[static_cast<std::size_t>(head)] /
      items.a[static_cast<std::size_t>(head)] *
      items.a[static_cast<std::size_t>(j)];
  if (c[static_cast<std::size_t>(j)] < u.c_lo[static_cast<std::size_t>(j)] ||
      c[static_cast<std::size_t>(j)] > u.c_hi[static_cast<std::size_t>(j)]) {
    throw InputError("recover_scenario: prefix and head are inconsistent");
  }
  return c;
}

PartialPwl robust_interval_envelope(const Items& items,
                                    const IntervalOrder& order, const Rat& lo,
                                    const Rat& hi) {
  const int n = static_cast<int>(items.n());
  // One global value-density order; each head's profile is a filtered prefix
  // scan of it.
  std::vector<int> global(static_cast<std::size_t>(n));
  std::iota(global.begin(), global.end(), 0);
  std::vector<Rat> ratio(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ratio[i] = items.d[i] / items.a[i];
  std::sort(global.begin(), global.end(), [&](int i, int j) {
    if (ratio[i] != ratio[j]) return ratio[i] < ratio[j];
    return i < j;
  });
  std::vector<PartialPwl> parts;
  if (lo == 0) parts.emplace_back(Pwl{{Rat(0), Rat(0)}});
  std::vector<char> in_zero(static_cast<std::size_t>(n));
  // Heads with equal p_lo produce identical pieces when nothing is forced.
  std::set<Rat> seen;
  for (int k = 0; k < n; ++k) {
    if (order.forced.empty() && !seen.insert(order.p_lo[k]).second) continue;
    HeadSets hs = head_sets(items, order, k);
    if (!hs.feasible) continue;
    Rat piece_lo = lo > hs.minus_a ? lo : hs.minus_a;
    Rat head_hi = hs.minus_a + hs.zero_a;
    Rat piece_hi = hi < head_hi ? hi : head_hi;
    if (piece_lo > piece_hi) continue;
    std::fill(in_zero.begin(), in_zero.end(), 0);
    for (int i : hs.zero) in_zero[static_cast<std::size_t>(i)] = 1;
    std::vector<PwlPoint> pts;
    pts.reserve(hs.zero.size() + 1);
    Rat b = hs.minus_a;
    Rat v = hs.minus_d;
    pts.push_back({b, v});
    for (int i : global) {
      if (!in_zero[static_cast<std::size_t>(i)]) continue;
      b += items.a[i];
      v += items.d[i];
      pts.push_back({b, v});
    }
    parts.emplace_back(Pwl(std::move(pts)).clip(piece_lo, piece_hi));
  }
  if (parts.empty()) {
    throw InternalError("interval envelope: no head covers the range");
  }
  return lower_envelope_partial(parts);
}

SolveResult solve_robust_interval(const Items& items,
                                  const IntervalUncertainty& u,
                                  const CapacityRange& range, TiePolicy tie) {
  items.validate();
  u.validate(items);
  range.validate(items);
  IntervalOrder order = build_interval_order(items, u);
  if (tie == TiePolicy::kOptimistic) {
    order = optimistic_preprocess(items, u, std::move(order));
  }
  PartialPwl env = robust_interval_envelope(items, order, range.b_lo,
                                            range.b_hi);
  MaxResult m = maximize_partial(env, range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  AdversaryResult adv = adversary_solve(items, order, m.b_star);
  if (adv.value != m.value) {
    throw InternalError("interval solver: envelope and adversary disagree");
  }
  out.worst_head = adv.head;
  out.worst_prefix = adv.prefix;
  out.worst_c = recover_scenario(items, u, order, adv.prefix, adv.head);
  out.follower_x = adv.prefix.to_x(items.n());
  out.solver = "robust_interval";
  return out;
}

std::vector<std::vector<int>> enumerate_linear_extensions(
    const IntervalOrder& order, std::size_t bound) {
  const std::size_t n = order.p_lo.size();
  if (n > bound) {
    throw BudgetError("linear extension enumeration: instance too large");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> placed(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (int j = 0; j < static_cast<int>(n); ++j) {
      if (placed[static_cast<std::size_t>(j)]) continue;
      bool ready = true;
      for (int i = 0; i < static_cast<int>(n); ++i) {
        if (i != j && !placed[static_cast<std::size_t>(i)] &&
            order.precedes(i, j)) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      placed[static_cast<std::size_t>(j)] = 1;
      current.push_back(j);
      self(self);
      current.pop_back();
      placed[static_cast<std::size_t>(j)] = 0;
    }
  };
  rec(rec);
  return out;
}

SolveResult oracle_solve_interval(const Items& items,
                                  const IntervalUncertainty& u,
                                  const CapacityRange& range, TiePolicy tie,
                                  std::size_t bound) {
  items.validate();
  u.validate(items);
  range.validate(items);
  IntervalOrder order = build_interval_order(items, u);
  if (tie == TiePolicy::kOptimistic) {
    order = optimistic_preprocess(items, u, std::move(order));
  }
  std::vector<Pwl> profiles;
  for (const std::vector<int>& ext : enumerate_linear_extensions(order, bound)) {
    std::vector<PwlPoint> pts;
    pts.reserve(ext.size() + 1);
    Rat b = 0;
    Rat v = 0;
    pts.push_back({b, v});
    for (int i : ext) {
      b += items.a[i];
      v += items.d[i];
      pts.push_back({b, v});
    }
    profiles.push_back(Pwl(std::move(pts)).clip(range.b_lo, range.b_hi));
  }
  MaxResult m = maximize(lower_envelope(profiles), range.b_lo, range.b_hi);
  SolveResult out;
  out.b_star = m.b_star;
  out.value = m.value;
  out.solver = "oracle_interval";
  return out;
}

}  // namespace bk

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

#include "bk/robust_hard.hpp"

#include <algorithm>

#include "bk/errors.hpp"

namespace bk {

void ProductFiniteUncertainty::validate(const Items& items) const {
  if (options.size() != items.n()) {
    throw InputError("product uncertainty: one option set per item required");
  }
  for (const auto& set : options) {
    if (set.empty()) {
      throw InputError("product uncertainty: option sets must be nonempty");
    }
    for (const Rat& c : set) {
      if (c <= 0) {
        throw InputError("product uncertainty: options must be positive");
      }
    }
  }
}

std::size_t ProductFiniteUncertainty::scenario_count(std::size_t cap) const {
  std::size_t count = 1;
  for (const auto& set : options) {
    if (count > cap / set.size() + 1) return cap + 1;
    count *= set.size();
    if (count > cap) return cap + 1;
  }
  return count;
}

void SimplexUncertainty::validate(const Items& items) const {
  if (c_hat.size() != items.n()) {
    throw InputError("simplex uncertainty: c_hat length must match items");
  }
  for (const Rat& c : c_hat) {
    if (c <= 0) throw InputError("simplex uncertainty: c_hat must be positive");
  }
  if (gamma <= 0) throw InputError("simplex uncertainty: gamma must be positive");
}

void PNormUncertainty::validate(const Items& items) const {
  if (c_hat.size() != items.n()) {
    throw InputError("p-norm uncertainty: c_hat length must match items");
  }
  if (gamma <= 0) throw InputError("p-norm uncertainty: gamma must be positive");
  if (p < 1) throw InputError("p-norm uncertainty: exponent must be >= 1");
  for (const Rat& c : c_hat) {
    // Keeps the ball inside the positive orthant.
    if (c - gamma <= 0) {
      throw InputError("p-norm uncertainty: need c_hat - gamma > 0");
    }
  }
}

BigInt SubsetSumInstance::total() const {
  BigInt s = 0;
  for (const BigInt& wi : w) s += wi;
  return s;
}

void SubsetSumInstance::validate() const {
  if (w.empty()) throw InputError("subset sum: at least one weight required");
  for (const BigInt& wi : w) {
    if (wi <= 0) throw InputError("subset sum: weights must be positive");
  }
  if (target < 1 || target > total() - 1) {
    throw InputError("subset sum: need 1 <= target <= sum(w) - 1");
  }
}

std::vector<std::vector<Rat>> expand_product(const ProductFiniteUncertainty& u,
                                             std::size_t budget) {
  if (u.scenario_count(budget) > budget) {
    throw BudgetError("product uncertainty: scenario count exceeds budget");
  }
  std::vector<std::vector<Rat>> out;
  std::vector<std::size_t> idx(u.options.size(), 0);
  const std::size_t n = u.options.size();
  for (;;) {
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = u.options[i][idx[i]];
    out.push_back(std::move(c));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < u.options[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

SolveResult solve_product_finite(const Items& items,
                                 const ProductFiniteUncertainty& u,
                                 const CapacityRange& range, TiePolicy tie,
                                 std::size_t budget) {
  items.validate();
  u.validate(items);
  range.validate(items);
  FiniteUncertainty fin{expand_product(u, budget)};
  SolveResult out = solve_robust_finite(items, fin, range, tie);
  out.solver = "product_finite";
  return out;
}

GadgetProduct gen_gadget_product(const SubsetSumInstance& ss) {
  ss.validate();
  const std::size_t m = ss.w.size();
  const std::size_t n = m + 2;
  const Rat eps(1, 4);
  const Rat big = Rat(ss.total()) + eps;
  GadgetProduct g;
  g.items.a.push_back(eps);
  g.items.d.push_back(-big);
  for (const BigInt& wi : ss.w) {
    g.items.a.push_back(Rat(wi));
    g.items.d.push_back(-Rat(wi));
  }
  g.items.a.push_back(big);
  g.items.d.push_back(eps);
  g.range.b_lo = Rat(ss.target);
  g.range.b_hi = Rat(ss.target) + 2 * eps;
  g.u.options.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.u.options[i] = {Rat(i + 1) * g.items.a[i],
                      Rat(n + i + 1) * g.items.a[i]};
  }
  return g;
}

bool decide_subset_sum_product(const SubsetSumInstance& ss,
                               std::size_t budget) {
  GadgetProduct g = gen_gadget_product(ss);
  SolveResult r = solve_product_finite(g.items, g.u, g.range,
                                       TiePolicy::kPessimistic, budget);
  return r.b_star != g.range.b_hi;
}

namespace {

// Attainable subset sums as a bitmap of size sum(w) + 1.
std::vector<char> reachable_sums(const std::vector<BigInt>& w,
                                 std::size_t table_budget) {
  BigInt total = 0;
  for (const BigInt& wi : w) total += wi;
  if (total > table_budget) {
    throw BudgetError("subset sum table: total weight exceeds budget");
  }
  const std::size_t cap = static_cast<std::size_t>(total);
  std::vector<char> reach(cap + 1, 0);
  reach[0] = 1;
  for (const BigInt& wi : w) {
    const std::size_t step = static_cast<std::size_t>(wi);
    for (std::size_t s = cap; s >= step; --s) {
      if (reach[s - step]) reach[s] = 1;
      if (s == step) break;
    }
  }
  return reach;
}

}  // namespace

BigInt largest_subset_sum_leq(const std::vector<BigInt>& w, const BigInt& cap,
                              std::size_t table_budget) {
  if (cap < 0) throw InputError("subset sum: negative capacity");
  std::vector<char> reach = reachable_sums(w, table_budget);
  std::size_t hi = reach.size() - 1;
  if (cap < BigInt(hi)) hi = static_cast<std::size_t>(cap);
  for (std::size_t s = hi;; --s) {
    if (reach[s]) return BigInt(s);
    if (s == 0) break;
  }
  return 0;
}

Rat shape_f_product(const SubsetSumInstance& ss, const Rat& b) {
  ss.validate();
  const Rat eps(1, 4);
  const Rat big = Rat(ss.total()) + eps;
  if (b < eps || b >= big) {
    throw InputError("gadget shape: capacity outside [eps, M)");
  }
  std::vector<char> reach = reachable_sums(ss.w, 1000000);
  // v1: largest attainable sum with v1 + eps <= b; v2: the next one up.
  long long v1 = -1;
  long long v2 = -1;
  for (std::size_t s = 0; s < reach.size(); ++s) {
    if (!reach[s]) continue;
    if (Rat(s) + eps <= b) {
      v1 = static_cast<long long>(s);
    } else if (v2 < 0) {
      v2 = static_cast<long long>(s);
    }
  }
  if (v1 < 0) throw InternalError("gadget shape: no attainable sum below b");
  Rat f = -big - v1 + eps / big * (b - v1 - eps);
  if (v2 >= 0 && b >= Rat(v2)) {
    Rat alt = -big / eps * (b - v2) - v2;
    if (alt < f) f = alt;
  }
  return f;
}

GadgetSimplex gen_gadget_simplex(const SubsetSumInstance& ss) {
  ss.validate();
  const Rat big = Rat(ss.total()) + 1;
  GadgetSimplex g;
  for (const BigInt& wi : ss.w) {
    g.items.a.push_back(Rat(wi));
    g.items.d.push_back(-Rat(wi));
    g.u.c_hat.push_back((2 * big - 1) * Rat(wi));
  }
  g.items.a.push_back(big);
  g.items.d.push_back(big);
  g.u.c_hat.push_back(2 * big * big);
  g.u.gamma = Rat(ss.target);
  g.range.b_lo = 0;
  g.range.b_hi = Rat(ss.total()) + big;
  return g;
}

namespace {

// Recovers the source weights of a simplex-shaped gadget or throws
// InputError. The solver is exact only for this family.
std::vector<BigInt> check_simplex_gadget(const Items& items,
                                         const SimplexUncertainty& u,
                                         const CapacityRange& range,
                                         unsigned m_budget) {
  items.validate();
  u.validate(items);
  if (items.n() < 2) {
    throw InputError("simplex family: gadget needs at least two items");
  }
  const std::size_t m = items.n() - 1;
  if (m > m_budget) {
    throw BudgetError("simplex family: weight count exceeds budget");
  }
  std::vector<BigInt> w;
  BigInt total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (denominator(items.a[i]) != 1 || items.a[i] <= 0) {
      throw InputError("simplex family: weights must be positive integers");
    }
    w.push_back(numerator(items.a[i]));
    total += w.back();
  }
  const Rat big = Rat(total) + 1;
  bool ok = items.a[m] == big && items.d[m] == big &&
            u.c_hat[m] == 2 * big * big;
  for (std::size_t i = 0; ok && i < m; ++i) {
    ok = items.d[i] == -items.a[i] && u.c_hat[i] == (2 * big - 1) * items.a[i];
  }
  if (ok) ok = range.b_lo == 0 && range.b_hi == Rat(total) + big;
  if (!ok) {
    throw InputError("simplex family: instance is not of the gadget form");
  }
  return w;
}

}  // namespace

SolveResult solve_simplex_family(const Items& items,
                                 const SimplexUncertainty& u,
                                 const CapacityRange& range, TiePolicy tie,
                                 unsigned m_budget) {
  (void)tie;  // equal-ratio items cost the adversary nothing extra either way
  std::vector<BigInt> w = check_simplex_gadget(items, u, range, m_budget);
  const Rat big = items.a[items.n() - 1];
  BigInt cap = numerator(u.gamma) / denominator(u.gamma);
  BigInt v_star = largest_subset_sum_leq(w, cap);
  SolveResult out;
  out.b_star = Rat(v_star) + big;
  out.value = big - Rat(v_star);
  // Witness subset: item i joins unless the prefix before it already
  // reaches the remaining target.
  BigInt remaining = v_star;
  out.follower_x.assign(items.n(), Rat(0));
  for (std::size_t i = w.size(); i-- > 0;) {
    std::vector<BigInt> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    bool skip = largest_subset_sum_leq(prefix, remaining) == remaining;
    if (!skip) {
      out.follower_x[i] = 1;
      remaining -= w[i];
    }
  }
  if (remaining != 0) {
    throw InternalError("simplex family: witness reconstruction failed");
  }
  out.follower_x[items.n() - 1] = 1;
  std::vector<Rat> c = u.c_hat;
  for (std::size_t i = 0; i + 1 < items.n(); ++i) {
    if (out.follower_x[i] == 1) c[i] += items.a[i];
  }
  out.worst_c = std::move(c);
  out.solver = "simplex_family";
  return out;
}

Pwl simplex_family_profile(const Items& items, const SimplexUncertainty& u,
                           unsigned m_budget) {
  CapacityRange full{Rat(0), Rat(0)};
  // Re-derive the gadget range rather than trusting the caller's.
  {
    Rat total = 0;
    for (std::size_t i = 0; i + 1 < items.n(); ++i) total += items.a[i];
    full.b_hi = total + (total + 1);
  }
  std::vector<BigInt> w = check_simplex_gadget(items, u, full, m_budget);
  const Rat big = items.a[items.n() - 1];
  BigInt cap = numerator(u.gamma) / denominator(u.gamma);
  Rat v = Rat(largest_subset_sum_leq(w, cap));
  std::vector<PwlPoint> pts{{Rat(0), Rat(0)},
                            {v, -v},
                            {v + big, big - v},
                            {full.b_hi, Rat(1)}};
  return Pwl(std::move(pts));
}

Rat eval_simplex_family(const Items& items, const SimplexUncertainty& u,
                        const Rat& b, unsigned m_budget) {
  return simplex_family_profile(items, u, m_budget).eval(b);
}

GadgetPNorm gen_gadget_pnorm(const SubsetSumInstance& ss, const Rat& p,
                             unsigned precision_bits) {
  // Looser target bound than the decision gadgets: the generator is also
  // used for pure root-approximation instances with target == sum(w).
  if (ss.w.empty()) throw InputError("subset sum: at least one weight required");
  for (const BigInt& wi : ss.w) {
    if (wi <= 0) throw InputError("subset sum: weights must be positive");
  }
  if (ss.target < 1 || ss.target > ss.total()) {
    throw InputError("p-norm gadget: need 1 <= target <= sum(w)");
  }
  if (p < 1) throw InputError("p-norm gadget: exponent must be >= 1");
  const Rat big = Rat(ss.total()) + 1;
  GadgetPNorm g;
  for (const BigInt& wi : ss.w) {
    g.items.a.push_back(Rat(wi));
    g.items.d.push_back(-Rat(wi));
    g.u.c_hat.push_back(2 * big * Rat(wi) -
                        approx_root(wi, p, precision_bits));
  }
  g.items.a.push_back(big);
  g.items.d.push_back(big);
  g.u.c_hat.push_back(2 * big * big);
  g.u.gamma = approx_root(ss.target, p, precision_bits);
  g.u.p = p;
  g.u.precision_bits = precision_bits;
  g.range.b_lo = 0;
  g.range.b_hi = Rat(ss.total()) + big;
  g.u.validate(g.items);
  return g;
}

}  // namespace bk

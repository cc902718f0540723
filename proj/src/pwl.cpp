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

#include "bk/pwl.hpp"

#include <algorithm>
#include <optional>

#include "bk/errors.hpp"

namespace bk {

namespace {

bool collinear(const PwlPoint& p0, const PwlPoint& p1, const PwlPoint& p2) {
  return (p1.v - p0.v) * (p2.b - p1.b) == (p2.v - p1.v) * (p1.b - p0.b);
}

// Incremental evaluator for nondecreasing query coordinates.
class Cursor {
 public:
  explicit Cursor(const Pwl& f) : pts_(f.points()) {}

  Rat at(const Rat& b) {
    while (i_ + 1 < pts_.size() && pts_[i_ + 1].b <= b) ++i_;
    const PwlPoint& p = pts_[i_];
    if (p.b == b || i_ + 1 == pts_.size()) return p.v;
    const PwlPoint& q = pts_[i_ + 1];
    return p.v + (q.v - p.v) * (b - p.b) / (q.b - p.b);
  }

 private:
  const std::vector<PwlPoint>& pts_;
  std::size_t i_ = 0;
};

std::vector<Rat> merged_coords(const Pwl& f, const Pwl& g) {
  std::vector<Rat> xs;
  xs.reserve(f.points().size() + g.points().size());
  std::size_t i = 0, j = 0;
  const auto& fp = f.points();
  const auto& gp = g.points();
  while (i < fp.size() || j < gp.size()) {
    if (j == gp.size() || (i < fp.size() && fp[i].b <= gp[j].b)) {
      if (xs.empty() || xs.back() != fp[i].b) xs.push_back(fp[i].b);
      ++i;
    } else {
      if (xs.empty() || xs.back() != gp[j].b) xs.push_back(gp[j].b);
      ++j;
    }
  }
  return xs;
}

void require_common_domain(const std::vector<Pwl>& fs) {
  if (fs.empty()) throw InputError("function list must be nonempty");
  for (const Pwl& f : fs) {
    if (f.domain_lo() != fs.front().domain_lo() ||
        f.domain_hi() != fs.front().domain_hi()) {
      throw InputError("functions must share one common domain");
    }
  }
}

Pwl envelope2(const Pwl& f, const Pwl& g) {
  if (f.is_point()) {
    return Pwl({{f.domain_lo(), std::min(f.points()[0].v, g.points()[0].v)}});
  }
  const std::vector<Rat> xs = merged_coords(f, g);
  std::vector<PwlPoint> out;
  out.reserve(xs.size() + 4);
  Cursor cf(f), cg(g);
  Rat f1 = cf.at(xs[0]), g1 = cg.at(xs[0]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rat f2 = cf.at(xs[i + 1]), g2 = cg.at(xs[i + 1]);
    const Rat d1 = f1 - g1, d2 = f2 - g2;
    if (d1 <= 0 && d2 <= 0) {
      out.push_back({xs[i], f1});
    } else if (d1 >= 0 && d2 >= 0) {
      out.push_back({xs[i], g1});
    } else {
      // Strict sign change: the segments intersect in the interior.
      const Rat t = d1 / (d1 - d2);
      out.push_back({xs[i], d1 < 0 ? f1 : g1});
      out.push_back({xs[i] + (xs[i + 1] - xs[i]) * t, f1 + (f2 - f1) * t});
    }
    f1 = std::move(f2);
    g1 = std::move(g2);
  }
  out.push_back({xs.back(), std::min(f1, g1)});
  return Pwl(std::move(out));
}

Pwl sum2(const Pwl& f, const Pwl& g) {
  if (f.is_point()) {
    return Pwl({{f.domain_lo(), f.points()[0].v + g.points()[0].v}});
  }
  const std::vector<Rat> xs = merged_coords(f, g);
  std::vector<PwlPoint> out;
  out.reserve(xs.size());
  Cursor cf(f), cg(g);
  for (const Rat& x : xs) out.push_back({x, cf.at(x) + cg.at(x)});
  return Pwl(std::move(out));
}

Pwl scale(const Pwl& f, const Rat& w) {
  std::vector<PwlPoint> out = f.points();
  for (PwlPoint& p : out) p.v *= w;
  return Pwl(std::move(out));
}

template <typename Merge, typename T>
T reduce_pairwise(std::vector<T> xs, Merge merge) {
  while (xs.size() > 1) {
    std::vector<T> next;
    next.reserve((xs.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      next.push_back(merge(xs[i], xs[i + 1]));
    }
    if (xs.size() % 2 == 1) next.push_back(std::move(xs.back()));
    xs = std::move(next);
  }
  return std::move(xs.front());
}

}  // namespace

Pwl::Pwl(std::vector<PwlPoint> points) {
  if (points.empty()) throw InputError("Pwl requires at least one breakpoint");
  points_.reserve(points.size());
  for (PwlPoint& p : points) {
    if (!points_.empty()) {
      if (p.b == points_.back().b) {
        if (p.v != points_.back().v) {
          throw InputError("Pwl breakpoints must be strictly increasing in b");
        }
        continue;
      }
      if (p.b < points_.back().b) {
        throw InputError("Pwl breakpoints must be strictly increasing in b");
      }
      while (points_.size() >= 2 &&
             collinear(points_[points_.size() - 2], points_.back(), p)) {
        points_.pop_back();
      }
    }
    points_.push_back(std::move(p));
  }
}

Rat Pwl::eval(const Rat& b) const {
  if (b < domain_lo() || b > domain_hi()) {
    throw InputError("Pwl::eval: argument outside the function's domain");
  }
  auto it = std::upper_bound(
      points_.begin(), points_.end(), b,
      [](const Rat& x, const PwlPoint& p) { return x < p.b; });
  // it points past the last breakpoint with coordinate <= b.
  const PwlPoint& p = *(it - 1);
  if (p.b == b) return p.v;
  const PwlPoint& q = *it;
  return p.v + (q.v - p.v) * (b - p.b) / (q.b - p.b);
}

Rat Pwl::right_slope(const Rat& b) const {
  if (b < domain_lo() || b >= domain_hi()) {
    throw InputError("Pwl::right_slope: no linear piece right of b");
  }
  auto it = std::upper_bound(
      points_.begin(), points_.end(), b,
      [](const Rat& x, const PwlPoint& p) { return x < p.b; });
  const PwlPoint& p = *(it - 1);
  const PwlPoint& q = *it;
  return (q.v - p.v) / (q.b - p.b);
}

Pwl Pwl::clip(const Rat& lo, const Rat& hi) const {
  if (lo > hi) throw InputError("Pwl::clip: empty range");
  if (lo < domain_lo() || hi > domain_hi()) {
    throw InputError("Pwl::clip: range outside the function's domain");
  }
  if (lo == hi) return Pwl({{lo, eval(lo)}});
  std::vector<PwlPoint> out;
  out.push_back({lo, eval(lo)});
  for (const PwlPoint& p : points_) {
    if (p.b > lo && p.b < hi) out.push_back(p);
  }
  out.push_back({hi, eval(hi)});
  return Pwl(std::move(out));
}

Pwl Pwl::shift(const Rat& db, const Rat& dv) const {
  std::vector<PwlPoint> out = points_;
  for (PwlPoint& p : out) {
    p.b += db;
    p.v += dv;
  }
  return Pwl(std::move(out));
}

Pwl lower_envelope(const std::vector<Pwl>& fs) {
  require_common_domain(fs);
  return reduce_pairwise(fs, envelope2);
}

Pwl weighted_sum(const std::vector<Pwl>& fs, const std::vector<Rat>& weights) {
  require_common_domain(fs);
  if (fs.size() != weights.size()) {
    throw InputError("weighted_sum: weights must match functions in length");
  }
  std::vector<Pwl> scaled;
  scaled.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (weights[i] < 0) throw InputError("weighted_sum: negative weight");
    scaled.push_back(scale(fs[i], weights[i]));
  }
  return reduce_pairwise(std::move(scaled), sum2);
}

MaxResult maximize(const Pwl& f, const Rat& lo, const Rat& hi) {
  if (lo > hi) throw InputError("maximize: empty range");
  if (lo < f.domain_lo() || hi > f.domain_hi()) {
    throw InputError("maximize: range outside the function's domain");
  }
  MaxResult best{lo, f.eval(lo)};
  auto consider = [&](const Rat& b) {
    Rat v = f.eval(b);
    if (v > best.value) best = {b, std::move(v)};
  };
  for (const PwlPoint& p : f.points()) {
    if (p.b > lo && p.b < hi) consider(p.b);
  }
  if (hi > lo) consider(hi);
  return best;
}

PartialPwl::PartialPwl(std::vector<Pwl> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(), [](const Pwl& a, const Pwl& b) {
    return a.domain_lo() != b.domain_lo() ? a.domain_lo() < b.domain_lo()
                                          : a.domain_hi() < b.domain_hi();
  });
  // Non-point pieces must have disjoint interiors; point pieces may sit
  // anywhere (the value at a multiply-covered coordinate is the minimum).
  std::optional<Rat> covered_hi;
  for (const Pwl& p : pieces_) {
    if (p.is_point()) continue;
    if (covered_hi && *covered_hi > p.domain_lo()) {
      throw InputError("PartialPwl pieces must have disjoint interiors");
    }
    covered_hi = p.domain_hi();
  }
}

bool PartialPwl::covers(const Rat& b) const {
  for (const Pwl& p : pieces_) {
    if (p.domain_lo() <= b && b <= p.domain_hi()) return true;
  }
  return false;
}

Rat PartialPwl::eval(const Rat& b) const {
  std::optional<Rat> best;
  for (const Pwl& p : pieces_) {
    if (p.domain_lo() <= b && b <= p.domain_hi()) {
      Rat v = p.eval(b);
      if (!best || v < *best) best = std::move(v);
    }
  }
  if (!best) throw InputError("PartialPwl::eval: argument not covered");
  return *best;
}

namespace {

PartialPwl merge_partial2(const PartialPwl& fa, const PartialPwl& fb) {
  if (fa.pieces().empty()) return fb;
  if (fb.pieces().empty()) return fa;

  std::vector<Rat> xs;
  for (const PartialPwl* list : {&fa, &fb}) {
    for (const Pwl& p : list->pieces()) {
      xs.push_back(p.domain_lo());
      xs.push_back(p.domain_hi());
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // One piece per source can cover a given elementary interval; events
  // include every piece endpoint, so coverage is all-or-nothing.
  auto covering = [](const std::vector<Pwl>& pieces, std::size_t& idx,
                     const Rat& x1, const Rat& x2) -> const Pwl* {
    while (idx < pieces.size() && pieces[idx].domain_hi() < x2) ++idx;
    if (idx < pieces.size() && pieces[idx].domain_lo() <= x1 &&
        pieces[idx].domain_hi() >= x2) {
      return &pieces[idx];
    }
    return nullptr;
  };

  std::vector<Pwl> raw;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat& x1 = xs[i];
    const Rat& x2 = xs[i + 1];
    const Pwl* pa = covering(fa.pieces(), ia, x1, x2);
    const Pwl* pb = covering(fb.pieces(), ib, x1, x2);
    if (pa && pb) {
      raw.push_back(envelope2(pa->clip(x1, x2), pb->clip(x1, x2)));
    } else if (pa) {
      raw.push_back(pa->clip(x1, x2));
    } else if (pb) {
      raw.push_back(pb->clip(x1, x2));
    }
  }

  // Stitch adjacent pieces that agree at their shared endpoint.
  std::vector<Pwl> result;
  std::vector<PwlPoint> cur;
  for (const Pwl& r : raw) {
    const auto& pts = r.points();
    if (!cur.empty() && cur.back().b == pts.front().b &&
        cur.back().v == pts.front().v) {
      cur.insert(cur.end(), pts.begin() + 1, pts.end());
    } else {
      if (!cur.empty()) result.push_back(Pwl(std::move(cur)));
      cur = pts;
    }
  }
  if (!cur.empty()) result.push_back(Pwl(std::move(cur)));

  // Zero-length pieces contribute only a single value; keep them when they
  // lie strictly below everything else at their coordinate.
  for (const PartialPwl* list : {&fa, &fb}) {
    for (const Pwl& p : list->pieces()) {
      if (!p.is_point()) continue;
      const Rat& x = p.domain_lo();
      const Rat& v = p.points()[0].v;
      bool keep = true;
      for (const Pwl& r : result) {
        if (r.domain_lo() <= x && x <= r.domain_hi() && r.eval(x) <= v) {
          keep = false;
          break;
        }
      }
      if (keep) result.push_back(Pwl({{x, v}}));
    }
  }
  return PartialPwl(std::move(result));
}

}  // namespace

PartialPwl lower_envelope_partial(const std::vector<PartialPwl>& fs) {
  if (fs.empty()) throw InputError("function list must be nonempty");
  return reduce_pairwise(fs, merge_partial2);
}

MaxResult maximize_partial(const PartialPwl& f, const Rat& lo, const Rat& hi) {
  if (lo > hi) throw InputError("maximize_partial: empty range");
  // Coverage check: the pieces must jointly cover [lo, hi].
  Rat covered = lo;
  bool start_covered = false;
  for (const Pwl& p : f.pieces()) {
    if (p.domain_lo() > covered) break;
    if (p.domain_lo() <= lo && lo <= p.domain_hi()) start_covered = true;
    if (p.domain_hi() > covered) covered = p.domain_hi();
  }
  if (!start_covered || covered < hi) {
    throw InternalError("maximize_partial: range not fully covered by pieces");
  }

  // Pieces are sorted and have disjoint interiors, so candidates arrive in
  // nondecreasing b order; replacing only on strict improvement realizes the
  // leftmost tie-break.
  std::optional<MaxResult> best;
  auto consider = [&](const Rat& b) {
    Rat v = f.eval(b);
    if (!best || v > best->value) best = MaxResult{b, std::move(v)};
  };
  for (const Pwl& p : f.pieces()) {
    const Rat plo = std::max(lo, p.domain_lo());
    const Rat phi = std::min(hi, p.domain_hi());
    if (plo > phi) continue;
    consider(plo);
    for (const PwlPoint& pt : p.points()) {
      if (pt.b > plo && pt.b < phi) consider(pt.b);
    }
    if (phi > plo) consider(phi);
  }
  return *best;
}

}  // namespace bk

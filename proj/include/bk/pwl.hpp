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

#ifndef BK_PWL_HPP
#define BK_PWL_HPP

#include <utility>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

struct PwlPoint {
  Rat b;
  Rat v;
  bool operator==(const PwlPoint&) const = default;
};

// Continuous piecewise-linear function stored as its breakpoint list.
// Breakpoints are strictly increasing in b and kept canonical: collinear
// interior points are pruned on construction, so operator== is semantic
// equality. A single breakpoint encodes a point function.
class Pwl {
 public:
  explicit Pwl(std::vector<PwlPoint> points);
  Pwl(std::initializer_list<PwlPoint> points)
      : Pwl(std::vector<PwlPoint>(points)) {}

  const std::vector<PwlPoint>& points() const { return points_; }
  const Rat& domain_lo() const { return points_.front().b; }
  const Rat& domain_hi() const { return points_.back().b; }
  bool is_point() const { return points_.size() == 1; }

  /// Exact interpolated value; throws InputError outside the domain.
  Rat eval(const Rat& b) const;

  /// Slope of the linear piece directly right of b; requires b < domain_hi.
  Rat right_slope(const Rat& b) const;

  /// Restriction to [lo, hi] with interpolated endpoints. lo == hi yields a
  /// point function.
  Pwl clip(const Rat& lo, const Rat& hi) const;

  /// Translation by (db, dv).
  Pwl shift(const Rat& db, const Rat& dv) const;

  bool operator==(const Pwl&) const = default;

 private:
  std::vector<PwlPoint> points_;
};

/// Pointwise minimum of functions sharing one common domain, computed by
/// pairwise divide-and-conquer merges. Throws on an empty list or on
/// mismatched domains.
Pwl lower_envelope(const std::vector<Pwl>& fs);

/// Exact weighted sum sum_i weights[i] * fs[i] over a common domain.
/// Weights must be nonnegative and match fs in length.
Pwl weighted_sum(const std::vector<Pwl>& fs, const std::vector<Rat>& weights);

struct MaxResult {
  Rat b_star;
  Rat value;
};

/// Maximum of f over [lo, hi] (a subrange of the domain); ties are broken
/// towards the smallest b.
MaxResult maximize(const Pwl& f, const Rat& lo, const Rat& hi);

// A function defined on a union of closed intervals, stored as disjoint
// Pwl pieces sorted by domain. Adjacent pieces may share an endpoint
// coordinate with different values; the function value there is the
// minimum over the pieces containing it. This is the representation used
// for the pointwise minimum of partial functions in the interval solver.
class PartialPwl {
 public:
  PartialPwl() = default;
  explicit PartialPwl(Pwl piece) { pieces_.push_back(std::move(piece)); }
  explicit PartialPwl(std::vector<Pwl> pieces);

  const std::vector<Pwl>& pieces() const { return pieces_; }
  bool covers(const Rat& b) const;
  /// min over pieces containing b; throws InputError if none does.
  Rat eval(const Rat& b) const;

 private:
  std::vector<Pwl> pieces_;
};

/// Pointwise minimum over all functions defined at each point.
PartialPwl lower_envelope_partial(const std::vector<PartialPwl>& fs);

/// Maximum over [lo, hi]; requires [lo, hi] to be fully covered (checked).
/// Ties are broken towards the smallest b.
MaxResult maximize_partial(const PartialPwl& f, const Rat& lo, const Rat& hi);

}  // namespace bk

#endif  // BK_PWL_HPP

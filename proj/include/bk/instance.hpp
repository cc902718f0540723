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

#ifndef BK_INSTANCE_HPP
#define BK_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

enum class TiePolicy { kOptimistic, kPessimistic };

// Item sizes and the leader's item values (the delta-free objective form).
struct Items {
  std::vector<Rat> a;
  std::vector<Rat> d;

  std::size_t n() const { return a.size(); }
  Rat total_size() const;
  /// Throws InputError unless |a| == |d| and a > 0 componentwise.
  void validate() const;
};

struct CapacityRange {
  Rat b_lo;
  Rat b_hi;

  /// Checks 0 <= b_lo <= b_hi <= sum(a).
  void validate(const Items& items) const;
};

struct FollowerSolution {
  std::vector<Rat> x;
};

// (J, j, lambda): the items of J are packed completely except for a
// lambda-fraction of the dedicated last item j. last < 0 encodes the empty
// prefix.
struct FractionalPrefix {
  std::vector<int> members;  // J, ascending, includes the last item
  int last = -1;
  Rat fraction;  // in (0, 1] when last >= 0

  bool empty() const { return last < 0; }
  std::vector<Rat> to_x(std::size_t n) const;
  bool operator==(const FractionalPrefix&) const = default;
};

struct SolveResult {
  Rat b_star;
  Rat value;
  std::vector<Rat> follower_x;  // empty when no single witness applies
  std::optional<std::size_t> worst_scenario;
  std::optional<std::vector<Rat>> worst_c;
  std::optional<int> worst_head;
  std::optional<FractionalPrefix> worst_prefix;
  std::string solver;
};

/// Validates a follower objective vector: matching length and c > 0.
void validate_profits(const Items& items, const std::vector<Rat>& c);

}  // namespace bk

#endif  // BK_INSTANCE_HPP

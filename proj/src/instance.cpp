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

#include "bk/instance.hpp"

#include "bk/errors.hpp"

namespace bk {

Rat Items::total_size() const {
  Rat sum = 0;
  for (const Rat& ai : a) sum += ai;
  return sum;
}

void Items::validate() const {
  if (a.empty()) throw InputError("items: at least one item required");
  if (a.size() != d.size()) {
    throw InputError("items: size and value vectors must have equal length");
  }
  for (const Rat& ai : a) {
    if (ai <= 0) throw InputError("items: every item size must be positive");
  }
}

void CapacityRange::validate(const Items& items) const {
  if (b_lo < 0 || b_lo > b_hi || b_hi > items.total_size()) {
    throw InputError(
        "capacity range: 0 <= b_lo <= b_hi <= sum of item sizes required");
  }
}

std::vector<Rat> FractionalPrefix::to_x(std::size_t n) const {
  std::vector<Rat> x(n, Rat(0));
  if (empty()) return x;
  for (int i : members) x[static_cast<std::size_t>(i)] = 1;
  x[static_cast<std::size_t>(last)] = fraction;
  return x;
}

void validate_profits(const Items& items, const std::vector<Rat>& c) {
  if (c.size() != items.n()) {
    throw InputError("profit vector length must equal the number of items");
  }
  for (const Rat& ci : c) {
    if (ci <= 0) throw InputError("profit vector must be strictly positive");
  }
}

}  // namespace bk

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

#ifndef BK_ERRORS_HPP
#define BK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bk {

/// Invalid or malformed input: bad schema, violated precondition,
/// inconsistent instance data. Maps to exit code 2 in the CLI.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested computation exceeds a configured budget or is not
/// supported for the given model. Maps to exit code 3 in the CLI.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A solver invariant was violated at runtime. Maps to exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bk

#endif  // BK_ERRORS_HPP

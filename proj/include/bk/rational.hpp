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

#ifndef BK_RATIONAL_HPP
#define BK_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bk {

// Exact arbitrary-precision scalar used by every solver. cpp_rational keeps
// the representation canonical (positive denominator, gcd-reduced), which is
// exactly the invariant the breakpoint and tie comparisons rely on.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "num", "-num" or "num/den" (den > 0) into an exact rational.
/// Throws InputError on anything else, including division by zero.
Rat parse_rat(std::string_view text);

/// Canonical serialization: "num" when the denominator is 1, "num/den"
/// otherwise. parse_rat(format_rat(x)) == x for every x.
std::string format_rat(const Rat& value);

/// Decimal rendering for human-readable output columns. Not exact.
double to_double(const Rat& value);

std::vector<Rat> parse_rat_list(const std::vector<std::string>& texts);

/// floor(x^(1/n)) for x >= 0, n >= 1.
BigInt nth_root_floor(const BigInt& x, unsigned n);

/// Approximates base^(1/p) for integer base >= 0 and rational p >= 1,
/// rounded down to a multiple of 2^-fractional_bits. Exact whenever the
/// root is representable with that many bits (in particular for integer
/// roots and p = 1).
Rat approx_root(const BigInt& base, const Rat& p, unsigned fractional_bits);

}  // namespace bk

#endif  // BK_RATIONAL_HPP

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

#include "bk/rational.hpp"

#include <cctype>

#include "bk/errors.hpp"

namespace bk {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// cpp_int's string constructor rejects an explicit '+' sign.
BigInt to_bigint(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt{std::string(s)};
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) {
      throw InputError("not a rational literal: '" + std::string(text) + "'");
    }
    return Rat(to_bigint(text));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  const BigInt d = to_bigint(den);
  if (d <= 0) {
    throw InputError("rational literal requires a positive denominator: '" +
                     std::string(text) + "'");
  }
  return Rat(to_bigint(num), d);
}

std::string format_rat(const Rat& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

std::vector<Rat> parse_rat_list(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rat(t));
  return out;
}

BigInt nth_root_floor(const BigInt& x, unsigned n) {
  if (x < 0) throw InputError("nth_root_floor: negative radicand");
  if (n == 0) throw InputError("nth_root_floor: zeroth root");
  if (x == 0 || x == 1 || n == 1) return x;
  // Newton iteration on integers, then correct to the floor.
  BigInt r = BigInt(1) << (msb(x) / n + 1);
  while (true) {
    BigInt next = ((n - 1) * r + x / pow(r, n - 1)) / n;
    if (next >= r) break;
    r = next;
  }
  while (pow(r, n) > x) --r;
  while (pow(r + 1, n) <= x) ++r;
  return r;
}

Rat approx_root(const BigInt& base, const Rat& p, unsigned fractional_bits) {
  if (p < 1) throw InputError("approx_root: exponent p must be >= 1");
  const BigInt pn = numerator(p);
  const BigInt pd = denominator(p);
  if (pn > 64 || pd > 64) {
    throw InputError("approx_root: exponent numerator/denominator above 64");
  }
  const unsigned n = pn.convert_to<unsigned>();
  const unsigned k = pd.convert_to<unsigned>();
  // base^(1/p) = (base^pd)^(1/pn); scale by 2^bits before taking the root.
  const BigInt scaled = pow(base, k) << (fractional_bits * n);
  const BigInt root = nth_root_floor(scaled, n);
  return Rat(root, BigInt(1) << fractional_bits);
}

}  // namespace bk

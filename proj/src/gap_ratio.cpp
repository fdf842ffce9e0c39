// Copyright 2026 The tsreconf Authors
//
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

#include "tsreconf/gap_ratio.hpp"

#include <cmath>

#include "tsreconf/errors.hpp"

namespace tsr {

namespace mp = boost::multiprecision;

std::uint32_t gap_exponent(std::uint64_t n_labelcover) {
  if (n_labelcover < 2) throw InvalidInput("gap_exponent: N must be at least 2");
  constexpr long double kOne = 4294967296.0L;  // 2^32
  const long double log_n = std::log2(static_cast<long double>(n_labelcover));
  const long double value = std::pow(log_n, 0.99L);
  const auto fixed = static_cast<std::uint64_t>(std::floor(value * kOne));
  return static_cast<std::uint32_t>((fixed + (std::uint64_t{1} << 32) - 1) >> 32);
}

GapRatio gap_ratio(std::uint64_t n_labelcover) {
  if (n_labelcover < 2) throw InvalidInput("gap_ratio: N must be at least 2");
  GapRatio out;
  out.n_labelcover = n_labelcover;
  out.exponent = gap_exponent(n_labelcover);
  out.g = BigInt(1) << out.exponent;

  const Rational n(n_labelcover);
  out.k_c = n;
  out.k_s = Rational(out.g) * n / 2;
  // ceil(k_s + 1)
  const Rational shifted = out.k_s + 1;
  BigInt ceil_num = mp::numerator(shifted) / mp::denominator(shifted);
  if (Rational(ceil_num) < shifted) ceil_num += 1;
  out.ell = ceil_num;

  const Rational ell(out.ell);
  out.ratio = (out.k_s + ell) / (out.k_c + ell);
  out.lower_bound = Rational(2) - (2 * n + 4) / (out.k_s + n + 2);
  return out;
}

std::string to_string(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& q, unsigned digits) {
  BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = sign + whole.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  return out;
}

}  // namespace tsr

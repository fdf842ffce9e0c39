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

#ifndef TSRECONF_GAP_RATIO_HPP_
#define TSRECONF_GAP_RATIO_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ceil(log2(N)^0.99), with log2(N)^0.99 first truncated to 32 fractional
// bits (Q32.32 in a 64-bit word) so the rounding is pinned.
std::uint32_t gap_exponent(std::uint64_t n_labelcover);

// The soundness/completeness ratio obtained by feeding a Label Cover gap
// instance on N vertices through the reduction, with
//   g(N) = 2^gap_exponent(N),  k_c = N,  k_s = g(N) N / 2,
//   ell = ceil(k_s + 1),  ratio = (k_s + ell) / (k_c + ell),
// and the closed-form lower bound 2 - (2N + 4) / (g(N) N / 2 + N + 2).
struct GapRatio {
  std::uint64_t n_labelcover = 0;
  std::uint32_t exponent = 0;
  BigInt g;
  Rational k_c;
  Rational k_s;
  BigInt ell;
  Rational ratio;
  Rational lower_bound;
};

// Throws InvalidInput if n_labelcover < 2.
GapRatio gap_ratio(std::uint64_t n_labelcover);

// "p/q" in lowest terms ("p" when q == 1).
std::string to_string(const Rational& q);
// Decimal rendering with `digits` fractional digits, truncated toward zero.
std::string to_decimal(const Rational& q, unsigned digits = 12);

}  // namespace tsr

#endif  // TSRECONF_GAP_RATIO_HPP_

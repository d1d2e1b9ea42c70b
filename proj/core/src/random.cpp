// Copyright 2026 The hgw Authors
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

#include "hgw/random.hpp"

#include <limits>

#include "hgw/error.hpp"

namespace hgw {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::BadArgument, "uniform_below needs a positive bound");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

bool bernoulli(Rng& rng, const Rational& p) {
  require_unit_interval(p, "probability");
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  if (den > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::BadArgument, "probability denominator exceeds 64 bits");
  }
  return uniform_below(rng, den.convert_to<std::uint64_t>()) < num.convert_to<std::uint64_t>();
}

}  // namespace hgw

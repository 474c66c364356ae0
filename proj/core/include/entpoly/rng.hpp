// Copyright 2026 The entpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTPOLY_RNG_HPP
#define ENTPOLY_RNG_HPP

#include <cstdint>
#include <random>

namespace entpoly {

/// Generator used by every sampler. Never shared between samples.
using Rng = std::mt19937_64;

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for sample `index` of a campaign with the given master seed.
/// Depends only on (master, index), so any worker may draw any sample.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform draw in [0, 1) with 53 random bits.
double uniform01(Rng &rng);

/// Standard normal draw.
double standard_normal(Rng &rng);

}  // namespace entpoly

#endif  // ENTPOLY_RNG_HPP

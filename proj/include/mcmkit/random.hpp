// Copyright 2026 The mcmkit Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "mcmkit/linalg.hpp"

namespace mcmkit {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; used to give each bootstrap resample or worker its
// own stream from one master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Haar-random unitary from the QR decomposition of a complex Ginibre
// matrix, with the phases of R's diagonal folded into Q.
ComplexMatrix haar_unitary(int dim, Rng& rng);
ComplexVector haar_state(int dim, Rng& rng);
// Random mixed state of the given rank (partial trace of a Haar pure state).
DensityMatrix random_density(int dim, Rng& rng, int rank = -1);

// Per-outcome counts drawn from `probs` (normalized internally).
std::vector<long> sample_multinomial(long shots, const std::vector<double>& probs, Rng& rng);

}  // namespace mcmkit

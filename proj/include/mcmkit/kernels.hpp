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

#include <vector>

#include "mcmkit/linalg.hpp"

// Hot loops of the dense simulator. Every routine has a portable scalar
// reference and, on x86-64, an AVX2+FMA variant picked at runtime.
namespace mcmkit::kernels {

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
// Best available backend on this CPU, detected once.
Backend detected_backend();
Backend active_backend();
// Forces a backend (tests use this to compare variants). Throws if the
// backend is not available on this CPU.
void set_backend(Backend b);

// Applies the 2^k x 2^k matrix `m` to the amplitude vector `state` of
// length 2^num_bits. bits[0] addresses the most significant bit of the
// matrix index; bit positions count from the least significant bit of the
// state index. k <= 6.
void apply_matrix(ComplexVector& state, int num_bits, const std::vector<int>& bits, const ComplexMatrix& m);
void apply_matrix(ComplexVector& state, int num_bits, const std::vector<int>& bits, const ComplexMatrix& m,
                  Backend b);

}  // namespace mcmkit::kernels

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

#include "kernels_impl.hpp"

#include <vector>

namespace mcmkit::kernels::detail {

void apply_matrix_scalar(cplx* state, const ApplyPlan& plan) {
  const int dimk = 1 << plan.k;
  const long bases = 1L << (plan.num_bits - plan.k);
  std::vector<cplx> in(dimk), out(dimk);
  for (long base = 0; base < bases; ++base) {
    const long idx = insert_zero_bits(base, plan.sorted_bits, plan.k);
    for (int s = 0; s < dimk; ++s) in[s] = state[idx + plan.offsets[s]];
    for (int r = 0; r < dimk; ++r) {
      cplx acc = 0.0;
      const cplx* row = plan.mat + static_cast<long>(r) * dimk;
      for (int c = 0; c < dimk; ++c) acc += row[c] * in[c];
      out[r] = acc;
    }
    for (int s = 0; s < dimk; ++s) state[idx + plan.offsets[s]] = out[s];
  }
}

}  // namespace mcmkit::kernels::detail

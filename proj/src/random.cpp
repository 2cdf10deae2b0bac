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

#include "mcmkit/random.hpp"

#include <algorithm>
#include <cmath>

namespace mcmkit {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = cplx(n(rng), n(rng));
  }
  return g;
}

}  // namespace

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  if (dim <= 0) throw Error(ErrorKind::kInvalidArgument, "haar_unitary: dim must be positive");
  ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    const double a = std::abs(d);
    q.col(k) *= (a > 0.0 ? d / a : cplx(1.0));
  }
  return q;
}

ComplexVector haar_state(int dim, Rng& rng) {
  ComplexVector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density(int dim, Rng& rng, int rank) {
  if (rank <= 0) rank = dim;
  ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(hermitian_part(rho));
}

std::vector<long> sample_multinomial(long shots, const std::vector<double>& probs, Rng& rng) {
  if (shots < 0) throw Error(ErrorKind::kInvalidArgument, "negative shot count");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorKind::kInvalidArgument, "bad outcome probability");
    total += p;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::kInvalidArgument, "outcome probabilities sum to zero");
  std::vector<long> counts(probs.size(), 0);
  long left = shots;
  double mass = total;
  for (size_t k = 0; k + 1 < probs.size() && left > 0; ++k) {
    const double q = mass > 0.0 ? std::clamp(probs[k] / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<long> b(left, q);
    counts[k] = b(rng);
    left -= counts[k];
    mass -= probs[k];
  }
  if (!probs.empty()) counts.back() += left;
  return counts;
}

}  // namespace mcmkit

#pragma once

#include "qsl/dynamics.hpp"
#include "qsl/linalg.hpp"
#include "qsl/state.hpp"

#include <random>

namespace qsl::sampling {

using Rng = std::mt19937_64;

Matrix ginibre(Rng& rng, int dim);
HermitianMatrix random_hermitian(Rng& rng, int dim, double scale = 1.0);
// G G^dag / Tr, full rank with probability one.
DensityMatrix random_density(Rng& rng, int dim);
DensityMatrix random_pure(Rng& rng, int dim);
// Mixed state whose smallest eigenvalue is at least min_eigenvalue.
DensityMatrix random_density_with_floor(Rng& rng, int dim, double min_eigenvalue);
// Random H plus one to three random jump operators with rates in [0.1, 1].
LindbladModel random_model(Rng& rng, int dim);

}  // namespace qsl::sampling

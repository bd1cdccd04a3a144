#pragma once

#include <utility>
#include <vector>

#include "penney/poly.hpp"

namespace penney {

/// Unique reduced rational function with deg num <= deg_num_bound and
/// deg den <= deg_den_bound through all samples. Fits on the first
/// deg_num_bound + deg_den_bound + 2 samples and verifies the remainder
/// (callers pass at least three extra held-out samples).
/// Throws DomainError("ReconstructionFailed") when no bounded-degree
/// function fits.
RatFunc reconstruct(const std::vector<std::pair<Rat, Rat>>& samples, int deg_num_bound,
                    int deg_den_bound);

}  // namespace penney

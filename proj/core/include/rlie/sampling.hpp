#pragma once

#include "rlie/derivation.hpp"
#include "rlie/lie_algebra.hpp"

namespace rlie {

/// Uniform element of the truncated algebra B_n (a coefficient for every basis monomial).
Polynomial random_truncated_element(const Ring& ring, Rng& rng);
/// Derivation of B_n with uniform generator images.
Derivation random_derivation(const Ring& ring, Rng& rng);
/// Uniform vector of length `dim` over the field.
std::vector<Elem> random_vector(const Field& field, std::size_t dim, Rng& rng);

}  // namespace rlie

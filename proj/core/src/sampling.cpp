#include "rlie/sampling.hpp"

#include "rlie/errors.hpp"
#include "rlie/witt.hpp"

namespace rlie {

Polynomial random_truncated_element(const Ring& ring, Rng& rng) {
  if (!ring.truncated) throw PreconditionError("random elements are drawn from a truncated algebra");
  std::vector<Term> terms;
  for (const auto& m : truncated_basis(ring.nvars, ring.p))
    terms.push_back({m, static_cast<Coeff>(rng.below(static_cast<std::uint64_t>(ring.p)))});
  return Polynomial::from_terms(ring, std::move(terms));
}

Derivation random_derivation(const Ring& ring, Rng& rng) {
  std::vector<Polynomial> images;
  for (int i = 0; i < ring.nvars; ++i) images.push_back(random_truncated_element(ring, rng));
  return Derivation(ring, std::move(images));
}

std::vector<Elem> random_vector(const Field& field, std::size_t dim, Rng& rng) {
  std::vector<Elem> v(dim);
  for (auto& c : v) c = rng.element(field);
  return v;
}

}  // namespace rlie

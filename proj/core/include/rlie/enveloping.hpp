#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rlie/lie_algebra.hpp"

namespace rlie {

/// Largest p^m for which u(g) is built at all.
inline constexpr std::size_t kMaxEnvelopingDim = 729;
/// Largest p^m for which associativity is checked on every basis triple.
inline constexpr std::size_t kFullAssociativityDim = 81;

/// The restricted enveloping algebra u(g) with PBW basis
/// e^a = e_1^{a_1} ... e_m^{a_m}, 0 <= a_i < p. Basis element a has index
/// sum a_i p^{i-1}. Elements are coordinate vectors over F_p of length p^m.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(RestrictedLieAlgebra g);

  const RestrictedLieAlgebra& algebra() const { return g_; }
  int p() const { return g_.p(); }
  std::size_t dim() const { return dim_; }

  std::vector<int> exponents(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& exps) const;
  Vec unit(std::size_t index) const;
  Vec one() const { return unit(0); }
  /// The image of x in g under g -> u(g).
  Vec embed(std::span<const Elem> x) const;
  /// Coordinates in g if u lies in the image of g, else nullopt.
  std::optional<Vec> as_lie_element(std::span<const Elem> u) const;

  /// e_i * v.
  Vec left_generator(std::size_t i, std::span<const Elem> v) const;
  Vec multiply(std::span<const Elem> a, std::span<const Elem> b) const;
  Vec power(std::span<const Elem> a, std::uint64_t k) const;

 private:
  using Sparse = std::vector<std::pair<std::uint32_t, Elem>>;

  RestrictedLieAlgebra g_;
  std::size_t dim_ = 1;
  std::vector<std::vector<Sparse>> left_;  // left_[i][a] = e_i * e^a
};

/// Throws BudgetExceeded if p^m > kMaxEnvelopingDim.
EnvelopingAlgebra build_enveloping(const RestrictedLieAlgebra& g);

/// Checks the defining relations on the left-multiplication operators
/// (L_i L_j - L_j L_i = L_[e_i,e_j], L_i^p = L_{e_i^[p]}), associativity on all
/// basis triples when dim <= kFullAssociativityDim and on `random_triples`
/// seeded triples otherwise, and that 1 is a two-sided unit.
Verdict verify_enveloping(const EnvelopingAlgebra& u, std::uint64_t seed = 0, std::size_t random_triples = 200);

/// x^[p] for an arbitrary x in g, computed as x^p in u(g).
Vec p_power_of(const EnvelopingAlgebra& u, std::span<const Elem> x);

/// The restricted subalgebra spanned by `basis` (linearly independent
/// vectors in g), with structure constants in that basis. Throws
/// PreconditionError if the span is not closed under bracket and p-map.
RestrictedLieAlgebra subalgebra(const EnvelopingAlgebra& u, const std::vector<Vec>& basis);

/// dim u(g) / u(g)h, the index of the subgroup scheme of h. Throws
/// PreconditionError if h is not a restricted subalgebra and
/// VerificationFailure if the result is not p^{dim g - dim h}.
std::size_t subgroup_index(const EnvelopingAlgebra& u, const std::vector<Vec>& h);

/// subgroup_index(g, h) * dimV. When p^m <= 16 the value is cross-checked
/// against dim Hom_{u(h)}(u(g), V) for the trivial module V = k^dimV.
std::size_t induced_dimension(const EnvelopingAlgebra& u, const std::vector<Vec>& h, std::size_t dim_v);

/// dim Hom_{u(h)}(u(g), V) for trivial V = k^dimV, by solving the linear
/// conditions phi(h_k x) = 0 for all basis x.
std::size_t hom_dimension(const EnvelopingAlgebra& u, const std::vector<Vec>& h, std::size_t dim_v);

/// g abelian and each e_i in the span of e_i^[p], e_i^[p]^2, ..., e_i^[p]^m.
bool is_torus(const RestrictedLieAlgebra& g);

/// For abelian g: u(g) is semisimple iff the Frobenius map x -> x^p of u(g)
/// is injective. Non-abelian g yields false.
bool semisimplicity_oracle(const EnvelopingAlgebra& u);

}  // namespace rlie

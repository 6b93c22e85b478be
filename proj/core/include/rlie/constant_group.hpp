#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlie/invariants.hpp"

namespace rlie {

inline constexpr std::size_t kMaxGroupOrder = 24;

/// An algebra endomorphism of the target, given by the images of the variables.
using Substitution = std::vector<Polynomial>;

/// A finite group acting on F_p[x_1..x_N] or on a quotient by a monomial
/// ideal, presented by generator automorphisms. An element sigma acts by
/// f -> f(sigma(x_1), ..., sigma(x_N)).
class ConstantGroupAction {
 public:
  /// Polynomial target; generator images must be homogeneous linear forms.
  static ConstantGroupAction on_polynomials(Ring ring, std::vector<Substitution> generators);
  /// Target F_p[x]/(relations) for monomial relations; the quotient must be
  /// finite-dimensional and each generator must preserve the ideal.
  static ConstantGroupAction on_quotient(Ring ring, std::vector<Monomial> relations,
                                         std::vector<Substitution> generators);

  const Ring& ring() const { return ring_; }
  bool is_quotient() const { return quotient_; }
  const std::vector<Monomial>& relations() const { return relations_; }
  const std::vector<Substitution>& generators() const { return generators_; }
  /// All group elements, identity first, in order of discovery.
  const std::vector<Substitution>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  /// Monomial basis of the quotient target (ascending).
  std::vector<Monomial> standard_monomials() const;
  /// Drops every term lying in the relation ideal.
  Polynomial reduce(const Polynomial& f) const;
  Polynomial act(const Substitution& s, const Polynomial& f) const;

 private:
  ConstantGroupAction(Ring ring, std::vector<Monomial> relations, bool quotient, std::vector<Substitution> generators);
  Substitution compose(const Substitution& s, const Substitution& t) const;

  Ring ring_;
  std::vector<Monomial> relations_;
  bool quotient_ = false;
  std::vector<Substitution> generators_;
  std::vector<Substitution> elements_;
};

/// A^G as the joint kernel of (sigma - id) over the generators: degree by
/// degree up to max_degree for a polynomial target, or a single filtered
/// piece spanning the whole quotient (max_degree ignored).
InvariantBasis constant_invariants(const ConstantGroupAction& action, int max_degree = 0);

enum class FreenessVerdict { free, not_free, inconclusive };

std::string to_string(FreenessVerdict v);

struct FreenessReport {
  FreenessVerdict verdict = FreenessVerdict::inconclusive;
  std::size_t rank = 0;
  bool graded = false;
  int max_degree = 0;
  std::vector<std::size_t> algebra_dims;    // per degree, or the single total
  std::vector<std::size_t> invariant_dims;  // same indexing
  std::vector<Polynomial> basis;            // explicit module basis when free
  std::string reason;
};

/// Freeness of A over A^G. Quotient target: divisibility test, then a greedy
/// monomial basis verified by rank. Polynomial target: a homogeneous basis
/// is built degree by degree and verified up to max_degree.
FreenessReport freeness_check(const ConstantGroupAction& action, int max_degree = 0);

/// Sampled q(X) = max_x |G| / |G_x| over seeded points of F_{p^e}^N.
std::size_t max_orbit_index(const ConstantGroupAction& action, std::uint64_t seed, std::size_t samples, int e);

/// Group file: "p=<p>", a "group" block of "sigma_k : x<j> -> <polynomial>"
/// lines, and a "target" block holding "poly N" or "quotient N" followed by
/// "relation <monomial>" lines.
ConstantGroupAction parse_group_action(std::string_view text);
std::string to_text(const ConstantGroupAction& action);

}  // namespace rlie

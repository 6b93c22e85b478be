#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/matrix.hpp"
#include "rlie/witt.hpp"

namespace rlie {

/// A closed point with coordinates in some F_{p^e}.
struct RationalPoint {
  Field field;
  std::vector<Elem> coords;

  std::string to_string() const;
};

/// An action rho: g -> Der A of a restricted Lie algebra on A = F_p[x_1..x_N].
/// Construction checks that rho is a homomorphism of p-Lie algebras:
/// rho([e_i,e_j]) = [rho(e_i), rho(e_j)] and rho(e_i^[p]) = rho(e_i)^p.
class LieAction {
 public:
  LieAction(RestrictedLieAlgebra g, Ring ring, std::vector<Derivation> rho, VarNames names = VarNames::xs());

  const RestrictedLieAlgebra& algebra() const { return g_; }
  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return static_cast<std::size_t>(ring_.nvars); }
  const std::vector<Derivation>& rho() const { return rho_; }
  const VarNames& names() const { return names_; }
  /// True when every rho(e_j)(x_i) is homogeneous linear, so rho preserves degree.
  bool preserves_degree() const;

 private:
  RestrictedLieAlgebra g_;
  Ring ring_;
  std::vector<Derivation> rho_;
  VarNames names_;
};

/// dim g x N matrix with entry (j, i) = rho(e_j)(x_i) evaluated at x.
Matrix tangent_map(const LieAction& action, const RationalPoint& x);

/// The stabilizer g_x as the left kernel of the tangent map.
struct StabilizerResult {
  RationalPoint point;
  std::vector<std::vector<Elem>> kernel;  // canonical row-reduced basis, coordinates in g
  std::size_t codim = 0;
};

StabilizerResult stabilizer(const LieAction& action, const RationalPoint& x);

/// Sampled lower bound for c_g(X) = max_x codim g_x.
struct RegularityReport {
  std::size_t estimate = 0;
  RationalPoint witness;
  std::vector<RationalPoint> points;
  std::vector<std::size_t> codims;
};

/// Maximum codimension over `samples` seeded points of F_{p^e}^N. Adding
/// samples (same seed) never lowers the estimate.
RegularityReport estimate_c_g(const LieAction& action, std::uint64_t seed, std::size_t samples, int e);

bool is_regular(const LieAction& action, const RationalPoint& x, std::size_t c);

/// Adjoint action on the coordinate ring of g (variables xi_0..xi_{m-1}):
/// rho(e_j)(xi_k) = sum_l xi_l * (k-th coordinate of [e_l, e_j]), i.e. the
/// vector field D -> [D, e_j].
LieAction adjoint_action(const RestrictedLieAlgebra& g);
LieAction adjoint_action(const WnAlgebra& w);

/// True iff the differentials d_x f_i are linearly independent.
bool jacobian_independent(const std::vector<Polynomial>& fs, const RationalPoint& x);

/// Action file: a Lie algebra block, "vars N", then "rho i : j -> <polynomial>"
/// lines giving rho(e_i)(x_j) (1-based; omitted images are zero).
LieAction parse_action(std::string_view text);
std::string to_text(const LieAction& action);

}  // namespace rlie

#pragma once

#include <span>
#include <vector>

#include "rlie/lie_algebra.hpp"
#include "rlie/matrix.hpp"

namespace rlie {

inline constexpr int kMaxTruncatedDim = 81;

/// Monomial basis of B_n = F_p[x_1..x_n]/(x_i^p) in ascending graded-lex order.
std::vector<Monomial> truncated_basis(int n, int p);

/// Matrix of a derivation of B_n acting on B_n, in the basis truncated_basis();
/// column j holds the coordinates of D(basis[j]).
Matrix matrix_on_truncated(const Derivation& d);

/// The Jacobson-Witt algebra W_n = Der B_n with basis x^(a) d_i
/// (divided powers x^(a) = prod x_j^{a_j} / a_j!), ordered by a ascending
/// in graded-lex order and then by i. The coordinate functions of this basis
/// are named xi_0, xi_1, ... in that order.
struct WnAlgebra {
  int n = 1;
  int p = 2;
  Ring ring;
  std::vector<Monomial> monomials;  // truncated_basis(n, p)
  std::vector<Derivation> basis;
  RestrictedLieAlgebra algebra;
  std::vector<Matrix> basis_matrices;  // matrix_on_truncated of each basis element

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of a derivation of B_n in the basis above.
  Vec coordinates(const Derivation& d) const;
  /// Element with F_p coordinates.
  Derivation element(std::span<const Elem> coords) const;
  /// sum_k c_k M_k over an extension field, for coordinates c over that field.
  Matrix matrix_at(const Field& field, std::span<const Elem> coords) const;
};

/// Builds W_n with bracket and p-map tables computed from the derivation
/// realization. Throws BudgetExceeded if p^n > 81.
WnAlgebra build_wn(int n, int p);

}  // namespace rlie

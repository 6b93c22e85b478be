#pragma once

#include <span>
#include <vector>

#include "rlie/matrix.hpp"
#include "rlie/polynomial.hpp"

namespace rlie {

/// A subspace of the span of `columns` (ascending monomials), stored in
/// canonical row-reduced form: every basis polynomial is monic at its
/// leading (largest) monomial, no other basis element involves that
/// monomial, and leading monomials strictly increase along the basis.
/// `degree` is the homogeneous degree, or the upper bound of a filtered piece.
struct GradedSubspace {
  Ring ring;
  int degree = 0;
  std::vector<Monomial> columns;
  std::vector<Polynomial> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Polynomial& f) const;

  /// Canonical basis of the span of `vectors` (coordinates over F_p in `columns`).
  static GradedSubspace canonical(Ring ring, int degree, std::vector<Monomial> columns,
                                  const std::vector<std::vector<Elem>>& vectors);
  /// Canonical basis of the span of the given polynomials.
  static GradedSubspace span_of(Ring ring, int degree, std::vector<Monomial> columns,
                                const std::vector<Polynomial>& polys);
};

/// Coordinates of f with respect to `columns`; throws DimensionMismatch if f
/// has a monomial outside the list.
std::vector<Elem> coordinates(const Polynomial& f, const std::vector<Monomial>& columns);
Polynomial from_coordinates(Ring ring, const std::vector<Monomial>& columns, std::span<const Elem> coords);

/// Matrix (over F_p) of the linear map sending columns[j] to images[j].
/// Rows are indexed by the union of monomials appearing in the images.
Matrix operator_matrix(int p, const std::vector<Polynomial>& images);

/// Canonical basis of the joint kernel of `maps`, all acting on the span of
/// `columns`. An empty list of maps yields the whole space.
GradedSubspace graded_kernel(const std::vector<Matrix>& maps, Ring ring, int degree, std::vector<Monomial> columns);

}  // namespace rlie

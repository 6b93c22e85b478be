#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlie/action.hpp"
#include "rlie/constant_group.hpp"
#include "rlie/enveloping.hpp"

namespace rlie {

/// Abelian, e_i^[p] = e_i.
RestrictedLieAlgebra torus_algebra(std::size_t m, int p);
/// Abelian, zero p-map.
RestrictedLieAlgebra nil_algebra(std::size_t m, int p);
/// Two-dimensional abelian with e_1^[p] = e_2, e_2^[p] = e_1.
RestrictedLieAlgebra swap_algebra(int p);
/// [e_1, e_2] = e_3, zero p-map.
RestrictedLieAlgebra heisenberg_algebra(int p);

/// Names: "W:n:p", "torus:m:p", "nil:m:p", "swap:2:p", "heis:3:p".
/// Throws ParseError for unknown names.
RestrictedLieAlgebra catalog_algebra(std::string_view name);
/// The adjoint action of a catalog algebra (W:n:p uses the W_n coordinates).
LieAction catalog_action(std::string_view name);
/// "counterexample" is x -> -x on F_3[x]/(x^3). "signline:p" is x -> -x on
/// F_p[x]. "trivial-cubic:p" is the trivial group on F_p[x]/(x^3).
ConstantGroupAction catalog_group_action(std::string_view name);
/// True if `name` names a group action rather than a Lie algebra.
bool is_group_catalog_name(std::string_view name);

std::vector<std::string> catalog_algebra_names();
std::vector<std::string> catalog_group_names();

/// The span of the named basis elements of g (labels as in g.labels()).
std::vector<Vec> basis_from_labels(const RestrictedLieAlgebra& g, const std::vector<std::string>& labels);

/// A restricted subalgebra h of a catalog algebra g.
struct SubalgebraCase {
  std::string algebra;
  std::vector<std::string> labels;  // empty for h = 0
  std::string description;
};

/// At least ten (g, h) pairs over p = 2 and p = 3.
std::vector<SubalgebraCase> index_catalog();

struct TorusCase {
  std::string description;
  RestrictedLieAlgebra g;
  bool expected_torus;
};

/// Tori and non-tori, including subalgebras of W_n.
std::vector<TorusCase> torus_catalog();

}  // namespace rlie

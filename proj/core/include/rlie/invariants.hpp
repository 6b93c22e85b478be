#pragma once

#include <vector>

#include "rlie/action.hpp"
#include "rlie/graded.hpp"

namespace rlie {

inline constexpr std::size_t kMaxMonomialsPerDegree = 20000;

/// Invariants of degree 0..max_degree. When the action preserves degree,
/// pieces[d] is the homogeneous degree-d part of A^g; otherwise (`filtered`)
/// pieces[d] holds the invariants of degree <= d.
struct InvariantBasis {
  Ring ring;
  int max_degree = 0;
  bool filtered = false;
  std::vector<GradedSubspace> pieces;

  std::vector<std::size_t> dims() const;
};

/// A^g up to degree D by an exact joint-kernel solve of all rho(e_j) on each
/// degree piece. Every returned basis element is re-checked to be killed by
/// every rho(e_j).
InvariantBasis invariants_up_to_degree(const LieAction& action, int max_degree);

/// Degree-d piece of the subalgebra generated by all p-th powers A^(p) and
/// the homogeneous polynomials fs.
GradedSubspace generated_piece(const Ring& ring, const std::vector<Polynomial>& fs, int d);

struct GenerationRow {
  int degree = 0;
  std::size_t dim_invariant = 0;
  std::size_t dim_generated = 0;
  bool equal = false;
};

struct GenerationReport {
  int max_degree = 0;
  std::vector<GenerationRow> rows;

  /// A^g = A^(p)[f_1..f_n] in every degree <= max_degree.
  bool generated() const;
};

/// Compares dim (A^g)_d with dim A^(p)[fs]_d for d <= D. Throws
/// PreconditionError if some f is not homogeneous or not invariant.
GenerationReport check_generation(const LieAction& action, const std::vector<Polynomial>& fs, int max_degree);

/// Checks that the products u^p * f_1^{m_1} ... f_n^{m_n} (0 <= m_i < p,
/// u a monomial) are linearly independent in every degree <= D.
Verdict freeness_monomial_check(const Ring& ring, const std::vector<Polynomial>& fs, int max_degree);

}  // namespace rlie

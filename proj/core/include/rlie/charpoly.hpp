#pragma once

#include <span>
#include <vector>

#include "rlie/witt.hpp"

namespace rlie {

/// The coefficients psi_0..psi_{n-1} of chi_D(t) = t^{p^n} + sum psi_i(D) t^{p^i},
/// as polynomials in the coordinates xi_0.. of W_n.
struct PsiInvariants {
  int n = 1;
  int p = 2;
  Ring ring;
  std::vector<Polynomial> psi;
};

/// True when the generic characteristic polynomial of W_n is computed
/// symbolically by default (p^n <= 7, or (n,p) = (2,2)).
bool symbolic_in_default_budget(int n, int p);

/// Characteristic polynomial of the generic matrix sum xi_k M_k over
/// F_p[xi]. Throws BudgetExceeded outside the default budget unless
/// allow_large is set (p^n <= 9), and VerificationFailure if a coefficient
/// outside t^{p^i}, t^{p^n} is nonzero or some psi_i is not homogeneous of
/// degree p^n - p^i.
PsiInvariants char_poly_invariants_symbolic(int n, int p, bool allow_large = false);

/// Coefficients c_0..c_{p^n} of det(tI - M(D)) for D with coordinates in F.
std::vector<Elem> char_poly_at(const WnAlgebra& w, const Field& field, std::span<const Elem> coords);

/// psi_0(D)..psi_{n-1}(D); throws VerificationFailure if the vanishing pattern fails at D.
std::vector<Elem> char_poly_invariants_at(const WnAlgebra& w, const Field& field, std::span<const Elem> coords);

/// Directional derivatives (d_D psi_i)(D'), i < n, from the dual-number
/// characteristic polynomial of M(D) + eps M(D') over F[eps]/(eps^2).
std::vector<Elem> psi_differential(const WnAlgebra& w, const Field& field, std::span<const Elem> d,
                                   std::span<const Elem> dprime);
/// Same from the symbolic psi by partial derivatives.
std::vector<Elem> psi_differential(const PsiInvariants& psi, const Field& field, std::span<const Elem> d,
                                   std::span<const Elem> dprime);

/// Checks sum_i (d_D psi_i)(D') D^{p^i} = -psi_0(D) D' as endomorphisms of
/// B_n over F. Throws PreconditionError if psi_0(D) = 0 or if [D, D'] != 0.
/// Uses the symbolic psi when given, else dual numbers.
Verdict premet_identity_check(const WnAlgebra& w, const Field& field, std::span<const Elem> d,
                              std::span<const Elem> dprime, const PsiInvariants* symbolic = nullptr);

/// Basis of the centralizer {E : [E, D] = 0} in W_n over F.
std::vector<std::vector<Elem>> centralizer(const WnAlgebra& w, const Field& field, std::span<const Elem> d);

/// True iff M(D) lies in the span of M(D)^p, M(D)^{p^2}, ..., M(D)^{p^n}.
bool semisimple_span_check(const WnAlgebra& w, const Field& field, std::span<const Elem> coords);
bool semisimple_span_check(const Derivation& d);

}  // namespace rlie

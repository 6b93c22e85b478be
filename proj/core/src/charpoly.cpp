#include "rlie/charpoly.hpp"

#include <cmath>

#include "rlie/berkowitz.hpp"
#include "rlie/errors.hpp"

namespace rlie {

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool is_p_power_exponent(std::size_t j, int n, int p) {
  for (int i = 0; i <= n; ++i)
    if (j == static_cast<std::size_t>(ipow(p, i))) return true;
  return false;
}

void check_field(const WnAlgebra& w, const Field& field, std::span<const Elem> coords) {
  if (field.characteristic() != w.p) throw DimensionMismatch("field characteristic differs from W_n");
  if (coords.size() != w.dim()) throw DimensionMismatch("W_n element has wrong length");
}

std::vector<Elem> flatten(const Matrix& m) {
  std::vector<Elem> v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

bool in_power_span(const Matrix& m, int p, int n) {
  std::vector<std::vector<Elem>> powers;
  Matrix q = m;
  for (int i = 1; i <= n; ++i) {
    q = q.pow(static_cast<std::uint64_t>(p));
    powers.push_back(flatten(q));
  }
  return solve_combination(m.field(), powers, flatten(m)).has_value();
}

}  // namespace

bool symbolic_in_default_budget(int n, int p) {
  const int q = ipow(p, n);
  return q <= 7 || (n == 2 && p == 2);
}

PsiInvariants char_poly_invariants_symbolic(int n, int p, bool allow_large) {
  if (n < 1) throw PreconditionError("W_n needs n >= 1");
  if (std::pow(static_cast<double>(p), n) > 9)
    throw BudgetExceeded("symbolic characteristic polynomial needs p^n <= 9");
  if (!allow_large && !symbolic_in_default_budget(n, p))
    throw BudgetExceeded("symbolic characteristic polynomial for p^n = " + std::to_string(ipow(p, n)) +
                         " is outside the default budget");
  const WnAlgebra w = build_wn(n, p);
  const std::size_t m = w.dim();
  const std::size_t N = w.monomials.size();
  const Ring R = Ring::polynomial(static_cast<int>(m), p);
  std::vector<std::vector<Polynomial>> a(N, std::vector<Polynomial>(N, Polynomial(R)));
  for (std::size_t k = 0; k < m; ++k) {
    const Polynomial xi = Polynomial::variable(R, static_cast<int>(k));
    const Matrix& mk = w.basis_matrices[k];
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (mk(r, c).v != 0) a[r][c] += xi.scaled(mk(r, c).v);
  }
  const auto chi = berkowitz(a, PolynomialOps{R});
  PsiInvariants out{n, p, R, {}};
  for (std::size_t j = 0; j < N; ++j) {
    if (is_p_power_exponent(j, n, p)) continue;
    if (!chi[j].is_zero())
      throw VerificationFailure("coefficient of t^" + std::to_string(j) + " in the generic characteristic polynomial is " +
                                chi[j].to_string(VarNames::xis()));
  }
  for (int i = 0; i < n; ++i) {
    const Polynomial& psi = chi[static_cast<std::size_t>(ipow(p, i))];
    const int deg = static_cast<int>(N) - ipow(p, i);
    if (!psi.is_zero() && (!psi.is_homogeneous() || psi.degree() != deg))
      throw VerificationFailure("psi_" + std::to_string(i) + " is not homogeneous of degree " + std::to_string(deg));
    out.psi.push_back(psi);
  }
  return out;
}

std::vector<Elem> char_poly_at(const WnAlgebra& w, const Field& field, std::span<const Elem> coords) {
  check_field(w, field, coords);
  return charpoly(w.matrix_at(field, coords));
}

std::vector<Elem> char_poly_invariants_at(const WnAlgebra& w, const Field& field, std::span<const Elem> coords) {
  const auto chi = char_poly_at(w, field, coords);
  for (std::size_t j = 0; j + 1 < chi.size(); ++j)
    if (!is_p_power_exponent(j, w.n, w.p) && chi[j].v != 0)
      throw VerificationFailure("coefficient of t^" + std::to_string(j) + " is nonzero at D");
  std::vector<Elem> psi;
  for (int i = 0; i < w.n; ++i) psi.push_back(chi[static_cast<std::size_t>(ipow(w.p, i))]);
  return psi;
}

std::vector<Elem> psi_differential(const WnAlgebra& w, const Field& field, std::span<const Elem> d,
                                   std::span<const Elem> dprime) {
  check_field(w, field, d);
  check_field(w, field, dprime);
  const Matrix a = w.matrix_at(field, d);
  const Matrix b = w.matrix_at(field, dprime);
  const std::size_t N = a.rows();
  std::vector<std::vector<Dual>> m(N, std::vector<Dual>(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m[r][c] = {a(r, c), b(r, c)};
  const auto chi = berkowitz(m, DualOps{field});
  std::vector<Elem> out;
  for (int i = 0; i < w.n; ++i) out.push_back(chi[static_cast<std::size_t>(ipow(w.p, i))].b);
  return out;
}

std::vector<Elem> psi_differential(const PsiInvariants& psi, const Field& field, std::span<const Elem> d,
                                   std::span<const Elem> dprime) {
  const auto m = static_cast<std::size_t>(psi.ring.nvars);
  if (d.size() != m || dprime.size() != m) throw DimensionMismatch("W_n element has wrong length");
  std::vector<Elem> out;
  for (const auto& f : psi.psi) {
    Elem s = field.zero();
    for (std::size_t k = 0; k < m; ++k)
      if (dprime[k].v != 0) s = field.add(s, field.mul(f.partial(static_cast<int>(k)).evaluate(field, d), dprime[k]));
    out.push_back(s);
  }
  return out;
}

Verdict premet_identity_check(const WnAlgebra& w, const Field& field, std::span<const Elem> d,
                              std::span<const Elem> dprime, const PsiInvariants* symbolic) {
  check_field(w, field, d);
  check_field(w, field, dprime);
  if (symbolic && (symbolic->n != w.n || symbolic->p != w.p)) throw DimensionMismatch("psi belongs to a different W_n");
  const Elem psi0 = symbolic ? symbolic->psi[0].evaluate(field, d) : char_poly_invariants_at(w, field, d)[0];
  if (psi0.v == 0) throw PreconditionError("psi_0(D) = 0");
  const Matrix md = w.matrix_at(field, d);
  const Matrix me = w.matrix_at(field, dprime);
  if (!(md * me == me * md)) throw PreconditionError("D' is not in the centralizer of D");
  const auto dpsi = symbolic ? psi_differential(*symbolic, field, d, dprime) : psi_differential(w, field, d, dprime);
  Matrix lhs(field, md.rows(), md.cols());
  Matrix power = md;
  for (int i = 0; i < w.n; ++i) {
    if (i > 0) power = power.pow(static_cast<std::uint64_t>(w.p));
    lhs = lhs + power.scaled(dpsi[static_cast<std::size_t>(i)]);
  }
  const Matrix rhs = me.scaled(field.neg(psi0));
  if (!(lhs == rhs)) return Verdict::fail("sum (d psi_i)(D') D^{p^i} differs from -psi_0(D) D'");
  return Verdict::pass();
}

std::vector<std::vector<Elem>> centralizer(const WnAlgebra& w, const Field& field, std::span<const Elem> d) {
  check_field(w, field, d);
  const std::size_t m = w.dim();
  // column j holds the coordinates of [D, e_j]
  Matrix ad(field, m, m);
  for (std::size_t l = 0; l < m; ++l) {
    if (d[l].v == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& br = w.algebra.bracket(l, j);
      for (std::size_t k = 0; k < m; ++k)
        if (br[k].v != 0) ad(k, j) = field.add(ad(k, j), field.mul(d[l], field.from_int(br[k].v)));
    }
  }
  auto raw = ad.kernel();
  if (raw.empty()) return raw;
  std::vector<std::size_t> piv;
  const Matrix red = Matrix::from_rows(field, raw).rref(&piv);
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.emplace_back(red.row(i).begin(), red.row(i).end());
  return out;
}

bool semisimple_span_check(const WnAlgebra& w, const Field& field, std::span<const Elem> coords) {
  check_field(w, field, coords);
  return in_power_span(w.matrix_at(field, coords), w.p, w.n);
}

bool semisimple_span_check(const Derivation& d) {
  return in_power_span(matrix_on_truncated(d), d.ring().p, d.ring().nvars);
}

}  // namespace rlie

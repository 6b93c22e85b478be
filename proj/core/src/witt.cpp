#include "rlie/witt.hpp"

#include <cmath>

#include "rlie/errors.hpp"
#include "rlie/graded.hpp"

namespace rlie {

std::vector<Monomial> truncated_basis(int n, int p) { return monomials_up_to_degree(n, n * (p - 1), p); }

Matrix matrix_on_truncated(const Derivation& d) {
  const Ring& R = d.ring();
  if (!R.truncated) throw PreconditionError("matrix_on_truncated needs a derivation of a truncated algebra");
  const auto basis = truncated_basis(R.nvars, R.p);
  Matrix m(Field::prime(R.p), basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto img = d(Polynomial::monomial(R, basis[j]));
    const auto c = coordinates(img, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

namespace {

long long factorial_mod(int a, int p) {
  long long f = 1;
  for (int k = 2; k <= a; ++k) f = (f * k) % p;
  return f;
}

std::string basis_label(const Monomial& a, int i) {
  std::string s;
  bool any = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (any) s += '*';
    any = true;
    s += "x" + std::to_string(j + 1);
    if (a[j] > 1) s += "^(" + std::to_string(a[j]) + ")";
  }
  if (any) s += '*';
  return s + "d" + std::to_string(i + 1);
}

}  // namespace

WnAlgebra build_wn(int n, int p) {
  if (n < 1) throw PreconditionError("W_n needs n >= 1");
  if (!is_prime(p) || p > kMaxPrime) throw PreconditionError("unsupported characteristic " + std::to_string(p));
  if (std::pow(static_cast<double>(p), n) > kMaxTruncatedDim)
    throw BudgetExceeded("p^n = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxTruncatedDim));
  const Field F = Field::prime(p);
  const Ring R = Ring::truncated_algebra(n, p);
  auto monos = truncated_basis(n, p);
  std::vector<Derivation> basis;
  std::vector<std::string> labels;
  for (const auto& a : monos) {
    long long denom = 1;
    for (std::size_t j = 0; j < a.size(); ++j) denom = (denom * factorial_mod(a[j], p)) % p;
    const long long inv = F.inv(F.from_int(denom)).v;
    const Polynomial divided = Polynomial::monomial(R, a, inv);
    for (int i = 0; i < n; ++i) {
      std::vector<Polynomial> images(static_cast<std::size_t>(n), Polynomial(R));
      images[static_cast<std::size_t>(i)] = divided;
      basis.emplace_back(R, std::move(images));
      labels.push_back(basis_label(a, i));
    }
  }
  WnAlgebra w{n, p, R, std::move(monos), std::move(basis), RestrictedLieAlgebra(p, labels.size(), labels), {}};
  const std::size_t m = w.basis.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) w.algebra.set_bracket(i, j, w.coordinates(bracket(w.basis[i], w.basis[j])));
  for (std::size_t i = 0; i < m; ++i) w.algebra.set_pmap(i, w.coordinates(p_power(w.basis[i])));
  w.algebra.attach_realization(w.basis);
  w.basis_matrices.reserve(m);
  for (const auto& d : w.basis) w.basis_matrices.push_back(matrix_on_truncated(d));
  return w;
}

Vec WnAlgebra::coordinates(const Derivation& d) const {
  if (!(d.ring() == ring)) throw DimensionMismatch("derivation is not in W_n");
  const Field F = Field::prime(p);
  Vec v(dim());
  std::size_t k = 0;
  for (const auto& a : monomials) {
    long long fact = 1;
    for (std::size_t j = 0; j < a.size(); ++j) fact = (fact * factorial_mod(a[j], p)) % p;
    for (int i = 0; i < n; ++i) v[k++] = F.mul(Elem{d.image(i).coefficient(a)}, F.from_int(fact));
  }
  return v;
}

Derivation WnAlgebra::element(std::span<const Elem> coords) const { return algebra.realize(coords); }

Matrix WnAlgebra::matrix_at(const Field& field, std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("W_n element has wrong length");
  if (field.characteristic() != p) throw DimensionMismatch("field characteristic differs from W_n");
  const std::size_t N = monomials.size();
  Matrix out(field, N, N);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].v == 0) continue;
    const Matrix& mk = basis_matrices[k];
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (mk(r, c).v != 0) out(r, c) = field.add(out(r, c), field.mul(coords[k], field.from_int(mk(r, c).v)));
  }
  return out;
}

}  // namespace rlie

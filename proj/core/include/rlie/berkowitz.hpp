#pragma once

#include <cstddef>
#include <vector>

#include "rlie/errors.hpp"
#include "rlie/field.hpp"
#include "rlie/polynomial.hpp"

namespace rlie {

/// Division-free characteristic polynomial (Berkowitz) over any commutative
/// ring described by `Ops` (zero(), one(), add, sub, mul). Returns the
/// coefficients c_0..c_n of det(t I - A), so c_n = 1.
template <class T, class Ops>
std::vector<T> berkowitz(const std::vector<std::vector<T>>& a, const Ops& ops) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("berkowitz needs a square matrix");
  if (n == 0) return {ops.one()};
  // v holds coefficients of the leading-block charpoly, highest degree first
  std::vector<T> v{ops.one(), ops.sub(ops.zero(), a[0][0])};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> q(r + 2, ops.zero());
    q[0] = ops.one();
    q[1] = ops.sub(ops.zero(), a[r][r]);
    std::vector<T> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      if (k > 0) {
        std::vector<T> next(r, ops.zero());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] = ops.add(next[i], ops.mul(a[i][j], w[j]));
        w = std::move(next);
      }
      T dot = ops.zero();
      for (std::size_t i = 0; i < r; ++i) dot = ops.add(dot, ops.mul(a[r][i], w[i]));
      q[k + 2] = ops.sub(ops.zero(), dot);
    }
    std::vector<T> nv(r + 2, ops.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] = ops.add(nv[i], ops.mul(q[i - j], v[j]));
    v = std::move(nv);
  }
  return std::vector<T>(v.rbegin(), v.rend());
}

struct FieldOps {
  Field field;
  Elem zero() const { return field.zero(); }
  Elem one() const { return field.one(); }
  Elem add(Elem a, Elem b) const { return field.add(a, b); }
  Elem sub(Elem a, Elem b) const { return field.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return field.mul(a, b); }
};

struct PolynomialOps {
  Ring ring;
  Polynomial zero() const { return Polynomial(ring); }
  Polynomial one() const { return Polynomial::constant(ring, 1); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
};

/// a + b*eps with eps^2 = 0 over a finite field.
struct Dual {
  Elem a;
  Elem b;
};

struct DualOps {
  Field field;
  Dual zero() const { return {field.zero(), field.zero()}; }
  Dual one() const { return {field.one(), field.zero()}; }
  Dual add(Dual x, Dual y) const { return {field.add(x.a, y.a), field.add(x.b, y.b)}; }
  Dual sub(Dual x, Dual y) const { return {field.sub(x.a, y.a), field.sub(x.b, y.b)}; }
  Dual mul(Dual x, Dual y) const {
    return {field.mul(x.a, y.a), field.add(field.mul(x.a, y.b), field.mul(x.b, y.a))};
  }
};

}  // namespace rlie

#include "rlie/enveloping.hpp"

#include <functional>

#include "rlie/errors.hpp"
#include "rlie/matrix.hpp"

namespace rlie {

namespace {

std::size_t checked_dim(int p, std::size_t m) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < m; ++i) {
    d *= static_cast<std::size_t>(p);
    if (d > kMaxEnvelopingDim)
      throw BudgetExceeded("u(g) has dimension " + std::to_string(p) + "^" + std::to_string(m) + " > " +
                           std::to_string(kMaxEnvelopingDim));
  }
  return d;
}

void axpy(const Field& F, Vec& y, Elem c, std::span<const Elem> x) {
  if (c.v == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (x[k].v != 0) y[k] = F.add(y[k], F.mul(c, x[k]));
}

}  // namespace

EnvelopingAlgebra::EnvelopingAlgebra(RestrictedLieAlgebra g) : g_(std::move(g)) {
  const std::size_t m = g_.dim();
  const int p = g_.p();
  dim_ = checked_dim(p, m);
  const Field& F = g_.field();

  // memo[i][a] = e_i * e^a, filled by straightening
  std::vector<std::vector<Vec>> memo(m, std::vector<Vec>(dim_));
  std::vector<std::vector<char>> state(m, std::vector<char>(dim_, 0));

  std::function<const Vec&(std::size_t, std::size_t)> left = [&](std::size_t i, std::size_t a) -> const Vec& {
    if (state[i][a] == 2) return memo[i][a];
    if (state[i][a] == 1) throw std::logic_error("straightening did not terminate");
    state[i][a] = 1;
    auto ex = exponents(a);
    std::size_t j = 0;
    while (j < m && ex[j] == 0) ++j;
    Vec out(dim_);
    if (i <= j) {
      if (ex[i] + 1 < p) {
        ++ex[i];
        out[index_of(ex)] = F.one();
      } else {
        // e_i^p = e_i^[p]
        ex[i] = 0;
        const std::size_t rest = index_of(ex);
        const Vec& pm = g_.pmap(i);
        for (std::size_t k = 0; k < m; ++k)
          if (pm[k].v != 0) axpy(F, out, pm[k], left(k, rest));
      }
    } else {
      // e_i e_j e^b = e_j (e_i e^b) + [e_i, e_j] e^b
      --ex[j];
      const std::size_t b = index_of(ex);
      const Vec t = left(i, b);
      for (std::size_t c = 0; c < dim_; ++c)
        if (t[c].v != 0) axpy(F, out, t[c], left(j, c));
      const Vec& br = g_.bracket(i, j);
      for (std::size_t k = 0; k < m; ++k)
        if (br[k].v != 0) axpy(F, out, br[k], left(k, b));
    }
    memo[i][a] = std::move(out);
    state[i][a] = 2;
    return memo[i][a];
  };

  left_.assign(m, std::vector<Sparse>(dim_));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < dim_; ++a) {
      const Vec& v = left(i, a);
      for (std::size_t c = 0; c < dim_; ++c)
        if (v[c].v != 0) left_[i][a].emplace_back(static_cast<std::uint32_t>(c), v[c]);
    }
}

std::vector<int> EnvelopingAlgebra::exponents(std::size_t index) const {
  std::vector<int> ex(g_.dim());
  for (auto& e : ex) {
    e = static_cast<int>(index % static_cast<std::size_t>(g_.p()));
    index /= static_cast<std::size_t>(g_.p());
  }
  return ex;
}

std::size_t EnvelopingAlgebra::index_of(const std::vector<int>& exps) const {
  std::size_t idx = 0;
  for (std::size_t i = exps.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(g_.p()) + static_cast<std::size_t>(exps[i]);
  return idx;
}

Vec EnvelopingAlgebra::unit(std::size_t index) const {
  Vec v(dim_);
  v.at(index) = Elem{1};
  return v;
}

Vec EnvelopingAlgebra::embed(std::span<const Elem> x) const {
  if (x.size() != g_.dim()) throw DimensionMismatch("element of g has wrong length");
  Vec v(dim_);
  std::size_t stride = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[stride] = x[i];  // e_i has index p^(i-1)
    stride *= static_cast<std::size_t>(g_.p());
  }
  return v;
}

std::optional<Vec> EnvelopingAlgebra::as_lie_element(std::span<const Elem> u) const {
  if (u.size() != dim_) throw DimensionMismatch("element of u(g) has wrong length");
  Vec x(g_.dim());
  std::size_t stride = 1;
  std::vector<char> used(dim_, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u[stride];
    used[stride] = 1;
    stride *= static_cast<std::size_t>(g_.p());
  }
  for (std::size_t k = 0; k < dim_; ++k)
    if (!used[k] && u[k].v != 0) return std::nullopt;
  return x;
}

Vec EnvelopingAlgebra::left_generator(std::size_t i, std::span<const Elem> v) const {
  if (v.size() != dim_) throw DimensionMismatch("element of u(g) has wrong length");
  const Field& F = g_.field();
  Vec out(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (v[a].v == 0) continue;
    for (const auto& [c, x] : left_[i][a]) out[c] = F.add(out[c], F.mul(v[a], x));
  }
  return out;
}

Vec EnvelopingAlgebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("element of u(g) has wrong length");
  const Field& F = g_.field();
  const std::size_t m = g_.dim();
  Vec out(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    if (a[idx].v == 0) continue;
    const auto ex = exponents(idx);
    Vec y(b.begin(), b.end());
    for (std::size_t i = m; i-- > 0;)
      for (int k = 0; k < ex[i]; ++k) y = left_generator(i, y);
    axpy(F, out, a[idx], y);
  }
  return out;
}

Vec EnvelopingAlgebra::power(std::span<const Elem> a, std::uint64_t k) const {
  Vec r = one();
  Vec base(a.begin(), a.end());
  while (k > 0) {
    if (k & 1) r = multiply(r, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return r;
}

EnvelopingAlgebra build_enveloping(const RestrictedLieAlgebra& g) { return EnvelopingAlgebra(g); }

Verdict verify_enveloping(const EnvelopingAlgebra& u, std::uint64_t seed, std::size_t random_triples) {
  const auto& g = u.algebra();
  const Field& F = g.field();
  const std::size_t m = g.dim();
  const std::size_t n = u.dim();
  auto lie_op = [&](const Vec& x, const Vec& v) {
    Vec out(n);
    for (std::size_t k = 0; k < m; ++k)
      if (x[k].v != 0) axpy(F, out, x[k], u.left_generator(k, v));
    return out;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const Vec v = u.unit(a);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        Vec lhs = u.left_generator(i, u.left_generator(j, v));
        const Vec rhs = u.left_generator(j, u.left_generator(i, v));
        for (std::size_t c = 0; c < n; ++c) lhs[c] = F.sub(lhs[c], rhs[c]);
        if (lhs != lie_op(g.bracket(i, j), v))
          return Verdict::fail("L_" + std::to_string(i + 1) + " and L_" + std::to_string(j + 1) +
                               " do not commute up to the bracket");
      }
      Vec pw = v;
      for (int k = 0; k < g.p(); ++k) pw = u.left_generator(i, pw);
      if (pw != lie_op(g.pmap(i), v)) return Verdict::fail("L_" + std::to_string(i + 1) + "^p differs from the p-map");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Vec x = u.unit(a);
    if (u.multiply(x, u.one()) != x || u.multiply(u.one(), x) != x) return Verdict::fail("1 is not a unit");
  }
  auto assoc = [&](const Vec& x, const Vec& y, const Vec& z) {
    return u.multiply(u.multiply(x, y), z) == u.multiply(x, u.multiply(y, z));
  };
  if (n <= kFullAssociativityDim) {
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a][b] = u.multiply(u.unit(a), u.unit(b));
    auto times_unit = [&](const Vec& x, std::size_t c, bool on_left) {
      Vec out(n);
      for (std::size_t k = 0; k < n; ++k)
        if (x[k].v != 0) axpy(F, out, x[k], on_left ? table[c][k] : table[k][c]);
      return out;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (times_unit(table[a][b], c, false) != times_unit(table[b][c], a, true))
            return Verdict::fail("associativity fails on basis triple (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
  } else {
    Rng rng(seed, 0x3e1);
    auto random_vec = [&] {
      Vec v(n);
      for (auto& c : v) c = rng.element(F);
      return v;
    };
    for (std::size_t t = 0; t < random_triples; ++t)
      if (!assoc(random_vec(), random_vec(), random_vec()))
        return Verdict::fail("associativity fails on random triple " + std::to_string(t));
  }
  return Verdict::pass();
}

Vec p_power_of(const EnvelopingAlgebra& u, std::span<const Elem> x) {
  const auto r = u.as_lie_element(u.power(u.embed(x), static_cast<std::uint64_t>(u.p())));
  if (!r) throw VerificationFailure("x^p does not lie in g");
  return *r;
}

namespace {

Matrix basis_matrix(const Field& F, const std::vector<Vec>& basis, std::size_t m) {
  for (const auto& b : basis)
    if (b.size() != m) throw DimensionMismatch("subalgebra vector has wrong length");
  Matrix M = Matrix::from_rows(F, basis, m);
  if (M.rank() != basis.size()) throw PreconditionError("subalgebra basis is linearly dependent");
  return M;
}

}  // namespace

RestrictedLieAlgebra subalgebra(const EnvelopingAlgebra& u, const std::vector<Vec>& basis) {
  const auto& g = u.algebra();
  const Field& F = g.field();
  basis_matrix(F, basis, g.dim());
  const std::size_t k = basis.size();
  auto express = [&](const Vec& v, const std::string& what) {
    auto c = solve_combination(F, basis, v);
    if (!c) throw PreconditionError("span is not closed under " + what);
    return *c;
  };
  RestrictedLieAlgebra h(g.p(), k);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = s + 1; t < k; ++t) h.set_bracket(s, t, express(g.bracket_of(basis[s], basis[t]), "the bracket"));
  for (std::size_t s = 0; s < k; ++s) h.set_pmap(s, express(p_power_of(u, basis[s]), "the p-map"));
  return h;
}

std::size_t subgroup_index(const EnvelopingAlgebra& u, const std::vector<Vec>& h) {
  subalgebra(u, h);
  const Field& F = u.algebra().field();
  const std::size_t n = u.dim();
  // closure of the span of h under left multiplication by the generators
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  auto reduce = [&](Vec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Elem c = v[pivots[r]];
      if (c.v != 0) axpy(F, v, F.neg(c), rows[r]);
    }
    return v;
  };
  std::vector<Vec> queue;
  auto push = [&](const Vec& v) {
    Vec w = reduce(v);
    std::size_t piv = 0;
    while (piv < n && w[piv].v == 0) ++piv;
    if (piv == n) return;
    const Elem inv = F.inv(w[piv]);
    for (auto& c : w) c = F.mul(c, inv);
    for (auto& r : rows) {
      const Elem c = r[piv];
      if (c.v != 0) axpy(F, r, F.neg(c), w);
    }
    rows.push_back(w);
    pivots.push_back(piv);
    queue.push_back(std::move(w));
  };
  for (const auto& x : h) push(u.embed(x));
  while (!queue.empty()) {
    const Vec v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < u.algebra().dim(); ++i) push(u.left_generator(i, v));
  }
  const std::size_t index = n - rows.size();
  std::size_t expected = 1;
  for (std::size_t i = h.size(); i < u.algebra().dim(); ++i) expected *= static_cast<std::size_t>(u.p());
  if (index != expected)
    throw VerificationFailure("index " + std::to_string(index) + " differs from p^codim = " + std::to_string(expected));
  return index;
}

std::size_t hom_dimension(const EnvelopingAlgebra& u, const std::vector<Vec>& h, std::size_t dim_v) {
  subalgebra(u, h);
  const Field& F = u.algebra().field();
  const std::size_t n = u.dim();
  const std::size_t m = u.algebra().dim();
  // phi vanishes on every h_k * e^a; the conditions are the same for each coordinate of V
  std::vector<Vec> conditions;
  for (const auto& x : h)
    for (std::size_t a = 0; a < n; ++a) {
      const Vec e = u.unit(a);
      Vec img(n);
      for (std::size_t i = 0; i < m; ++i)
        if (x[i].v != 0) axpy(F, img, x[i], u.left_generator(i, e));
      conditions.push_back(std::move(img));
    }
  const std::size_t r = conditions.empty() ? 0 : rank_of(F, conditions, n);
  return dim_v * (n - r);
}

std::size_t induced_dimension(const EnvelopingAlgebra& u, const std::vector<Vec>& h, std::size_t dim_v) {
  const std::size_t d = subgroup_index(u, h) * dim_v;
  if (u.dim() <= 16) {
    const std::size_t oracle = hom_dimension(u, h, dim_v);
    if (oracle != d)
      throw VerificationFailure("induced dimension " + std::to_string(d) + " differs from dim Hom = " +
                                std::to_string(oracle));
  }
  return d;
}

bool is_torus(const RestrictedLieAlgebra& g) {
  if (!g.is_abelian()) return false;
  const Field& F = g.field();
  const std::size_t m = g.dim();
  // on an abelian algebra over F_p the p-map is F_p-linear
  auto pmap = [&](const Vec& v) {
    Vec out(m);
    for (std::size_t k = 0; k < m; ++k)
      if (v[k].v != 0) axpy(F, out, v[k], g.pmap(k));
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vec> iterates;
    Vec v = g.unit(i);
    for (std::size_t k = 0; k < m; ++k) {
      v = pmap(v);
      iterates.push_back(v);
    }
    if (!solve_combination(F, iterates, g.unit(i))) return false;
  }
  return true;
}

bool semisimplicity_oracle(const EnvelopingAlgebra& u) {
  if (!u.algebra().is_abelian()) return false;
  std::vector<Vec> images;
  images.reserve(u.dim());
  for (std::size_t a = 0; a < u.dim(); ++a) images.push_back(u.power(u.unit(a), static_cast<std::uint64_t>(u.p())));
  return rank_of(u.algebra().field(), images, u.dim()) == u.dim();
}

}  // namespace rlie

#include "rlie/invariants.hpp"

#include <functional>
#include <map>

#include "rlie/errors.hpp"

namespace rlie {

std::vector<std::size_t> InvariantBasis::dims() const {
  std::vector<std::size_t> d;
  d.reserve(pieces.size());
  for (const auto& s : pieces) d.push_back(s.dim());
  return d;
}

namespace {

void check_budget(std::size_t count, int d) {
  if (count > kMaxMonomialsPerDegree)
    throw BudgetExceeded("degree " + std::to_string(d) + " space has " + std::to_string(count) +
                         " monomials (limit " + std::to_string(kMaxMonomialsPerDegree) + ")");
}

GradedSubspace solve_piece(const LieAction& action, int d, std::vector<Monomial> columns) {
  const Ring& R = action.ring();
  std::vector<Matrix> maps;
  maps.reserve(action.rho().size());
  for (const auto& rho : action.rho()) {
    std::vector<Polynomial> images;
    images.reserve(columns.size());
    for (const auto& m : columns) images.push_back(rho(Polynomial::monomial(R, m)));
    maps.push_back(operator_matrix(R.p, images));
  }
  return graded_kernel(maps, R, d, std::move(columns));
}

// Calls visit(exponents, degree) for all m in [0,p)^k with sum m_i deg_i <= budget.
void for_each_exponent(const std::vector<int>& degs, int p, int budget,
                       const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> m(degs.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == degs.size()) {
      visit(m, used);
      return;
    }
    for (int e = 0; e < p; ++e) {
      const int u = used + e * degs[i];
      if (u > budget) break;
      m[i] = e;
      rec(i + 1, u);
    }
    m[i] = 0;
  };
  rec(0, 0);
}

// Products u^p * prod f_i^{m_i} of total degree d.
std::vector<Polynomial> degree_products(const Ring& ring, const std::vector<Polynomial>& fs, int d) {
  std::vector<int> degs;
  for (const auto& f : fs) degs.push_back(std::max(f.degree(), 0));
  std::map<std::vector<int>, Polynomial> cache;
  auto power_product = [&](const std::vector<int>& m) -> const Polynomial& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Polynomial prod = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (m[i] > 0) prod *= fs[i].pow(m[i]);
    return cache.emplace(m, std::move(prod)).first->second;
  };
  std::vector<Polynomial> out;
  for_each_exponent(degs, ring.p, d, [&](const std::vector<int>& m, int used) {
    const int rest = d - used;
    if (rest % ring.p != 0) return;
    const Polynomial& fm = power_product(m);
    for (const auto& u : monomials_of_degree(ring.nvars, rest / ring.p))
      out.push_back(Polynomial::monomial(ring, u.pow(ring.p)) * fm);
  });
  return out;
}

void check_homogeneous(const std::vector<Polynomial>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fs[i].is_homogeneous()) throw PreconditionError("generator " + std::to_string(i + 1) + " is not homogeneous");
}

}  // namespace

InvariantBasis invariants_up_to_degree(const LieAction& action, int max_degree) {
  if (max_degree < 0) throw PreconditionError("max degree must be >= 0");
  const Ring& R = action.ring();
  InvariantBasis out{R, max_degree, !action.preserves_degree(), {}};
  for (int d = 0; d <= max_degree; ++d) {
    auto columns = out.filtered ? monomials_up_to_degree(R.nvars, d) : monomials_of_degree(R.nvars, d);
    check_budget(columns.size(), d);
    out.pieces.push_back(solve_piece(action, d, std::move(columns)));
  }
  for (const auto& piece : out.pieces)
    for (const auto& f : piece.basis)
      for (const auto& rho : action.rho())
        if (!rho(f).is_zero()) throw VerificationFailure("computed invariant " + f.to_string() + " is not killed by rho");
  return out;
}

GradedSubspace generated_piece(const Ring& ring, const std::vector<Polynomial>& fs, int d) {
  check_homogeneous(fs);
  auto columns = monomials_of_degree(ring.nvars, d);
  check_budget(columns.size(), d);
  return GradedSubspace::span_of(ring, d, std::move(columns), degree_products(ring, fs, d));
}

bool GenerationReport::generated() const {
  for (const auto& r : rows)
    if (!r.equal) return false;
  return true;
}

GenerationReport check_generation(const LieAction& action, const std::vector<Polynomial>& fs, int max_degree) {
  check_homogeneous(fs);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i].ring() == action.ring())) throw DimensionMismatch("generator lives in a different ring");
    for (const auto& rho : action.rho())
      if (!rho(fs[i]).is_zero()) throw PreconditionError("generator " + std::to_string(i + 1) + " is not invariant");
  }
  if (!action.preserves_degree()) throw PreconditionError("generation check needs a degree-preserving action");
  const InvariantBasis inv = invariants_up_to_degree(action, max_degree);
  GenerationReport rep{max_degree, {}};
  for (int d = 0; d <= max_degree; ++d) {
    const auto gen = generated_piece(action.ring(), fs, d);
    const std::size_t di = inv.pieces[static_cast<std::size_t>(d)].dim();
    if (gen.dim() > di) throw VerificationFailure("generated subalgebra exceeds the invariants in degree " + std::to_string(d));
    rep.rows.push_back({d, di, gen.dim(), gen.dim() == di});
  }
  return rep;
}

Verdict freeness_monomial_check(const Ring& ring, const std::vector<Polynomial>& fs, int max_degree) {
  check_homogeneous(fs);
  for (int d = 0; d <= max_degree; ++d) {
    const auto products = degree_products(ring, fs, d);
    const auto columns = monomials_of_degree(ring.nvars, d);
    check_budget(columns.size(), d);
    std::vector<std::vector<Elem>> vecs;
    vecs.reserve(products.size());
    for (const auto& f : products) vecs.push_back(coordinates(f, columns));
    const std::size_t r = rank_of(Field::prime(ring.p), vecs, columns.size());
    if (r != products.size())
      return Verdict::fail("degree " + std::to_string(d) + ": " + std::to_string(products.size()) +
                           " products span only " + std::to_string(r) + " dimensions");
  }
  return Verdict::pass();
}

}  // namespace rlie

#include "rlie/graded.hpp"

#include <algorithm>
#include <map>

#include "rlie/errors.hpp"

namespace rlie {

std::vector<Elem> coordinates(const Polynomial& f, const std::vector<Monomial>& columns) {
  std::vector<Elem> v(columns.size());
  for (const auto& t : f.terms()) {
    auto it = std::lower_bound(columns.begin(), columns.end(), t.mono);
    if (it == columns.end() || !(*it == t.mono)) {
      // columns might not be sorted (callers may pass any order)
      it = std::find(columns.begin(), columns.end(), t.mono);
      if (it == columns.end()) throw DimensionMismatch("polynomial has a monomial outside the coordinate space");
    }
    v[static_cast<std::size_t>(it - columns.begin())] = Elem{t.coeff};
  }
  return v;
}

Polynomial from_coordinates(Ring ring, const std::vector<Monomial>& columns, std::span<const Elem> coords) {
  if (coords.size() != columns.size()) throw DimensionMismatch("coordinate vector length mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i].v != 0) terms.push_back({columns[i], static_cast<Coeff>(coords[i].v)});
  return Polynomial::from_terms(ring, std::move(terms));
}

GradedSubspace GradedSubspace::canonical(Ring ring, int degree, std::vector<Monomial> columns,
                                         const std::vector<std::vector<Elem>>& vectors) {
  const Field F = Field::prime(ring.p);
  const std::size_t n = columns.size();
  // order columns by descending monomial so each pivot is the leading monomial
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return columns[b] < columns[a]; });
  Matrix m(F, vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != n) throw DimensionMismatch("vector length mismatch");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = vectors[r][order[c]];
  }
  std::vector<std::size_t> piv;
  const Matrix red = m.rref(&piv);
  GradedSubspace out{ring, degree, std::move(columns), {}};
  for (std::size_t r = piv.size(); r-- > 0;) {
    std::vector<Elem> coords(n);
    for (std::size_t c = 0; c < n; ++c) coords[order[c]] = red(r, c);
    out.basis.push_back(from_coordinates(ring, out.columns, coords));
  }
  return out;
}

GradedSubspace GradedSubspace::span_of(Ring ring, int degree, std::vector<Monomial> columns,
                                       const std::vector<Polynomial>& polys) {
  std::vector<std::vector<Elem>> vecs;
  vecs.reserve(polys.size());
  for (const auto& f : polys) vecs.push_back(coordinates(f, columns));
  return canonical(ring, degree, std::move(columns), vecs);
}

bool GradedSubspace::contains(const Polynomial& f) const {
  std::vector<Elem> target;
  try {
    target = coordinates(f, columns);
  } catch (const DimensionMismatch&) {
    return false;
  }
  std::vector<std::vector<Elem>> vecs;
  for (const auto& b : basis) vecs.push_back(coordinates(b, columns));
  return solve_combination(Field::prime(ring.p), vecs, target).has_value();
}

Matrix operator_matrix(int p, const std::vector<Polynomial>& images) {
  std::map<Monomial, std::size_t> rows;
  for (const auto& f : images)
    for (const auto& t : f.terms()) rows.emplace(t.mono, 0);
  std::size_t k = 0;
  for (auto& [m, i] : rows) i = k++;
  Matrix out(Field::prime(p), rows.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& t : images[j].terms()) out(rows.at(t.mono), j) = Elem{t.coeff};
  return out;
}

GradedSubspace graded_kernel(const std::vector<Matrix>& maps, Ring ring, int degree, std::vector<Monomial> columns) {
  const Field F = Field::prime(ring.p);
  const std::size_t n = columns.size();
  std::vector<std::vector<Elem>> basis;
  if (maps.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Elem> v(n);
      v[i] = Elem{1};
      basis.push_back(std::move(v));
    }
  } else {
    Matrix stacked(F, 0, n);
    for (const auto& m : maps) {
      if (m.cols() != n) throw DimensionMismatch("operator does not act on the given coordinate space");
      stacked = stacked.stacked(m);
    }
    basis = stacked.kernel();
  }
  return GradedSubspace::canonical(ring, degree, std::move(columns), basis);
}

}  // namespace rlie

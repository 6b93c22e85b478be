#include <gtest/gtest.h>

#include "rlie/catalog.hpp"
#include "rlie/charpoly.hpp"
#include "rlie/constant_group.hpp"
#include "rlie/enveloping.hpp"
#include "rlie/errors.hpp"
#include "rlie/sampling.hpp"

using namespace rlie;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

Vec vec_of(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Elem{static_cast<std::uint16_t>(x)});
  return v;
}

// All vectors of F_p^dim in lexicographic order of base-p digits.
std::vector<Vec> all_vectors(int p, std::size_t dim) {
  std::vector<Vec> out;
  const std::size_t total = ipow(static_cast<std::size_t>(p), dim);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Vec v(dim);
    std::size_t r = idx;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = Elem{static_cast<std::uint16_t>(r % static_cast<std::size_t>(p))};
      r /= static_cast<std::size_t>(p);
    }
    out.push_back(v);
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

// Commutative u(g) is semisimple iff no nonzero element has zero p-th power.
bool no_nilpotents_by_enumeration(const EnvelopingAlgebra& u) {
  for (const auto& x : all_vectors(u.p(), u.dim()))
    if (!is_zero(x) && is_zero(u.power(x, static_cast<std::uint64_t>(u.p())))) return false;
  return true;
}

// dim u(g) - dim u(g)h, with u(g)h spanned by basis monomials times h.
std::size_t index_by_left_ideal(const EnvelopingAlgebra& u, const std::vector<Vec>& h) {
  std::vector<std::vector<Elem>> span;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (const auto& y : h) span.push_back(u.multiply(u.unit(a), u.embed(y)));
  return u.dim() - rank_of(u.algebra().field(), span, u.dim());
}

std::size_t count_fixed_elements(const ConstantGroupAction& a) {
  const auto mons = a.standard_monomials();
  std::size_t fixed = 0;
  for (const auto& c : all_vectors(a.ring().p, mons.size())) {
    Polynomial f(a.ring());
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (c[i].v) f += Polynomial::monomial(a.ring(), mons[i], c[i].v);
    bool ok = true;
    for (const auto& s : a.elements()) ok = ok && a.act(s, f) == f;
    if (ok) ++fixed;
  }
  return fixed;
}

Polynomial X(const Ring& R, int i) { return Polynomial::variable(R, i); }

}  // namespace

TEST(Enveloping, PbwIndexing) {
  const auto u = build_enveloping(heisenberg_algebra(3));
  EXPECT_EQ(u.dim(), 27u);
  for (std::size_t a = 0; a < u.dim(); ++a) EXPECT_EQ(u.index_of(u.exponents(a)), a);
  EXPECT_EQ(u.exponents(1), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(u.exponents(3), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(u.exponents(26), (std::vector<int>{2, 2, 2}));
}

TEST(Enveloping, SmallProductsByHand) {
  const auto t = build_enveloping(torus_algebra(1, 2));
  EXPECT_EQ(t.multiply(t.unit(1), t.unit(1)), t.unit(1));
  const auto n = build_enveloping(nil_algebra(1, 2));
  EXPECT_TRUE(is_zero(n.multiply(n.unit(1), n.unit(1))));
  const auto s = build_enveloping(swap_algebra(2));
  EXPECT_EQ(s.multiply(s.unit(1), s.unit(1)), s.unit(2));
  EXPECT_EQ(s.multiply(s.unit(2), s.unit(2)), s.unit(1));

  // e2 e1 = e1 e2 - e3 in u(heis) at p = 3.
  const auto h = build_enveloping(heisenberg_algebra(3));
  Vec expect = h.unit(h.index_of({1, 1, 0}));
  expect[h.index_of({0, 0, 1})] = Elem{2};
  EXPECT_EQ(h.multiply(h.unit(3), h.unit(1)), expect);
  EXPECT_EQ(h.multiply(h.unit(1), h.unit(3)), h.unit(h.index_of({1, 1, 0})));
}

TEST(Enveloping, WittOneByHand) {
  const auto u = build_enveloping(build_wn(1, 2).algebra);
  // basis e1 = d1, e2 = x1*d1
  EXPECT_TRUE(is_zero(u.multiply(u.unit(1), u.unit(1))));
  EXPECT_EQ(u.multiply(u.unit(2), u.unit(2)), u.unit(2));
  Vec expect = u.unit(3);
  expect[1] = Elem{1};
  EXPECT_EQ(u.multiply(u.unit(2), u.unit(1)), expect);
}

TEST(Enveloping, UnitEmbeddingAndPPower) {
  for (const char* name : {"W:1:2", "W:1:3", "heis:3:3", "swap:2:3", "W:2:2"}) {
    const auto g = catalog_algebra(name);
    const auto u = build_enveloping(g);
    Rng rng(97, 0);
    const Field& F = g.field();
    for (int t = 0; t < 20; ++t) {
      const auto x = random_vector(F, g.dim(), rng);
      const auto a = random_vector(F, u.dim(), rng);
      EXPECT_EQ(u.multiply(u.one(), a), a) << name;
      EXPECT_EQ(u.multiply(a, u.one()), a) << name;
      EXPECT_EQ(u.as_lie_element(u.embed(x)), x) << name;
      const auto px = p_power_of(u, x);
      EXPECT_EQ(u.as_lie_element(u.power(u.embed(x), static_cast<std::uint64_t>(g.p()))), px) << name;
      const auto y = random_vector(F, g.dim(), rng);
      const auto xy = u.multiply(u.embed(x), u.embed(y));
      const auto yx = u.multiply(u.embed(y), u.embed(x));
      Vec comm(u.dim());
      for (std::size_t k = 0; k < comm.size(); ++k) comm[k] = F.sub(xy[k], yx[k]);
      EXPECT_EQ(comm, u.embed(g.bracket_of(x, y))) << name;
    }
    for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_EQ(p_power_of(u, g.unit(i)), g.pmap(i)) << name;
  }
}

TEST(Enveloping, VerifiesAcrossCatalog) {
  for (const char* name : {"W:1:2", "W:1:3", "W:2:2", "torus:3:3", "nil:4:2", "swap:2:5", "heis:3:2",
                           "heis:3:3"})
    EXPECT_TRUE(verify_enveloping(build_enveloping(catalog_algebra(name))).ok) << name;
}

TEST(Enveloping, RandomTripleAssociativityAboveFullCheck) {
  const auto u = build_enveloping(catalog_algebra("W:2:2"));
  ASSERT_GT(u.dim(), kFullAssociativityDim);
  EXPECT_TRUE(verify_enveloping(u, 3, 50).ok);
}

TEST(Enveloping, Budget) {
  EXPECT_THROW(build_enveloping(catalog_algebra("W:2:3")), BudgetExceeded);
  EXPECT_NO_THROW(build_enveloping(catalog_algebra("torus:6:3")));
  EXPECT_THROW(build_enveloping(catalog_algebra("torus:7:3")), BudgetExceeded);
}

TEST(Subgroup, ExamplesByHand) {
  const auto g = catalog_algebra("W:1:3");
  const auto u = build_enveloping(g);
  EXPECT_EQ(subgroup_index(u, {}), 27u);
  EXPECT_EQ(subgroup_index(u, basis_from_labels(g, {"x1*d1"})), 9u);
  EXPECT_EQ(subgroup_index(u, basis_from_labels(g, {"d1", "x1*d1", "x1^(2)*d1"})), 1u);
  EXPECT_EQ(induced_dimension(u, basis_from_labels(g, {"d1", "x1*d1"}), 2), 6u);
  EXPECT_EQ(hom_dimension(u, basis_from_labels(g, {"d1", "x1*d1"}), 2), 6u);
}

TEST(Subgroup, NotASubalgebra) {
  const auto g = catalog_algebra("W:1:3");
  const auto u = build_enveloping(g);
  EXPECT_THROW(subgroup_index(u, basis_from_labels(g, {"d1", "x1^(2)*d1"})), PreconditionError);
  EXPECT_THROW(subalgebra(u, basis_from_labels(g, {"d1", "x1^(2)*d1"})), PreconditionError);
  // closed under bracket, not under the p-map: e1^[2] = e2 in the swap torus
  const auto s = catalog_algebra("swap:2:2");
  EXPECT_THROW(subgroup_index(build_enveloping(s), {s.unit(0)}), PreconditionError);
}

TEST(Subgroup, IndexLawAcrossCatalog) {
  const auto cases = index_catalog();
  ASSERT_GE(cases.size(), 10u);
  for (const auto& c : cases) {
    const auto g = catalog_algebra(c.algebra);
    const auto u = build_enveloping(g);
    const auto h = basis_from_labels(g, c.labels);
    const std::size_t idx = subgroup_index(u, h);
    const std::size_t uh = ipow(static_cast<std::size_t>(g.p()), h.size());
    EXPECT_EQ(idx * uh, u.dim()) << c.description;
    EXPECT_EQ(idx, index_by_left_ideal(u, h)) << c.description;
    if (u.dim() <= 16) EXPECT_EQ(hom_dimension(u, h, 3), 3 * idx) << c.description;
  }
}

TEST(Subgroup, SubalgebraStructureConstants) {
  const auto g = catalog_algebra("W:1:3");
  const auto h = subalgebra(build_enveloping(g), basis_from_labels(g, {"d1", "x1*d1"}));
  ASSERT_EQ(h.dim(), 2u);
  EXPECT_EQ(h.bracket(0, 1), vec_of({1, 0}));
  EXPECT_EQ(h.pmap(0), vec_of({0, 0}));
  EXPECT_EQ(h.pmap(1), vec_of({0, 1}));
}

TEST(Torus, Examples) {
  EXPECT_TRUE(is_torus(torus_algebra(2, 3)));
  EXPECT_TRUE(is_torus(swap_algebra(2)));
  EXPECT_FALSE(is_torus(nil_algebra(2, 3)));
  EXPECT_FALSE(is_torus(heisenberg_algebra(2)));
  EXPECT_FALSE(is_torus(catalog_algebra("W:1:2")));
  EXPECT_TRUE(semisimplicity_oracle(build_enveloping(swap_algebra(3))));
  EXPECT_FALSE(semisimplicity_oracle(build_enveloping(nil_algebra(1, 3))));
  EXPECT_FALSE(semisimplicity_oracle(build_enveloping(catalog_algebra("W:1:2"))));
}

TEST(Torus, CatalogAgreesWithOracles) {
  const auto cases = torus_catalog();
  ASSERT_GE(cases.size(), 8u);
  bool saw_true = false, saw_false = false;
  for (const auto& c : cases) {
    const auto u = build_enveloping(c.g);
    EXPECT_EQ(is_torus(c.g), c.expected_torus) << c.description;
    EXPECT_EQ(semisimplicity_oracle(u), c.expected_torus) << c.description;
    if (c.g.is_abelian() && u.dim() <= 81) EXPECT_EQ(no_nilpotents_by_enumeration(u), c.expected_torus) << c.description;
    (c.expected_torus ? saw_true : saw_false) = true;
  }
  EXPECT_TRUE(saw_true);
  EXPECT_TRUE(saw_false);
}

TEST(Torus, AbelianAlgebrasByEnumeration) {
  // All p-maps on a 2-dim abelian algebra over F_2 given by images of e1, e2.
  for (const auto& img0 : all_vectors(2, 2))
    for (const auto& img1 : all_vectors(2, 2)) {
      RestrictedLieAlgebra g(2, 2);
      g.set_pmap(0, img0);
      g.set_pmap(1, img1);
      const auto u = build_enveloping(g);
      const bool nn = no_nilpotents_by_enumeration(u);
      EXPECT_EQ(semisimplicity_oracle(u), nn);
      EXPECT_EQ(is_torus(g), nn);
    }
}

TEST(Torus, RegularStabilizersInWnAreTori) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    const auto w = build_wn(n, p);
    const Field F = Field::prime(p);
    const auto u = build_enveloping(w.algebra);
    int regular = 0;
    for (const auto& d : all_vectors(p, w.dim())) {
      const auto basis = centralizer(w, F, d);
      const bool nonzero_psi0 = char_poly_invariants_at(w, F, d)[0] != F.zero();
      if (!nonzero_psi0) continue;
      ++regular;
      ASSERT_EQ(basis.size(), static_cast<std::size_t>(n));
      std::vector<Vec> h(basis.begin(), basis.end());
      EXPECT_TRUE(is_torus(subalgebra(u, h))) << "n=" << n << " p=" << p;
    }
    EXPECT_GT(regular, 0);
  }
  const auto w = build_wn(1, 3);
  const auto u = build_enveloping(w.algebra);
  const auto h = centralizer(w, Field::prime(3), vec_of({1, 0, 0}));
  EXPECT_FALSE(is_torus(subalgebra(u, std::vector<Vec>(h.begin(), h.end()))));
}

TEST(ConstantGroup, CounterexampleInvariants) {
  const auto a = catalog_group_action("counterexample");
  EXPECT_EQ(a.order(), 2u);
  EXPECT_TRUE(a.is_quotient());
  const auto inv = constant_invariants(a);
  ASSERT_EQ(inv.pieces.size(), 1u);
  EXPECT_TRUE(inv.filtered);
  const Ring& R = a.ring();
  EXPECT_EQ(inv.pieces[0].dim(), 2u);
  EXPECT_TRUE(inv.pieces[0].contains(Polynomial::constant(R, 1)));
  EXPECT_TRUE(inv.pieces[0].contains(X(R, 0).pow(2)));
  EXPECT_FALSE(inv.pieces[0].contains(X(R, 0)));
  EXPECT_EQ(count_fixed_elements(a), 9u);
}

TEST(ConstantGroup, QuotientInvariantsByEnumeration) {
  for (const char* name : {"counterexample", "trivial-cubic:2", "trivial-cubic:3"}) {
    const auto a = catalog_group_action(name);
    const auto inv = constant_invariants(a);
    EXPECT_EQ(count_fixed_elements(a), ipow(static_cast<std::size_t>(a.ring().p), inv.pieces[0].dim())) << name;
  }
  const auto swap = parse_group_action(
      "p=3\ngroup\nsigma_1 : x1 -> 1*x2\nsigma_1 : x2 -> 1*x1\ntarget\nquotient 2\nrelation 1*x1^2\nrelation 1*x2^2\n");
  EXPECT_EQ(swap.order(), 2u);
  const auto inv = constant_invariants(swap);
  EXPECT_EQ(inv.pieces[0].dim(), 3u);
  EXPECT_EQ(count_fixed_elements(swap), 27u);
}

TEST(ConstantGroup, SignLineInvariants) {
  const auto a = catalog_group_action("signline:3");
  const auto inv = constant_invariants(a, 4);
  EXPECT_EQ(inv.dims(), (std::vector<std::size_t>{1, 0, 1, 0, 1}));
  const Ring& R = a.ring();
  EXPECT_TRUE(inv.pieces[2].contains(X(R, 0).pow(2)));
  EXPECT_TRUE(inv.pieces[4].contains(X(R, 0).pow(2) * X(R, 0).pow(2)));
}

TEST(ConstantGroup, TrivialGroupOnPolynomials) {
  const Ring R = Ring::polynomial(2, 5);
  const auto a = ConstantGroupAction::on_polynomials(R, {});
  EXPECT_EQ(a.order(), 1u);
  EXPECT_EQ(constant_invariants(a, 3).dims(), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(ConstantGroup, InvariantsClosedUnderProduct) {
  const auto a = parse_group_action("p=3\ngroup\nsigma_1 : x1 -> 1*x2\nsigma_1 : x2 -> 1*x1\ntarget\npoly 2\n");
  const auto inv = constant_invariants(a, 6);
  EXPECT_EQ(inv.dims(), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4}));
  for (int d1 = 1; d1 <= 3; ++d1)
    for (int d2 = d1; d1 + d2 <= 6; ++d2)
      for (const auto& f : inv.pieces[static_cast<std::size_t>(d1)].basis)
        for (const auto& g : inv.pieces[static_cast<std::size_t>(d2)].basis)
          EXPECT_TRUE(inv.pieces[static_cast<std::size_t>(d1 + d2)].contains(f * g));
}

TEST(ConstantGroup, GeneratedGroupOrder) {
  const auto a = parse_group_action("p=5\ngroup\nsigma_1 : x1 -> 2*x1\ntarget\npoly 1\n");
  EXPECT_EQ(a.order(), 4u);
  EXPECT_EQ(a.elements()[0], (Substitution{X(a.ring(), 0)}));
}

TEST(ConstantGroup, InvalidActions) {
  EXPECT_THROW(parse_group_action("p=3\ngroup\nsigma_1 : x1 -> 1*x1^2\ntarget\npoly 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_group_action("p=3\ngroup\nsigma_1 : x1 -> 1*x1 + 1\ntarget\npoly 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_group_action("p=3\ngroup\ntarget\nquotient 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_group_action("p=4\ngroup\ntarget\npoly 1\n"), std::invalid_argument);
  EXPECT_THROW(catalog_group_action("signline:4"), std::invalid_argument);
}

TEST(Freeness, CounterexampleIsNotFree) {
  const auto r = freeness_check(catalog_group_action("counterexample"));
  EXPECT_EQ(r.verdict, FreenessVerdict::not_free);
  EXPECT_EQ(to_string(r.verdict), "not free");
  EXPECT_EQ(r.algebra_dims, (std::vector<std::size_t>{3}));
  EXPECT_EQ(r.invariant_dims, (std::vector<std::size_t>{2}));
}

TEST(Freeness, SignLineIsGradedFreeOfRankTwo) {
  const auto a = catalog_group_action("signline:3");
  const auto r = freeness_check(a, 5);
  EXPECT_EQ(r.verdict, FreenessVerdict::free);
  EXPECT_EQ(to_string(r.verdict), "free");
  EXPECT_TRUE(r.graded);
  EXPECT_EQ(r.rank, 2u);
  ASSERT_EQ(r.basis.size(), 2u);
  EXPECT_EQ(r.basis[0], Polynomial::constant(a.ring(), 1));
  EXPECT_EQ(r.basis[1], X(a.ring(), 0));
  EXPECT_EQ(r.rank, max_orbit_index(a, 0, 64, 2));
}

TEST(Freeness, TrivialCubicIsFreeOfRankOne) {
  for (int p : {2, 3, 5}) {
    const auto r = freeness_check(catalog_group_action("trivial-cubic:" + std::to_string(p)));
    EXPECT_EQ(r.verdict, FreenessVerdict::free);
    EXPECT_EQ(r.rank, 1u);
  }
}

TEST(Freeness, CyclicAndSymmetricActions) {
  const auto c4 = parse_group_action("p=5\ngroup\nsigma_1 : x1 -> 2*x1\ntarget\npoly 1\n");
  const auto r4 = freeness_check(c4, 8);
  EXPECT_EQ(r4.verdict, FreenessVerdict::free);
  EXPECT_EQ(r4.rank, 4u);
  EXPECT_EQ(max_orbit_index(c4, 0, 64, 1), 4u);

  const auto s2 = parse_group_action("p=3\ngroup\nsigma_1 : x1 -> 1*x2\nsigma_1 : x2 -> 1*x1\ntarget\npoly 2\n");
  const auto r2 = freeness_check(s2, 6);
  EXPECT_EQ(r2.verdict, FreenessVerdict::free);
  EXPECT_EQ(r2.rank, 2u);
  EXPECT_EQ(r2.rank, max_orbit_index(s2, 0, 64, 2));
}

TEST(OrbitIndex, Examples) {
  EXPECT_THROW(max_orbit_index(catalog_group_action("counterexample"), 0, 16, 2), PreconditionError);
  EXPECT_EQ(max_orbit_index(catalog_group_action("signline:3"), 0, 64, 1), 2u);
  const Ring R = Ring::polynomial(1, 3);
  EXPECT_EQ(max_orbit_index(ConstantGroupAction::on_polynomials(R, {}), 0, 16, 1), 1u);
}

TEST(OrbitIndex, DividesGroupOrderAndIsDeterministic) {
  for (const char* text : {"p=5\ngroup\nsigma_1 : x1 -> 2*x1\ntarget\npoly 1\n",
                           "p=3\ngroup\nsigma_1 : x1 -> 1*x2\nsigma_1 : x2 -> 1*x1\ntarget\npoly 2\n",
                           "p=3\ngroup\nsigma_1 : x1 -> 2*x1\ntarget\npoly 1\n"}) {
    const auto a = parse_group_action(text);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto q = max_orbit_index(a, seed, 8, 2);
      EXPECT_EQ(a.order() % q, 0u);
      EXPECT_EQ(q, max_orbit_index(a, seed, 8, 2));
    }
  }
}

TEST(GroupText, RoundTrip) {
  for (const char* name : {"counterexample", "signline:3", "signline:7", "trivial-cubic:2"}) {
    const auto a = catalog_group_action(name);
    const auto b = parse_group_action(to_text(a));
    EXPECT_EQ(to_text(b), to_text(a)) << name;
    EXPECT_EQ(b.order(), a.order()) << name;
  }
  EXPECT_EQ(to_text(catalog_group_action("counterexample")),
            "p=3\ngroup\nsigma_1 : x1 -> 2*x1\ntarget\nquotient 1\nrelation 1*x1^3\n");
}

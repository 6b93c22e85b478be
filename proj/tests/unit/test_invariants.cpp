#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rlie/catalog.hpp"
#include "rlie/charpoly.hpp"
#include "rlie/errors.hpp"
#include "rlie/invariants.hpp"
#include "rlie/sampling.hpp"

using namespace rlie;

namespace {

const std::vector<std::pair<int, int>> kSymbolic{{1, 2}, {1, 3}, {2, 2}};

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Polynomial X(const Ring& R, int i) { return Polynomial::variable(R, i); }

// Generic characteristic polynomial via principal minors over F_p[xi].
std::vector<Polynomial> generic_charpoly_oracle(const WnAlgebra& w) {
  const Ring R = Ring::polynomial(static_cast<int>(w.dim()), w.p);
  const std::size_t N = w.basis_matrices[0].rows();
  std::vector<std::vector<Polynomial>> m(N, std::vector<Polynomial>(N, Polynomial(R)));
  for (std::size_t k = 0; k < w.dim(); ++k)
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (w.basis_matrices[k](r, c).v != 0)
          m[r][c] += X(R, static_cast<int>(k)).scaled(w.basis_matrices[k](r, c).v);
  return oracle::charpoly_by_minors<Polynomial>(
      m, Polynomial(R), Polynomial::constant(R, 1), [](const Polynomial& a, const Polynomial& b) { return a + b; },
      [](const Polynomial& a, const Polynomial& b) { return a * b; }, [](const Polynomial& a) { return -a; });
}

LieAction trivial_action(int nvars, int p) {
  const Ring R = Ring::polynomial(nvars, p);
  return LieAction(nil_algebra(1, p), R, {Derivation::zero(R)});
}

}  // namespace

TEST(Invariants, WittOneDegreeOne) {
  const auto a = adjoint_action(build_wn(1, 2));
  const auto inv = invariants_up_to_degree(a, 1);
  ASSERT_EQ(inv.pieces.size(), 2u);
  EXPECT_FALSE(inv.filtered);
  ASSERT_EQ(inv.pieces[0].dim(), 1u);
  EXPECT_EQ(inv.pieces[0].basis[0], Polynomial::constant(a.ring(), 1));
  ASSERT_EQ(inv.pieces[1].dim(), 1u);
  EXPECT_EQ(inv.pieces[1].basis[0], X(a.ring(), 1));
}

TEST(Invariants, WittOneDegreeTwo) {
  const auto a = adjoint_action(build_wn(1, 2));
  const auto inv = invariants_up_to_degree(a, 2);
  const Ring R = a.ring();
  ASSERT_EQ(inv.pieces[2].dim(), 2u);
  EXPECT_TRUE(inv.pieces[2].contains(X(R, 0).pow(2)));
  EXPECT_TRUE(inv.pieces[2].contains(X(R, 1).pow(2)));
  EXPECT_FALSE(inv.pieces[2].contains(X(R, 0) * X(R, 1)));
  EXPECT_EQ(inv.dims(), (std::vector<std::size_t>{1, 1, 2}));
}

TEST(Invariants, TrivialActionGivesEverything) {
  const auto a = trivial_action(3, 3);
  const auto inv = invariants_up_to_degree(a, 4);
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(inv.pieces[static_cast<std::size_t>(d)].dim(), monomials_of_degree(3, d).size());
}

TEST(Invariants, EveryBasisElementIsKilled) {
  for (const char* name : {"W:1:3", "W:2:2", "heis:3:3", "swap:2:3"}) {
    const auto a = catalog_action(name);
    const auto inv = invariants_up_to_degree(a, 3);
    for (const auto& piece : inv.pieces)
      for (const auto& f : piece.basis)
        for (const auto& d : a.rho()) EXPECT_TRUE(d(f).is_zero()) << name;
  }
}

TEST(Invariants, NonHomogeneousActionUsesFilteredPieces) {
  // e acts as d/dx on k[x] at p = 2; the invariants of degree <= d are k[x^2] up to d.
  const Ring R = Ring::polynomial(1, 2);
  const LieAction a(nil_algebra(1, 2), R, {Derivation::partial(R, 0)});
  EXPECT_FALSE(a.preserves_degree());
  const auto inv = invariants_up_to_degree(a, 5);
  EXPECT_TRUE(inv.filtered);
  EXPECT_EQ(inv.dims(), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3}));
  EXPECT_TRUE(inv.pieces[4].contains(X(R, 0).pow(4) + X(R, 0).pow(2) + Polynomial::constant(R, 1)));
}

TEST(CharPolySymbolic, WittOneCharacteristicTwo) {
  const auto psi = char_poly_invariants_symbolic(1, 2);
  ASSERT_EQ(psi.psi.size(), 1u);
  EXPECT_EQ(psi.psi[0], X(psi.ring, 1));
  EXPECT_EQ(psi.psi[0].to_string(VarNames::xis()), "1*xi_1");
}

TEST(CharPolySymbolic, WittOneCharacteristicThree) {
  const auto psi = char_poly_invariants_symbolic(1, 3);
  ASSERT_EQ(psi.psi.size(), 1u);
  EXPECT_EQ(psi.psi[0].degree(), 2);
  EXPECT_TRUE(psi.psi[0].is_homogeneous());
}

TEST(CharPolySymbolic, CountHomogeneityAndVanishingAgainstMinorOracle) {
  for (auto [n, p] : kSymbolic) {
    const auto w = build_wn(n, p);
    const auto psi = char_poly_invariants_symbolic(n, p);
    ASSERT_EQ(psi.psi.size(), static_cast<std::size_t>(n));
    const auto chi = generic_charpoly_oracle(w);
    const std::size_t N = ipow(static_cast<std::size_t>(p), n);
    ASSERT_EQ(chi.size(), N + 1);
    for (std::size_t j = 0; j < N; ++j) {
      bool is_p_power = false;
      for (int i = 0; i < n; ++i)
        if (j == ipow(static_cast<std::size_t>(p), i)) {
          is_p_power = true;
          EXPECT_EQ(chi[j], psi.psi[static_cast<std::size_t>(i)]) << "n=" << n << " p=" << p << " i=" << i;
          EXPECT_TRUE(psi.psi[static_cast<std::size_t>(i)].is_homogeneous());
          EXPECT_EQ(psi.psi[static_cast<std::size_t>(i)].degree(), static_cast<int>(N - j));
        }
      if (!is_p_power) EXPECT_TRUE(chi[j].is_zero()) << "t^" << j;
    }
  }
}

TEST(CharPolySymbolic, Budget) {
  EXPECT_THROW(char_poly_invariants_symbolic(3, 3), BudgetExceeded);
  EXPECT_THROW(char_poly_invariants_symbolic(3, 2), BudgetExceeded);
  EXPECT_THROW(char_poly_invariants_symbolic(1, 11, true), BudgetExceeded);
  EXPECT_TRUE(symbolic_in_default_budget(2, 2));
  EXPECT_FALSE(symbolic_in_default_budget(3, 2));
}

TEST(CharPolySymbolic, LargeConfigsBehindFlag) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
    const auto psi = char_poly_invariants_symbolic(n, p, true);
    const std::size_t N = ipow(static_cast<std::size_t>(p), n);
    ASSERT_EQ(psi.psi.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(psi.psi[static_cast<std::size_t>(i)].is_homogeneous());
      EXPECT_EQ(static_cast<std::size_t>(psi.psi[static_cast<std::size_t>(i)].degree()),
                N - ipow(static_cast<std::size_t>(p), i));
    }
  }
}

TEST(CharPolySymbolic, PsiIsInvariant) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {1, 5}, {1, 7}, {3, 2}, {2, 3}}) {
    const auto psi = char_poly_invariants_symbolic(n, p, true);
    const auto a = adjoint_action(build_wn(n, p));
    for (const auto& f : psi.psi)
      for (const auto& d : a.rho()) EXPECT_TRUE(d(f).is_zero()) << "n=" << n << " p=" << p;
  }
}

TEST(CharPolyAt, Examples) {
  const auto w = build_wn(1, 2);
  const Field F = Field::prime(2);
  EXPECT_EQ(char_poly_invariants_at(w, F, std::vector<Elem>{Elem{0}, Elem{0}}), (std::vector<Elem>{Elem{0}}));
  EXPECT_EQ(char_poly_invariants_at(w, F, std::vector<Elem>{Elem{0}, Elem{1}}), (std::vector<Elem>{Elem{1}}));
  EXPECT_EQ(char_poly_invariants_at(w, F, std::vector<Elem>{Elem{1}, Elem{0}}), (std::vector<Elem>{Elem{0}}));
  const auto zero = char_poly_invariants_at(build_wn(2, 3), Field::prime(3), std::vector<Elem>(18));
  EXPECT_EQ(zero, std::vector<Elem>(2));
}

TEST(CharPolyAt, MatchesSymbolicAtRandomPoints) {
  for (auto [n, p] : kSymbolic) {
    const auto w = build_wn(n, p);
    const auto psi = char_poly_invariants_symbolic(n, p);
    const Field F = Field::extension(p, 4);
    Rng rng(61, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 100; ++t) {
      const auto d = random_vector(F, w.dim(), rng);
      const auto at = char_poly_invariants_at(w, F, d);
      for (std::size_t i = 0; i < psi.psi.size(); ++i) EXPECT_EQ(at[i], psi.psi[i].evaluate(F, d));
    }
  }
}

TEST(CharPolyAt, VanishingPatternAtRandomPoints) {
  for (auto [n, p, e] : std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {1, 5, 2}, {1, 7, 2}, {3, 2, 2}, {2, 3, 2}}) {
    const auto w = build_wn(n, p);
    const Field F = Field::extension(p, e);
    const std::size_t N = ipow(static_cast<std::size_t>(p), n);
    Rng rng(67, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 100; ++t) {
      const auto d = random_vector(F, w.dim(), rng);
      const auto c = char_poly_at(w, F, d);
      ASSERT_EQ(c.size(), N + 1);
      for (std::size_t j = 0; j < N; ++j) {
        bool allowed = false;
        for (int i = 0; i < n; ++i) allowed = allowed || j == ipow(static_cast<std::size_t>(p), i);
        if (!allowed) ASSERT_EQ(c[j], F.zero()) << "n=" << n << " p=" << p << " t^" << j;
      }
      if (t < 3 && N <= 9) EXPECT_EQ(c, oracle::charpoly_oracle(w.matrix_at(F, d)));
    }
  }
}

TEST(CharPolyAt, WeightedHomogeneityUnderScaling) {
  // psi_i(c D) = c^{p^n - p^i} psi_i(D).
  for (auto [n, p] : kSymbolic) {
    const auto w = build_wn(n, p);
    const Field F = Field::extension(p, 2);
    Rng rng(71, static_cast<std::uint64_t>(n * 10 + p));
    const std::size_t N = ipow(static_cast<std::size_t>(p), n);
    for (int t = 0; t < 20; ++t) {
      const auto d = random_vector(F, w.dim(), rng);
      const Elem c = F.element(1 + static_cast<std::uint32_t>(rng.below(F.order() - 1)));
      auto cd = d;
      for (auto& x : cd) x = F.mul(x, c);
      const auto a = char_poly_invariants_at(w, F, d), b = char_poly_invariants_at(w, F, cd);
      for (int i = 0; i < n; ++i)
        EXPECT_EQ(b[static_cast<std::size_t>(i)],
                  F.mul(F.pow(c, N - ipow(static_cast<std::size_t>(p), i)), a[static_cast<std::size_t>(i)]));
    }
  }
}

TEST(Generation, WittOneDegreeTwo) {
  const auto a = adjoint_action(build_wn(1, 2));
  const auto rep = check_generation(a, {X(a.ring(), 1)}, 2);
  EXPECT_TRUE(rep.generated());
  ASSERT_EQ(rep.rows.size(), 3u);
  for (std::size_t d = 0; d < 3; ++d) {
    EXPECT_EQ(rep.rows[d].dim_invariant, (std::vector<std::size_t>{1, 1, 2})[d]);
    EXPECT_EQ(rep.rows[d].dim_generated, rep.rows[d].dim_invariant);
  }
}

TEST(Generation, EmptyListAgainstTrivialAction) {
  const auto rep = check_generation(trivial_action(2, 3), {}, 1);
  EXPECT_FALSE(rep.generated());
  EXPECT_TRUE(rep.rows[0].equal);
  EXPECT_FALSE(rep.rows[1].equal);
  EXPECT_EQ(rep.rows[1].dim_generated, 0u);
  EXPECT_EQ(rep.rows[1].dim_invariant, 2u);
}

TEST(Generation, RejectsNonInvariantOrInhomogeneous) {
  const auto a = adjoint_action(build_wn(1, 2));
  EXPECT_THROW(check_generation(a, {X(a.ring(), 0)}, 2), PreconditionError);
  EXPECT_THROW(check_generation(a, {X(a.ring(), 1) + Polynomial::constant(a.ring(), 1)}, 2), PreconditionError);
}

TEST(Generation, PsiGeneratesWnInvariants) {
  for (auto [n, p, D] : std::vector<std::tuple<int, int, int>>{{1, 2, 6}, {1, 3, 6}, {2, 2, 4}}) {
    const auto a = adjoint_action(build_wn(n, p));
    const auto psi = char_poly_invariants_symbolic(n, p);
    const auto rep = check_generation(a, psi.psi, D);
    EXPECT_TRUE(rep.generated()) << "n=" << n << " p=" << p;
    const auto inv = invariants_up_to_degree(a, D);
    ASSERT_EQ(rep.rows.size(), inv.pieces.size());
    for (std::size_t d = 0; d < rep.rows.size(); ++d) {
      EXPECT_EQ(rep.rows[d].dim_invariant, inv.pieces[d].dim());
      EXPECT_LE(rep.rows[d].dim_generated, rep.rows[d].dim_invariant);
      EXPECT_EQ(generated_piece(a.ring(), psi.psi, static_cast<int>(d)).basis, inv.pieces[d].basis);
    }
    EXPECT_TRUE(freeness_monomial_check(a.ring(), psi.psi, D).ok);
  }
}

TEST(Generation, KnownDimensions) {
  auto dims = [](int n, int p, int D) {
    const auto a = adjoint_action(build_wn(n, p));
    return invariants_up_to_degree(a, D).dims();
  };
  EXPECT_EQ(dims(1, 2, 6), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4}));
  EXPECT_EQ(dims(1, 3, 6), (std::vector<std::size_t>{1, 0, 1, 3, 1, 3, 6}));
  EXPECT_EQ(dims(2, 2, 4), (std::vector<std::size_t>{1, 0, 9, 1, 44}));
}

TEST(Generation, PthPowersAloneAreMissingPsi) {
  const auto a = adjoint_action(build_wn(1, 3));
  const auto rep = check_generation(a, {}, 3);
  EXPECT_FALSE(rep.generated());
  EXPECT_FALSE(rep.rows[2].equal);
}

TEST(Freeness, Examples) {
  const Ring R = Ring::polynomial(2, 2);
  const auto xi1 = X(R, 1);
  EXPECT_TRUE(freeness_monomial_check(R, {xi1}, 3).ok);
  EXPECT_FALSE(freeness_monomial_check(R, {Polynomial(R)}, 3).ok);
  EXPECT_FALSE(freeness_monomial_check(R, {xi1, xi1}, 3).ok);
  EXPECT_FALSE(freeness_monomial_check(R, {X(R, 0).pow(2)}, 3).ok);
}

TEST(PsiDifferential, TwoPathsAgree) {
  for (auto [n, p] : kSymbolic) {
    const auto w = build_wn(n, p);
    const auto psi = char_poly_invariants_symbolic(n, p);
    const Field F = Field::extension(p, 4);
    Rng rng(73, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 30; ++t) {
      const auto d = random_vector(F, w.dim(), rng), e = random_vector(F, w.dim(), rng);
      EXPECT_EQ(psi_differential(w, F, d, e), psi_differential(psi, F, d, e));
    }
  }
}

TEST(Premet, WittOneByHand) {
  const auto w = build_wn(1, 2);
  const Field F = Field::prime(2);
  const std::vector<Elem> xd{Elem{0}, Elem{1}};
  EXPECT_EQ(psi_differential(w, F, xd, xd), (std::vector<Elem>{Elem{1}}));
  EXPECT_TRUE(premet_identity_check(w, F, xd, xd).ok);
}

TEST(Premet, Preconditions) {
  const auto w = build_wn(1, 2);
  const Field F = Field::prime(2);
  EXPECT_THROW(premet_identity_check(w, F, std::vector<Elem>{Elem{1}, Elem{0}}, std::vector<Elem>{Elem{1}, Elem{0}}),
               PreconditionError);
  EXPECT_THROW(premet_identity_check(w, F, std::vector<Elem>{Elem{0}, Elem{1}}, std::vector<Elem>{Elem{1}, Elem{0}}),
               PreconditionError);
}

TEST(Premet, RandomCentralizerPairs) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {1, 5}}) {
    const auto w = build_wn(n, p);
    const auto psi = symbolic_in_default_budget(n, p) ? std::optional(char_poly_invariants_symbolic(n, p)) : std::nullopt;
    const Field F = Field::extension(p, 4);
    Rng rng(79, static_cast<std::uint64_t>(n * 10 + p));
    int checked = 0;
    while (checked < 50) {
      const auto d = random_vector(F, w.dim(), rng);
      if (char_poly_invariants_at(w, F, d)[0] == F.zero()) continue;
      const auto basis = centralizer(w, F, d);
      ASSERT_EQ(basis.size(), static_cast<std::size_t>(n));
      std::vector<Elem> e(w.dim());
      for (const auto& b : basis) {
        const Elem c = rng.element(F);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = F.add(e[k], F.mul(c, b[k]));
      }
      EXPECT_TRUE(premet_identity_check(w, F, d, e).ok);
      if (psi) EXPECT_TRUE(premet_identity_check(w, F, d, e, &*psi).ok);
      ++checked;
    }
  }
}

TEST(SemisimpleSpan, Examples) {
  const auto w = build_wn(1, 2);
  const Field F = Field::prime(2);
  EXPECT_TRUE(semisimple_span_check(w, F, std::vector<Elem>{Elem{0}, Elem{1}}));
  EXPECT_FALSE(semisimple_span_check(w, F, std::vector<Elem>{Elem{1}, Elem{0}}));
  EXPECT_TRUE(semisimple_span_check(w, F, std::vector<Elem>{Elem{0}, Elem{0}}));
  const Ring B = Ring::truncated_algebra(1, 2);
  EXPECT_TRUE(semisimple_span_check(Derivation::partial(B, 0).times(X(B, 0))));
  EXPECT_FALSE(semisimple_span_check(Derivation::partial(B, 0)));
}

TEST(SemisimpleSpan, HoldsWheneverFirstPsiIsNonzero) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {1, 5}, {2, 3}}) {
    const auto w = build_wn(n, p);
    const Field F = Field::extension(p, 2);
    Rng rng(83, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 40; ++t) {
      const auto d = random_vector(F, w.dim(), rng);
      if (char_poly_invariants_at(w, F, d)[0] != F.zero()) EXPECT_TRUE(semisimple_span_check(w, F, d));
    }
  }
}

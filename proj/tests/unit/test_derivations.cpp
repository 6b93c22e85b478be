#include <gtest/gtest.h>

#include "rlie/errors.hpp"
#include "rlie/lie_algebra.hpp"
#include "rlie/sampling.hpp"
#include "rlie/witt.hpp"

using namespace rlie;

namespace {

const std::vector<std::pair<int, int>> kConfigs{{1, 2}, {1, 3}, {2, 2}, {1, 5}, {1, 7}, {2, 3}, {3, 2}};

Polynomial P(std::string_view s, Ring r) { return parse_polynomial(s, r); }

// Operator on B_n applied k times, through the dense matrix.
Matrix operator_power(const Derivation& d, int k) { return matrix_on_truncated(d).pow(static_cast<std::uint64_t>(k)); }

}  // namespace

TEST(Apply, PowerRule) {
  const Ring B = Ring::truncated_algebra(1, 3);
  EXPECT_EQ(apply(Derivation::partial(B, 0), P("x1^2", B)), P("2*x1", B));
}

TEST(Apply, KillsConstants) {
  const Ring B = Ring::truncated_algebra(2, 5);
  Rng rng(1);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(apply(random_derivation(B, rng), Polynomial::constant(B, 3)).is_zero());
}

TEST(Apply, EulerOperatorOnX) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const auto x = Polynomial::variable(B, 0);
  EXPECT_EQ(apply(Derivation::partial(B, 0).times(x), x), x);
}

TEST(Apply, LinearAndLeibniz) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(3, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 20; ++t) {
      const auto d = random_derivation(B, rng);
      const auto f = random_truncated_element(B, rng), g = random_truncated_element(B, rng);
      EXPECT_EQ(apply(d, f + g), apply(d, f) + apply(d, g));
      EXPECT_EQ(apply(d, f * g), apply(d, f) * g + f * apply(d, g));
    }
  }
}

TEST(Apply, VariableCountMismatchThrows) {
  const auto d = Derivation::partial(Ring::truncated_algebra(2, 3), 0);
  EXPECT_THROW(apply(d, Polynomial::variable(Ring::truncated_algebra(1, 3), 0)), DimensionMismatch);
}

TEST(Bracket, SelfBracketIsZero) {
  const Ring B = Ring::truncated_algebra(2, 3);
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto d = random_derivation(B, rng);
    EXPECT_TRUE(bracket(d, d).is_zero());
  }
}

TEST(Bracket, TranslationWithEuler) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const auto del = Derivation::partial(B, 0);
  const auto xdel = del.times(Polynomial::variable(B, 0));
  EXPECT_EQ(bracket(del, xdel), del);
}

TEST(Bracket, AntisymmetricAndJacobi) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(7, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 10; ++t) {
      const auto a = random_derivation(B, rng), b = random_derivation(B, rng), c = random_derivation(B, rng);
      EXPECT_EQ(bracket(a, b), bracket(b, a).scaled(-1));
      EXPECT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
    }
  }
}

TEST(Bracket, MismatchThrows) {
  EXPECT_THROW(bracket(Derivation::partial(Ring::truncated_algebra(2, 3), 0),
                       Derivation::partial(Ring::truncated_algebra(2, 5), 0)),
               DimensionMismatch);
}

TEST(PPower, Examples) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const auto del = Derivation::partial(B, 0);
  const auto xdel = del.times(Polynomial::variable(B, 0));
  EXPECT_TRUE(p_power(del).is_zero());
  EXPECT_EQ(p_power(xdel), xdel);
  EXPECT_TRUE(p_power(Derivation::zero(B)).is_zero());
}

TEST(PPower, EqualsOperatorCompositionOnMatrices) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(9, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 10; ++t) {
      const auto d = random_derivation(B, rng);
      EXPECT_EQ(matrix_on_truncated(p_power(d)), operator_power(d, p)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(PPower, SemilinearInScalarsExhaustively) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(11, static_cast<std::uint64_t>(n * 10 + p));
    const auto d = random_derivation(B, rng);
    const auto dp = p_power(d);
    const Field F = Field::prime(p);
    for (int c = 0; c < p; ++c) {
      const long long cp = F.pow(F.from_int(c), static_cast<std::uint64_t>(p)).v;
      EXPECT_EQ(p_power(d.scaled(c)), dp.scaled(cp));
    }
  }
}

TEST(Hochschild, BracketFormulaExamples) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const auto del = Derivation::partial(B, 0);
  const auto x = Polynomial::variable(B, 0);
  Rng rng(13);
  const auto e = random_derivation(B, rng);
  EXPECT_EQ(fd_bracket(Polynomial::constant(B, 1), del, e), bracket(del, e));
  EXPECT_EQ(fd_bracket(x, del, del), del);
  EXPECT_EQ(fd_bracket(x, del, del), bracket(del.times(x), del));
  EXPECT_TRUE(fd_bracket(Polynomial(B), del, e).is_zero());
}

TEST(Hochschild, PowerFormulaExamples) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const auto del = Derivation::partial(B, 0);
  const auto x = Polynomial::variable(B, 0);
  Rng rng(15);
  const auto d = random_derivation(B, rng);
  EXPECT_EQ(fd_power(Polynomial::constant(B, 1), d), p_power(d));
  const auto r = fd_power(x, del);
  EXPECT_EQ(r, del.times(x));
  EXPECT_EQ(apply(r, x), x);
  EXPECT_EQ(matrix_on_truncated(r), operator_power(del.times(x), 2));
  EXPECT_TRUE(fd_power(Polynomial(B), d).is_zero());
}

TEST(Hochschild, PowerFormulaOnRandomPairs) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(17, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 100; ++t) {
      const auto f = random_truncated_element(B, rng);
      const auto d = random_derivation(B, rng);
      const auto lhs = fd_power(f, d);
      ASSERT_EQ(lhs, p_power(d.times(f))) << "n=" << n << " p=" << p << " trial " << t;
      if (t < 5) EXPECT_EQ(matrix_on_truncated(lhs), operator_power(d.times(f), p));
    }
  }
}

TEST(Hochschild, BracketFormulaOnRandomTriples) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(19, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 100; ++t) {
      const auto f = random_truncated_element(B, rng);
      const auto d = random_derivation(B, rng), e = random_derivation(B, rng);
      const auto lhs = fd_bracket(f, d, e);
      ASSERT_EQ(lhs, bracket(d.times(f), e));
      if (t < 5) {
        const auto fd = matrix_on_truncated(d.times(f)), me = matrix_on_truncated(e);
        EXPECT_EQ(matrix_on_truncated(lhs), fd * me - me * fd);
      }
    }
  }
}

TEST(MatrixOnTruncated, Examples) {
  const Ring B = Ring::truncated_algebra(1, 2);
  const Field F = Field::prime(2);
  const auto del = Derivation::partial(B, 0);
  const auto xdel = del.times(Polynomial::variable(B, 0));
  EXPECT_TRUE(matrix_on_truncated(Derivation::zero(B)).is_zero());
  EXPECT_EQ(matrix_on_truncated(xdel), Matrix::from_rows(F, {{Elem{0}, Elem{0}}, {Elem{0}, Elem{1}}}));
  EXPECT_EQ(matrix_on_truncated(del), Matrix::from_rows(F, {{Elem{0}, Elem{1}}, {Elem{0}, Elem{0}}}));
}

TEST(MatrixOnTruncated, BracketIsCommutator) {
  for (auto [n, p] : kConfigs) {
    const Ring B = Ring::truncated_algebra(n, p);
    Rng rng(21, static_cast<std::uint64_t>(n * 10 + p));
    for (int t = 0; t < 10; ++t) {
      const auto d = random_derivation(B, rng), e = random_derivation(B, rng);
      const auto md = matrix_on_truncated(d), me = matrix_on_truncated(e);
      EXPECT_EQ(matrix_on_truncated(bracket(d, e)), md * me - me * md);
    }
  }
}

TEST(BuildWn, WittOneCharacteristicTwo) {
  const auto w = build_wn(1, 2);
  ASSERT_EQ(w.dim(), 2u);
  EXPECT_EQ(w.algebra.labels(), (std::vector<std::string>{"d1", "x1*d1"}));
  const auto& g = w.algebra;
  EXPECT_EQ(g.bracket(0, 1), g.unit(0));
  EXPECT_EQ(g.pmap(0), g.zero());
  EXPECT_EQ(g.pmap(1), g.unit(1));
  EXPECT_TRUE(verify_restricted(g).ok);
}

TEST(BuildWn, Dimensions) {
  EXPECT_EQ(build_wn(1, 3).dim(), 3u);
  EXPECT_EQ(build_wn(2, 2).dim(), 8u);
  EXPECT_EQ(build_wn(2, 3).dim(), 18u);
  EXPECT_EQ(build_wn(1, 7).dim(), 7u);
  EXPECT_EQ(build_wn(2, 2).algebra.labels(),
            (std::vector<std::string>{"d1", "d2", "x2*d1", "x2*d2", "x1*d1", "x1*d2", "x1*x2*d1", "x1*x2*d2"}));
}

TEST(BuildWn, BudgetExceeded) {
  EXPECT_THROW(build_wn(3, 5), BudgetExceeded);
  EXPECT_THROW(build_wn(5, 3), BudgetExceeded);
}

TEST(BuildWn, AllSupportedConfigsVerify) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{
           {1, 2}, {1, 3}, {1, 5}, {1, 7}, {2, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {6, 2}}) {
    const auto w = build_wn(n, p);
    EXPECT_EQ(w.dim(), static_cast<std::size_t>(n) * truncated_basis(n, p).size());
    EXPECT_TRUE(verify_restricted(w.algebra).ok) << "n=" << n << " p=" << p;
  }
}

TEST(BuildWn, TablesMatchDerivations) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {1, 5}}) {
    const auto w = build_wn(n, p);
    for (std::size_t i = 0; i < w.dim(); ++i) {
      EXPECT_EQ(w.element(w.algebra.pmap(i)), p_power(w.basis[i]));
      for (std::size_t j = 0; j < w.dim(); ++j) EXPECT_EQ(w.element(w.algebra.bracket(i, j)), bracket(w.basis[i], w.basis[j]));
    }
  }
}

TEST(VerifyRestricted, AbelianZeroPMapPasses) { EXPECT_TRUE(verify_restricted(RestrictedLieAlgebra(3, 4)).ok); }

TEST(VerifyRestricted, TamperedBracketFails) {
  auto g = build_wn(1, 2).algebra;
  g.set_bracket_entry(0, 1, g.unit(1));
  const auto v = verify_restricted(g);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.failure.empty());
}

TEST(VerifyRestricted, TamperedPMapFailsAgainstRealization) {
  auto g = build_wn(1, 3).algebra;
  g.set_pmap(0, g.unit(1));
  EXPECT_FALSE(verify_restricted(g).ok);
}

TEST(VerifyRestricted, JacobiViolationDetected) {
  RestrictedLieAlgebra g(2, 3);
  g.set_bracket(0, 1, g.unit(1));
  g.set_bracket(1, 2, g.unit(0));
  g.set_bracket(0, 2, g.unit(0));
  EXPECT_FALSE(verify_restricted(g).ok);
}

TEST(LieAlgebraText, RoundTrip) {
  for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}}) {
    const auto g = build_wn(n, p).algebra;
    const auto h = parse_lie_algebra(to_text(g));
    ASSERT_EQ(h.dim(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      EXPECT_EQ(h.pmap(i), g.pmap(i));
      for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(h.bracket(i, j), g.bracket(i, j));
    }
  }
}

TEST(LieAlgebraText, ParsesHandWrittenFile) {
  const auto g = parse_lie_algebra("p=3 dim=3\nbracket 1 2 -> 0,0,1\n# centre\npmap 3 -> 0,0,0\n");
  EXPECT_EQ(g.p(), 3);
  EXPECT_EQ(g.bracket(0, 1), g.unit(2));
  EXPECT_EQ(g.bracket(1, 0), (Vec{Elem{0}, Elem{0}, Elem{2}}));
  EXPECT_TRUE(verify_restricted(g).ok);
  EXPECT_THROW(parse_lie_algebra("p=4 dim=2\n"), std::invalid_argument);
  EXPECT_THROW(parse_lie_algebra("p=3 dim=2\nbracket 1 5 -> 1,0\n"), ParseError);
}

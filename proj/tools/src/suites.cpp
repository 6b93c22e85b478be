#include "suites.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "rlie/catalog.hpp"
#include "rlie/charpoly.hpp"
#include "rlie/invariants.hpp"
#include "rlie/sampling.hpp"

namespace rlie::cli {

namespace {

constexpr const char* kPowerAnchor = "(fD)^p = f^p D^p + (fD)^{p-1}(f) D";
constexpr const char* kBracketAnchor = "[fD, D'] = f [D, D'] - D'(f) D";
constexpr const char* kChiAnchor = "chi_D(t) = t^{p^n} + sum_{i<n} psi_i(D) t^{p^i}";
constexpr const char* kPsiInvAnchor = "psi_i are g-invariant";
constexpr const char* kGenAnchor = "A^{W_n} = A^(p)[psi_0, ..., psi_{n-1}]";
constexpr const char* kFreeAnchor = "free over A^(p) with basis f_1^{m_1}...f_n^{m_n}, 0 <= m_i < p";
constexpr const char* kCgAnchor = "c_g(g) = d - n";
constexpr const char* kStabAnchor = "dim g_D = n when psi_0(D) != 0";
constexpr const char* kIndexAnchor = "|G| = (G:G') |G'|, (G:G_x) = p^{codim g_x}";
constexpr const char* kInducedAnchor = "dim ind_{G'}^G V = (G:G') dim V";
constexpr const char* kShadowAnchor = "finite flat morphism of degree q(X)";
constexpr const char* kTorusAnchor = "u(g_x) semisimple iff g_x is a torus";
constexpr const char* kCounterAnchor = "A^G = k + kx^2; A is not free over A^G";
constexpr const char* kPremetAnchor = "sum_i (d_D psi_i)(D') D^{p^i} = -psi_0(D) D'";

using Suite = std::function<void(std::vector<CheckResult>&, std::uint64_t)>;

std::string cfg(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

void record(std::vector<CheckResult>& out, std::string check, std::string anchor, const std::function<std::string()>& body) {
  CheckResult r{std::move(check), std::move(anchor), false, {}};
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

void require(bool cond, const std::string& why) {
  if (!cond) throw std::runtime_error(why);
}

const std::vector<std::pair<int, int>> kHochschildConfigs{{1, 2}, {1, 3}, {2, 2}, {1, 5}};
const std::vector<std::pair<int, int>> kSymbolicConfigs{{1, 2}, {1, 3}, {2, 2}};

void hochschild(std::vector<CheckResult>& out, std::uint64_t seed) {
  for (std::size_t c = 0; c < kHochschildConfigs.size(); ++c) {
    const auto [n, p] = kHochschildConfigs[c];
    const Ring R = Ring::truncated_algebra(n, p);
    record(out, "hochschild-power " + cfg(n, p), kPowerAnchor, [&, n = n, p = p] {
      Rng rng(seed, 100 + c);
      for (int t = 0; t < 100; ++t) {
        const Polynomial f = random_truncated_element(R, rng);
        const Derivation d = random_derivation(R, rng);
        require(fd_power(f, d) == p_power(d.times(f)), "trial " + std::to_string(t) + " differs");
      }
      return std::string("100/100 equal");
    });
    record(out, "hochschild-bracket " + cfg(n, p), kBracketAnchor, [&, n = n, p = p] {
      Rng rng(seed, 200 + c);
      for (int t = 0; t < 100; ++t) {
        const Polynomial f = random_truncated_element(R, rng);
        const Derivation d = random_derivation(R, rng);
        const Derivation e = random_derivation(R, rng);
        require(fd_bracket(f, d, e) == bracket(d.times(f), e), "trial " + std::to_string(t) + " differs");
      }
      return std::string("100/100 equal");
    });
    record(out, "p-power-semilinear " + cfg(n, p), "(cD)^p = c^p D^p", [&, p = p] {
      Rng rng(seed, 300 + c);
      const Field F = Field::prime(p);
      for (int t = 0; t < 10; ++t) {
        const Derivation d = random_derivation(R, rng);
        const Derivation dp = p_power(d);
        for (int k = 0; k < p; ++k)
          require(p_power(d.scaled(k)) == dp.scaled(F.pow(Elem{static_cast<std::uint16_t>(k)}, static_cast<std::uint64_t>(p)).v),
                  "scalar " + std::to_string(k) + " fails");
      }
      return std::string("10 derivations x all scalars");
    });
  }
}

std::string degrees_of(const PsiInvariants& psi) {
  std::ostringstream os;
  os << psi.psi.size() << " psi of degrees";
  for (const auto& f : psi.psi) os << ' ' << f.degree();
  return os.str();
}

void charpoly_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  for (const auto& [n, p] : kSymbolicConfigs) {
    record(out, "chi-shape-symbolic " + cfg(n, p), kChiAnchor, [n = n, p = p] {
      const auto psi = char_poly_invariants_symbolic(n, p);
      require(psi.psi.size() == static_cast<std::size_t>(n), "wrong number of psi");
      return degrees_of(psi);
    });
  }
  const std::vector<std::tuple<int, int, int>> pointwise{{2, 2, 4}, {1, 5, 2}, {1, 7, 2}, {3, 2, 2}, {2, 3, 2}};
  for (std::size_t c = 0; c < pointwise.size(); ++c) {
    const auto [n, p, e] = pointwise[c];
    const Field F = Field::extension(p, e);
    record(out, "chi-shape-pointwise " + cfg(n, p) + " F_" + std::to_string(F.order()), kChiAnchor,
           [&, n = n, p = p] {
             const WnAlgebra w = build_wn(n, p);
             const bool symbolic = symbolic_in_default_budget(n, p);
             const PsiInvariants psi = symbolic ? char_poly_invariants_symbolic(n, p) : PsiInvariants{};
             Rng rng(seed, 400 + c);
             for (int t = 0; t < 100; ++t) {
               const auto d = random_vector(F, w.dim(), rng);
               const auto values = char_poly_invariants_at(w, F, d);
               if (symbolic)
                 for (int i = 0; i < n; ++i)
                   require(values[static_cast<std::size_t>(i)] == psi.psi[static_cast<std::size_t>(i)].evaluate(F, d),
                           "pointwise psi differs from symbolic psi");
             }
             return std::string(symbolic ? "100 points, agrees with symbolic psi" : "100 points");
           });
  }
  for (const auto& [n, p] : kSymbolicConfigs) {
    record(out, "psi-invariance " + cfg(n, p), kPsiInvAnchor, [n = n, p = p] {
      const auto psi = char_poly_invariants_symbolic(n, p);
      const auto action = adjoint_action(build_wn(n, p));
      for (std::size_t i = 0; i < psi.psi.size(); ++i)
        for (std::size_t j = 0; j < action.rho().size(); ++j)
          require(action.rho()[j](psi.psi[i]).is_zero(),
                  "rho(e_" + std::to_string(j + 1) + ") does not kill psi_" + std::to_string(i));
      return std::to_string(action.rho().size()) + " basis elements kill every psi";
    });
  }
}

void wn_invariants(std::vector<CheckResult>& out, std::uint64_t seed) {
  const std::vector<std::tuple<int, int, int>> gen{{1, 2, 6}, {1, 3, 6}, {2, 2, 4}};
  for (const auto& [n, p, D] : gen) {
    const auto psi = char_poly_invariants_symbolic(n, p);
    record(out, "generation " + cfg(n, p) + " D=" + std::to_string(D), kGenAnchor, [&, n = n, p = p, D = D] {
      const auto rep = check_generation(adjoint_action(build_wn(n, p)), psi.psi, D);
      std::ostringstream os;
      os << "dims";
      for (const auto& r : rep.rows) os << ' ' << r.dim_invariant << '/' << r.dim_generated;
      require(rep.generated(), "not generated: " + os.str());
      return os.str();
    });
    record(out, "freeness " + cfg(n, p) + " D=" + std::to_string(D), kFreeAnchor, [&, D = D] {
      const auto v = freeness_monomial_check(psi.ring, psi.psi, D);
      require(v.ok, v.failure);
      return std::string("products independent through degree ") + std::to_string(D);
    });
  }
  for (std::size_t c = 0; c < kSymbolicConfigs.size(); ++c) {
    const auto [n, p] = kSymbolicConfigs[c];
    record(out, "c_g " + cfg(n, p), kCgAnchor, [&, n = n, p = p] {
      const auto w = build_wn(n, p);
      const auto rep = estimate_c_g(adjoint_action(w), stream_seed(seed, 500 + c), 200, 4);
      const std::size_t expected = w.dim() - static_cast<std::size_t>(n);
      require(rep.estimate == expected,
              "estimate " + std::to_string(rep.estimate) + " != " + std::to_string(expected));
      return "c_g = " + std::to_string(rep.estimate) + " over 200 points of F_" + std::to_string(rep.witness.field.order());
    });
    record(out, "stabilizer-dim " + cfg(n, p), kStabAnchor, [&, n = n, p = p] {
      const auto w = build_wn(n, p);
      const auto action = adjoint_action(w);
      const Field F = Field::extension(p, 4);
      Rng rng(seed, 600 + c);
      int tested = 0;
      for (int t = 0; t < 200 && tested < 20; ++t) {
        const auto d = random_vector(F, w.dim(), rng);
        if (char_poly_invariants_at(w, F, d)[0].v == 0) continue;
        const auto st = stabilizer(action, RationalPoint{F, d});
        require(st.kernel.size() == static_cast<std::size_t>(n), "stabilizer of dimension " + std::to_string(st.kernel.size()));
        require(st.kernel == centralizer(w, F, d), "stabilizer differs from the centralizer");
        ++tested;
      }
      require(tested == 20, "too few points with psi_0 != 0");
      return std::string("20 points with psi_0 != 0");
    });
  }
}

void index_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  for (const auto& c : index_catalog()) {
    record(out, "index " + c.algebra + " " + c.description, kIndexAnchor, [&] {
      const auto g = catalog_algebra(c.algebra);
      const auto u = build_enveloping(g);
      const auto h = basis_from_labels(g, c.labels);
      const std::size_t index = subgroup_index(u, h);
      std::size_t uh = 1;
      for (std::size_t i = 0; i < h.size(); ++i) uh *= static_cast<std::size_t>(g.p());
      require(index * uh == u.dim(), "index * |u(h)| != |u(g)|");
      require(induced_dimension(u, h, 3) == 3 * index, "induced dimension mismatch");
      return std::to_string(index) + " * " + std::to_string(uh) + " = " + std::to_string(u.dim());
    });
  }
  record(out, "induced-dimension W:1:2 span{x1*d1}", kInducedAnchor, [] {
    const auto g = catalog_algebra("W:1:2");
    const auto u = build_enveloping(g);
    const auto h = basis_from_labels(g, {"x1*d1"});
    const auto d = induced_dimension(u, h, 1);
    require(d == 2 && hom_dimension(u, h, 1) == 2, "expected 2");
    return std::string("dim = 2");
  });
  record(out, "graded-freeness signline:3", kShadowAnchor, [&] {
    const auto a = catalog_group_action("signline:3");
    const auto rep = freeness_check(a, 5);
    const auto q = max_orbit_index(a, seed, 20, 1);
    require(rep.verdict == FreenessVerdict::free, "not free: " + rep.reason);
    require(rep.rank == q, "rank " + std::to_string(rep.rank) + " != q = " + std::to_string(q));
    return "free of rank " + std::to_string(rep.rank) + " = q";
  });
  record(out, "finite-freeness trivial-cubic:3", "A is free of rank 1 over A^G = A", [] {
    const auto rep = freeness_check(catalog_group_action("trivial-cubic:3"));
    require(rep.verdict == FreenessVerdict::free && rep.rank == 1, rep.reason);
    return std::string("free of rank 1");
  });
}

void torus_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  for (const auto& c : torus_catalog()) {
    record(out, "torus " + c.description, kTorusAnchor, [&] {
      const auto u = build_enveloping(c.g);
      const auto env = verify_enveloping(u, seed);
      require(env.ok, env.failure);
      const bool t = is_torus(c.g);
      const bool s = semisimplicity_oracle(u);
      require(t == s, "is_torus and the semisimplicity oracle disagree");
      require(t == c.expected_torus, "unexpected torus verdict");
      return std::string(t ? "torus, u semisimple" : "not a torus, u not semisimple");
    });
  }
  record(out, "regular-stabilizer-torus W:1:2", kTorusAnchor, [] {
    const auto w = build_wn(1, 2);
    const Field F = Field::prime(2);
    const auto st = stabilizer(adjoint_action(w), RationalPoint{F, {Elem{0}, Elem{1}}});
    const auto g = subalgebra(build_enveloping(w.algebra), st.kernel);
    require(st.codim == 1 && is_torus(g), "stabilizer of x1*d1 is not a torus");
    return std::string("g_D = span{x1*d1} is a torus");
  });
}

void counterexample_suite(std::vector<CheckResult>& out, std::uint64_t) {
  record(out, "counterexample cubic x -> -x p=3", kCounterAnchor, [] {
    const auto a = catalog_group_action("counterexample");
    const auto inv = constant_invariants(a).pieces.front();
    const Ring& R = a.ring();
    const std::vector<Polynomial> expected{Polynomial::constant(R, 1), Polynomial::variable(R, 0).pow(2)};
    require(inv.basis == expected, "A^G is not span{1, x^2}");
    const auto rep = freeness_check(a);
    require(rep.verdict == FreenessVerdict::not_free, "verdict " + to_string(rep.verdict));
    return "A^G = span{1, x1^2}; not free (" + rep.reason + ")";
  });
}

void premet_suite(std::vector<CheckResult>& out, std::uint64_t seed) {
  for (std::size_t c = 0; c < kSymbolicConfigs.size(); ++c) {
    const auto [n, p] = kSymbolicConfigs[c];
    record(out, "premet " + cfg(n, p), kPremetAnchor, [&, n = n, p = p] {
      const auto w = build_wn(n, p);
      const auto psi = char_poly_invariants_symbolic(n, p);
      const Field F = Field::extension(p, 4);
      Rng rng(seed, 700 + c);
      int pairs = 0;
      for (int t = 0; t < 2000 && pairs < 50; ++t) {
        const auto d = random_vector(F, w.dim(), rng);
        if (psi.psi[0].evaluate(F, d).v == 0) continue;
        const auto basis = centralizer(w, F, d);
        std::vector<Elem> e(w.dim());
        for (const auto& b : basis) {
          const Elem s = rng.element(F);
          for (std::size_t k = 0; k < e.size(); ++k) e[k] = F.add(e[k], F.mul(s, b[k]));
        }
        require(psi_differential(psi, F, d, e) == psi_differential(w, F, d, e),
                "symbolic and dual-number differentials differ");
        const auto v = premet_identity_check(w, F, d, e, &psi);
        require(v.ok, v.failure);
        ++pairs;
      }
      require(pairs == 50, "too few points with psi_0 != 0");
      return std::string("50/50 pairs over F_") + std::to_string(F.order());
    });
  }
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s{
      {"hochschild", hochschild},         {"charpoly", charpoly_suite},
      {"wn-invariants", wn_invariants},   {"index", index_suite},
      {"torus", torus_suite},             {"counterexample", counterexample_suite},
      {"premet", premet_suite},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [n, fn] : suites())
    if (name == "all" || name == n) {
      fn(out, seed);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "check\tanchor\tstatus\tdetail\n";
  for (const auto& r : results) os << r.check << '\t' << r.anchor << '\t' << (r.pass ? "pass" : "FAIL") << '\t' << r.detail << '\n';
  return os.str();
}

}  // namespace rlie::cli

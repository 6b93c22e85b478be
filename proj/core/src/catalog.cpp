#include "rlie/catalog.hpp"

#include <algorithm>

#include "rlie/errors.hpp"
#include "rlie/witt.hpp"

namespace rlie {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s, std::string_view name) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad catalog name '" + std::string(name) + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad catalog name '" + std::string(name) + "'");
  }
}

void check_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime) throw PreconditionError("unsupported characteristic " + std::to_string(p));
}

ConstantGroupAction sign_action(int p, bool cubic_quotient) {
  const Ring R = Ring::polynomial(1, p);
  std::vector<Substitution> gens{{Polynomial::variable(R, 0).scaled(-1)}};
  if (cubic_quotient) return ConstantGroupAction::on_quotient(R, {Monomial(std::vector<std::uint16_t>{3})}, std::move(gens));
  return ConstantGroupAction::on_polynomials(R, std::move(gens));
}

}  // namespace

RestrictedLieAlgebra torus_algebra(std::size_t m, int p) {
  check_prime(p);
  RestrictedLieAlgebra g(p, m);
  for (std::size_t i = 0; i < m; ++i) g.set_pmap(i, g.unit(i));
  return g;
}

RestrictedLieAlgebra nil_algebra(std::size_t m, int p) {
  check_prime(p);
  return RestrictedLieAlgebra(p, m);
}

RestrictedLieAlgebra swap_algebra(int p) {
  check_prime(p);
  RestrictedLieAlgebra g(p, 2);
  g.set_pmap(0, g.unit(1));
  g.set_pmap(1, g.unit(0));
  return g;
}

RestrictedLieAlgebra heisenberg_algebra(int p) {
  check_prime(p);
  RestrictedLieAlgebra g(p, 3);
  g.set_bracket(0, 1, g.unit(2));
  return g;
}

RestrictedLieAlgebra catalog_algebra(std::string_view name) {
  const auto parts = split(name, ':');
  if (parts.size() != 3) throw ParseError("unknown catalog algebra '" + std::string(name) + "'");
  const int a = parse_int(parts[1], name);
  const int p = parse_int(parts[2], name);
  if (a < 1) throw ParseError("bad catalog name '" + std::string(name) + "'");
  const auto m = static_cast<std::size_t>(a);
  if (parts[0] == "W") return build_wn(a, p).algebra;
  if (parts[0] == "torus") return torus_algebra(m, p);
  if (parts[0] == "nil") return nil_algebra(m, p);
  if (parts[0] == "swap" && a == 2) return swap_algebra(p);
  if (parts[0] == "heis" && a == 3) return heisenberg_algebra(p);
  throw ParseError("unknown catalog algebra '" + std::string(name) + "'");
}

LieAction catalog_action(std::string_view name) { return adjoint_action(catalog_algebra(name)); }

bool is_group_catalog_name(std::string_view name) {
  return name.starts_with("counterexample") || name.starts_with("signline:") || name.starts_with("trivial-cubic:");
}

ConstantGroupAction catalog_group_action(std::string_view name) {
  if (name == "counterexample") return sign_action(3, true);
  const auto parts = split(name, ':');
  if (parts.size() == 2) {
    const int p = parse_int(parts[1], name);
    check_prime(p);
    if (parts[0] == "signline") return sign_action(p, false);
    if (parts[0] == "trivial-cubic") {
      const Ring R = Ring::polynomial(1, p);
      return ConstantGroupAction::on_quotient(R, {Monomial(std::vector<std::uint16_t>{3})}, {});
    }
  }
  throw ParseError("unknown catalog group action '" + std::string(name) + "'");
}

std::vector<std::string> catalog_algebra_names() {
  return {"W:n:p", "torus:m:p", "nil:m:p", "swap:2:p", "heis:3:p"};
}

std::vector<std::string> catalog_group_names() { return {"counterexample", "signline:p", "trivial-cubic:p"}; }

std::vector<Vec> basis_from_labels(const RestrictedLieAlgebra& g, const std::vector<std::string>& labels) {
  std::vector<Vec> out;
  for (const auto& l : labels) {
    const auto it = std::find(g.labels().begin(), g.labels().end(), l);
    if (it == g.labels().end()) throw ParseError("no basis element labelled '" + l + "'");
    out.push_back(g.unit(static_cast<std::size_t>(it - g.labels().begin())));
  }
  return out;
}

std::vector<SubalgebraCase> index_catalog() {
  return {
      {"W:1:2", {"x1*d1"}, "toral line in W_1"},
      {"W:1:2", {"d1"}, "nilpotent line in W_1"},
      {"W:1:2", {"d1", "x1*d1"}, "all of W_1"},
      {"W:1:2", {}, "zero subalgebra of W_1"},
      {"W:2:2", {"x1*d1", "x2*d2"}, "diagonal torus of W_2"},
      {"W:2:2", {"d1", "d2"}, "translations in W_2"},
      {"W:2:2", {"d1", "d2", "x2*d1", "x2*d2", "x1*d1", "x1*d2"}, "affine part of W_2"},
      {"torus:2:2", {"e1"}, "coordinate line of a torus"},
      {"swap:2:2", {}, "zero subalgebra of the swap torus"},
      {"heis:3:2", {"e3"}, "centre of the Heisenberg algebra"},
      {"heis:3:2", {"e1", "e3"}, "abelian ideal of the Heisenberg algebra"},
      {"W:1:3", {"x1*d1"}, "toral line in W_1"},
      {"W:1:3", {"d1"}, "nilpotent line in W_1"},
      {"W:1:3", {"d1", "x1*d1"}, "non-abelian Borel part of W_1"},
      {"W:1:3", {"x1*d1", "x1^(2)*d1"}, "positive part of W_1"},
      {"heis:3:3", {"e3"}, "centre of the Heisenberg algebra"},
      {"nil:2:3", {"e1"}, "coordinate line of a nil algebra"},
  };
}

std::vector<TorusCase> torus_catalog() {
  auto sub = [](std::string_view name, const std::vector<std::string>& labels) {
    const auto g = catalog_algebra(name);
    return subalgebra(build_enveloping(g), basis_from_labels(g, labels));
  };
  return {
      {"torus:1:2", torus_algebra(1, 2), true},
      {"torus:2:3", torus_algebra(2, 3), true},
      {"swap:2:2", swap_algebra(2), true},
      {"swap:2:3", swap_algebra(3), true},
      {"span{x1*d1} in W:1:2", sub("W:1:2", {"x1*d1"}), true},
      {"span{x1*d1} in W:1:3", sub("W:1:3", {"x1*d1"}), true},
      {"span{x1*d1, x2*d2} in W:2:2", sub("W:2:2", {"x1*d1", "x2*d2"}), true},
      {"nil:1:2", nil_algebra(1, 2), false},
      {"nil:2:3", nil_algebra(2, 3), false},
      {"span{d1} in W:1:2", sub("W:1:2", {"d1"}), false},
      {"span{d1, x2*d2} in W:2:2", sub("W:2:2", {"d1", "x2*d2"}), false},
      {"W:1:2", catalog_algebra("W:1:2"), false},
      {"W:1:3", catalog_algebra("W:1:3"), false},
      {"heis:3:2", heisenberg_algebra(2), false},
  };
}

}  // namespace rlie

#include "rlie/constant_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rlie/errors.hpp"

namespace rlie {

namespace {

bool divides(const Monomial& r, const Monomial& m) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > m[i]) return false;
  return true;
}

Substitution identity_substitution(const Ring& ring) {
  Substitution s;
  for (int j = 0; j < ring.nvars; ++j) s.push_back(Polynomial::variable(ring, j));
  return s;
}

void check_shape(const Ring& ring, const std::vector<Substitution>& gens) {
  for (const auto& s : gens) {
    if (s.size() != static_cast<std::size_t>(ring.nvars)) throw DimensionMismatch("substitution has wrong number of images");
    for (const auto& f : s)
      if (!(f.ring() == ring)) throw DimensionMismatch("substitution image lives in a different ring");
  }
}

}  // namespace

ConstantGroupAction::ConstantGroupAction(Ring ring, std::vector<Monomial> relations, bool quotient,
                                         std::vector<Substitution> generators)
    : ring_(ring), relations_(std::move(relations)), quotient_(quotient) {
  check_shape(ring_, generators);
  for (auto& s : generators) {
    for (auto& f : s) f = reduce(f);
    generators_.push_back(std::move(s));
  }
  const Substitution id = identity_substitution(ring_);
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    Substitution power = generators_[k];
    std::size_t order = 1;
    while (power != id) {
      if (++order > kMaxGroupOrder)
        throw BudgetExceeded("generator " + std::to_string(k + 1) + " has order > " + std::to_string(kMaxGroupOrder) +
                             " or is not invertible");
      power = compose(power, generators_[k]);
    }
  }
  elements_.push_back(id);
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (const auto& g : generators_) {
      Substitution next = compose(elements_[i], g);
      if (std::find(elements_.begin(), elements_.end(), next) == elements_.end()) {
        if (elements_.size() >= kMaxGroupOrder)
          throw BudgetExceeded("group order exceeds " + std::to_string(kMaxGroupOrder));
        elements_.push_back(std::move(next));
      }
    }
}

ConstantGroupAction ConstantGroupAction::on_polynomials(Ring ring, std::vector<Substitution> generators) {
  if (ring.truncated) throw PreconditionError("polynomial target must be a polynomial ring");
  check_shape(ring, generators);
  for (const auto& s : generators)
    for (const auto& f : s)
      for (const auto& t : f.terms())
        if (t.mono.degree() != 1) throw PreconditionError("generator images on a polynomial target must be linear forms");
  return ConstantGroupAction(ring, {}, false, std::move(generators));
}

ConstantGroupAction ConstantGroupAction::on_quotient(Ring ring, std::vector<Monomial> relations,
                                                     std::vector<Substitution> generators) {
  if (ring.truncated) throw PreconditionError("quotient target is given over a polynomial ring");
  for (const auto& r : relations)
    if (r.size() != static_cast<std::size_t>(ring.nvars)) throw DimensionMismatch("relation has wrong variable count");
  for (const auto& r : relations)
    if (r.degree() == 0) throw PreconditionError("the relation 1 makes the quotient zero");
  for (int j = 0; j < ring.nvars; ++j) {
    bool bounded = false;
    for (const auto& r : relations)
      if (r[static_cast<std::size_t>(j)] > 0 && r.degree() == r[static_cast<std::size_t>(j)]) bounded = true;
    if (!bounded) throw PreconditionError("quotient is infinite-dimensional: no pure power of x" + std::to_string(j + 1));
  }
  ConstantGroupAction a(ring, std::move(relations), true, {});
  check_shape(ring, generators);
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (const auto& r : a.relations_)
      if (!a.reduce(Polynomial::monomial(ring, r).substitute(generators[k])).is_zero())
        throw PreconditionError("generator " + std::to_string(k + 1) + " does not preserve the relation ideal");
  return ConstantGroupAction(ring, a.relations_, true, std::move(generators));
}

std::vector<Monomial> ConstantGroupAction::standard_monomials() const {
  if (!quotient_) throw PreconditionError("polynomial target has no finite monomial basis");
  const auto n = static_cast<std::size_t>(ring_.nvars);
  std::vector<int> bound(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& r : relations_)
      if (r.degree() == r[j] && r[j] > 0 && (bound[j] == 0 || r[j] < bound[j])) bound[j] = r[j];
  std::vector<Monomial> out;
  std::vector<std::uint16_t> e(n, 0);
  while (true) {
    Monomial m(e);
    if (std::none_of(relations_.begin(), relations_.end(), [&](const Monomial& r) { return divides(r, m); }))
      out.push_back(m);
    std::size_t j = 0;
    while (j < n && ++e[j] >= bound[j]) e[j++] = 0;
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial ConstantGroupAction::reduce(const Polynomial& f) const {
  if (relations_.empty()) return f;
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (std::none_of(relations_.begin(), relations_.end(), [&](const Monomial& r) { return divides(r, t.mono); }))
      kept.push_back(t);
  return Polynomial::from_terms(ring_, std::move(kept));
}

Polynomial ConstantGroupAction::act(const Substitution& s, const Polynomial& f) const { return reduce(f.substitute(s)); }

Substitution ConstantGroupAction::compose(const Substitution& s, const Substitution& t) const {
  Substitution out;
  out.reserve(s.size());
  for (const auto& f : s) out.push_back(act(t, f));
  return out;
}

InvariantBasis constant_invariants(const ConstantGroupAction& action, int max_degree) {
  const Ring& R = action.ring();
  auto solve = [&](int degree, std::vector<Monomial> columns) {
    std::vector<Matrix> maps;
    for (const auto& s : action.generators()) {
      std::vector<Polynomial> images;
      for (const auto& m : columns) {
        const Polynomial x = Polynomial::monomial(R, m);
        images.push_back(action.act(s, x) - x);
      }
      maps.push_back(operator_matrix(R.p, images));
    }
    return graded_kernel(maps, R, degree, std::move(columns));
  };
  if (action.is_quotient()) {
    auto cols = action.standard_monomials();
    const int top = cols.back().degree();
    InvariantBasis out{R, top, true, {}};
    out.pieces.push_back(solve(top, std::move(cols)));
    return out;
  }
  if (max_degree < 0) throw PreconditionError("max degree must be >= 0");
  InvariantBasis out{R, max_degree, false, {}};
  for (int d = 0; d <= max_degree; ++d) {
    auto cols = monomials_of_degree(R.nvars, d);
    if (cols.size() > kMaxMonomialsPerDegree) throw BudgetExceeded("degree " + std::to_string(d) + " space is too large");
    out.pieces.push_back(solve(d, std::move(cols)));
  }
  return out;
}

std::string to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::free:
      return "free";
    case FreenessVerdict::not_free:
      return "not free";
    case FreenessVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

FreenessReport finite_freeness(const ConstantGroupAction& action) {
  const Ring& R = action.ring();
  const Field F = Field::prime(R.p);
  const auto cols = action.standard_monomials();
  const auto inv = constant_invariants(action).pieces.front();
  FreenessReport rep;
  rep.max_degree = cols.back().degree();
  rep.algebra_dims = {cols.size()};
  rep.invariant_dims = {inv.dim()};
  const std::size_t da = cols.size();
  const std::size_t dg = inv.dim();
  if (da % dg != 0) {
    rep.verdict = FreenessVerdict::not_free;
    rep.reason = "dim A = " + std::to_string(da) + " is not a multiple of dim A^G = " + std::to_string(dg);
    return rep;
  }
  std::vector<std::vector<Elem>> span;
  for (const auto& m : cols) {
    const Polynomial b = Polynomial::monomial(R, m);
    auto trial = span;
    for (const auto& f : inv.basis) trial.push_back(coordinates(action.reduce(f * b), cols));
    if (rank_of(F, trial, da) == trial.size()) {
      span = std::move(trial);
      rep.basis.push_back(b);
    }
    if (span.size() == da) break;
  }
  if (span.size() == da) {
    rep.verdict = FreenessVerdict::free;
    rep.rank = rep.basis.size();
    rep.reason = "explicit basis of " + std::to_string(rep.rank) + " monomials";
  } else {
    rep.basis.clear();
    rep.reason = "greedy monomial search found no basis over A^G";
  }
  return rep;
}

FreenessReport graded_freeness(const ConstantGroupAction& action, int max_degree) {
  const Ring& R = action.ring();
  const Field F = Field::prime(R.p);
  const auto inv = constant_invariants(action, max_degree);
  FreenessReport rep;
  rep.graded = true;
  rep.max_degree = max_degree;
  if (inv.pieces.front().dim() != 1) {
    rep.reason = "degree-0 invariants are not the constants";
    return rep;
  }
  for (int d = 0; d <= max_degree; ++d) {
    const auto cols = monomials_of_degree(R.nvars, d);
    rep.algebra_dims.push_back(cols.size());
    rep.invariant_dims.push_back(inv.pieces[static_cast<std::size_t>(d)].dim());
    std::vector<std::vector<Elem>> span;
    for (const auto& b : rep.basis) {
      const int db = b.degree();
      for (const auto& f : inv.pieces[static_cast<std::size_t>(d - db)].basis) span.push_back(coordinates(f * b, cols));
    }
    if (!span.empty() && rank_of(F, span, cols.size()) != span.size()) {
      rep.basis.clear();
      rep.reason = "products with the chosen basis are dependent in degree " + std::to_string(d);
      return rep;
    }
    for (const auto& m : cols) {
      if (span.size() == cols.size()) break;
      auto trial = span;
      trial.push_back(coordinates(Polynomial::monomial(R, m), cols));
      if (rank_of(F, trial, cols.size()) == trial.size()) {
        span = std::move(trial);
        rep.basis.push_back(Polynomial::monomial(R, m));
      }
    }
  }
  rep.verdict = FreenessVerdict::free;
  rep.rank = rep.basis.size();
  rep.reason = "homogeneous basis verified through degree " + std::to_string(max_degree);
  return rep;
}

}  // namespace

FreenessReport freeness_check(const ConstantGroupAction& action, int max_degree) {
  if (action.is_quotient()) return finite_freeness(action);
  if (max_degree < 0) throw PreconditionError("max degree must be >= 0");
  return graded_freeness(action, max_degree);
}

std::size_t max_orbit_index(const ConstantGroupAction& action, std::uint64_t seed, std::size_t samples, int e) {
  if (action.is_quotient()) throw PreconditionError("orbit index needs a polynomial target");
  const Field F = Field::extension(action.ring().p, e);
  std::size_t best = 1;
  for (const auto& x : extension_sample(F, seed, samples, static_cast<std::size_t>(action.ring().nvars))) {
    std::set<std::vector<Elem>> orbit;
    for (const auto& s : action.elements()) {
      std::vector<Elem> y;
      for (const auto& f : s) y.push_back(f.evaluate(F, x));
      orbit.insert(std::move(y));
    }
    best = std::max(best, orbit.size());
  }
  return best;
}

namespace {

std::size_t parse_index(const std::string& s, const std::string& line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 1) throw ParseError("bad index in '" + line + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError("bad index in '" + line + "'");
  }
}

}  // namespace

ConstantGroupAction parse_group_action(std::string_view text) {
  const auto lines = detail::split_lines(text);
  int p = 0;
  enum class Block { none, group, target } block = Block::none;
  std::vector<std::string> group_lines;
  std::vector<std::string> target_lines;
  for (const auto& raw : lines) {
    const std::string t = detail::trim(raw);
    if (t.empty() || t.front() == '#') continue;
    if (t.rfind("p=", 0) == 0) {
      try {
        p = std::stoi(t.substr(2));
      } catch (const std::logic_error&) {
        throw ParseError("bad header '" + t + "'");
      }
      continue;
    }
    if (t == "group") {
      block = Block::group;
    } else if (t == "target") {
      block = Block::target;
    } else if (block == Block::group) {
      group_lines.push_back(t);
    } else if (block == Block::target) {
      target_lines.push_back(t);
    } else {
      throw ParseError("line outside a block: '" + t + "'");
    }
  }
  if (!is_prime(p) || p > kMaxPrime) throw ParseError("missing or unsupported 'p=<p>' header");
  if (target_lines.empty()) throw ParseError("missing target block");
  std::istringstream head(target_lines.front());
  std::string kind;
  int n = -1;
  head >> kind >> n;
  if ((kind != "poly" && kind != "quotient") || head.fail() || n < 1 || n > 64)
    throw ParseError("expected 'poly N' or 'quotient N', got '" + target_lines.front() + "'");
  const Ring R = Ring::polynomial(n, p);
  std::vector<Monomial> relations;
  for (std::size_t i = 1; i < target_lines.size(); ++i) {
    const std::string& t = target_lines[i];
    if (kind != "quotient" || t.rfind("relation", 0) != 0) throw ParseError("unexpected target line '" + t + "'");
    const Polynomial r = parse_polynomial(t.substr(8), R);
    if (r.terms().size() != 1) throw ParseError("relations must be monomials: '" + t + "'");
    relations.push_back(r.terms().front().mono);
  }
  std::map<std::size_t, Substitution> gens;
  for (const auto& t : group_lines) {
    const auto colon = t.find(':');
    const auto arrow = t.find("->");
    if (t.rfind("sigma_", 0) != 0 || colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError("expected 'sigma_k : xj -> <polynomial>', got '" + t + "'");
    const std::size_t k = parse_index(detail::trim(t.substr(6, colon - 6)), t);
    std::string var = detail::trim(t.substr(colon + 1, arrow - colon - 1));
    if (var.empty() || var.front() != 'x') throw ParseError("expected a variable in '" + t + "'");
    var = var.substr(var.size() > 1 && var[1] == '_' ? 2 : 1);
    const std::size_t j = parse_index(var, t);
    if (j > static_cast<std::size_t>(n)) throw ParseError("variable out of range in '" + t + "'");
    auto it = gens.try_emplace(k, identity_substitution(R)).first;
    it->second[j - 1] = parse_polynomial(t.substr(arrow + 2), R);
  }
  std::vector<Substitution> generators;
  for (auto& [k, s] : gens) generators.push_back(std::move(s));
  if (kind == "poly") return ConstantGroupAction::on_polynomials(R, std::move(generators));
  return ConstantGroupAction::on_quotient(R, std::move(relations), std::move(generators));
}

std::string to_text(const ConstantGroupAction& action) {
  std::ostringstream os;
  os << "p=" << action.ring().p << "\ngroup\n";
  for (std::size_t k = 0; k < action.generators().size(); ++k)
    for (std::size_t j = 0; j < action.generators()[k].size(); ++j) {
      const auto& f = action.generators()[k][j];
      if (f == Polynomial::variable(action.ring(), static_cast<int>(j))) continue;
      os << "sigma_" << k + 1 << " : x" << j + 1 << " -> " << f.to_string() << '\n';
    }
  os << "target\n" << (action.is_quotient() ? "quotient " : "poly ") << action.ring().nvars << '\n';
  for (const auto& r : action.relations()) os << "relation " << Polynomial::monomial(action.ring(), r).to_string() << '\n';
  return os.str();
}

}  // namespace rlie

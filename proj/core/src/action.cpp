#include "rlie/action.hpp"

#include <sstream>

#include "rlie/errors.hpp"

namespace rlie {

std::string RationalPoint::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].v;
  return os.str();
}

LieAction::LieAction(RestrictedLieAlgebra g, Ring ring, std::vector<Derivation> rho, VarNames names)
    : g_(std::move(g)), ring_(ring), rho_(std::move(rho)), names_(std::move(names)) {
  if (ring_.truncated) throw PreconditionError("actions are on polynomial rings");
  if (ring_.p != g_.p()) throw DimensionMismatch("algebra and ring have different characteristics");
  if (rho_.size() != g_.dim()) throw DimensionMismatch("need one derivation per basis element");
  for (const auto& d : rho_)
    if (!(d.ring() == ring_)) throw DimensionMismatch("derivation acts on a different ring");

  auto combo = [&](const Vec& v) {
    Derivation d = Derivation::zero(ring_);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k].v != 0) d = d + rho_[k].scaled(v[k].v);
    return d;
  };
  const std::size_t m = g_.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!(bracket(rho_[i], rho_[j]) == combo(g_.bracket(i, j))))
        throw PreconditionError("rho is not a Lie homomorphism on (e" + std::to_string(i + 1) + ",e" +
                                std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < m; ++i)
    if (!(p_power(rho_[i]) == combo(g_.pmap(i))))
      throw PreconditionError("rho does not respect the p-map on e" + std::to_string(i + 1));
}

bool LieAction::preserves_degree() const {
  for (const auto& d : rho_)
    for (const auto& f : d.images())
      for (const auto& t : f.terms())
        if (t.mono.degree() != 1) return false;
  return true;
}

Matrix tangent_map(const LieAction& action, const RationalPoint& x) {
  if (x.field.characteristic() != action.ring().p) throw DimensionMismatch("point field has the wrong characteristic");
  if (x.coords.size() != action.nvars()) throw DimensionMismatch("point has the wrong dimension");
  const std::size_t m = action.rho().size();
  Matrix t(x.field, m, action.nvars());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < action.nvars(); ++i)
      t(j, i) = action.rho()[j].image(static_cast<int>(i)).evaluate(x.field, x.coords);
  return t;
}

StabilizerResult stabilizer(const LieAction& action, const RationalPoint& x) {
  const Matrix t = tangent_map(action, x);
  const auto raw = t.transposed().kernel();
  StabilizerResult r{x, {}, 0};
  if (!raw.empty()) {
    std::vector<std::size_t> piv;
    const Matrix red = Matrix::from_rows(x.field, raw).rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i) r.kernel.emplace_back(red.row(i).begin(), red.row(i).end());
  }
  r.codim = action.rho().size() - r.kernel.size();
  return r;
}

RegularityReport estimate_c_g(const LieAction& action, std::uint64_t seed, std::size_t samples, int e) {
  if (samples == 0) throw PreconditionError("estimate_c_g needs at least one sample");
  const Field F = Field::extension(action.ring().p, e);
  const auto pts = extension_sample(F, seed, samples, action.nvars());
  RegularityReport rep;
  rep.witness = RationalPoint{F, pts.front()};
  for (const auto& c : pts) {
    RationalPoint x{F, c};
    const std::size_t codim = tangent_map(action, x).rank();
    if (rep.codims.empty() || codim > rep.estimate) {
      rep.estimate = codim;
      rep.witness = x;
    }
    rep.points.push_back(std::move(x));
    rep.codims.push_back(codim);
  }
  return rep;
}

bool is_regular(const LieAction& action, const RationalPoint& x, std::size_t c) {
  return tangent_map(action, x).rank() == c;
}

LieAction adjoint_action(const RestrictedLieAlgebra& g) {
  const std::size_t m = g.dim();
  const Ring R = Ring::polynomial(static_cast<int>(m), g.p());
  std::vector<Derivation> rho;
  rho.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Polynomial> images(m, Polynomial(R));
    for (std::size_t l = 0; l < m; ++l) {
      const Vec& br = g.bracket(l, j);
      for (std::size_t k = 0; k < m; ++k)
        if (br[k].v != 0) images[k] += Polynomial::variable(R, static_cast<int>(l)).scaled(br[k].v);
    }
    rho.emplace_back(R, std::move(images));
  }
  return LieAction(g, R, std::move(rho), VarNames::xis());
}

LieAction adjoint_action(const WnAlgebra& w) { return adjoint_action(w.algebra); }

bool jacobian_independent(const std::vector<Polynomial>& fs, const RationalPoint& x) {
  if (fs.empty()) return true;
  const std::size_t n = x.coords.size();
  Matrix j(x.field, fs.size(), n);
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (static_cast<std::size_t>(fs[r].ring().nvars) != n) throw DimensionMismatch("polynomial and point disagree on dimension");
    for (std::size_t i = 0; i < n; ++i) j(r, i) = fs[r].partial(static_cast<int>(i)).evaluate(x.field, x.coords);
  }
  return j.rank() == fs.size();
}

LieAction parse_action(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t pos = 0;
  auto g = detail::parse_lie_algebra_lines(lines, pos);
  while (pos < lines.size() && detail::trim(lines[pos]).empty()) ++pos;
  if (pos >= lines.size()) throw ParseError("missing 'vars N' line");
  int nvars = -1;
  {
    std::istringstream in(detail::trim(lines[pos]));
    std::string kw;
    in >> kw >> nvars;
    if (kw != "vars" || in.fail() || nvars < 0 || nvars > 512) throw ParseError("expected 'vars N', got '" + lines[pos] + "'");
  }
  ++pos;
  const Ring R = Ring::polynomial(nvars, g.p());
  std::vector<std::vector<Polynomial>> images(g.dim(), std::vector<Polynomial>(static_cast<std::size_t>(nvars), Polynomial(R)));
  for (; pos < lines.size(); ++pos) {
    const std::string t = detail::trim(lines[pos]);
    if (t.empty() || t.front() == '#') continue;
    const auto colon = t.find(':');
    const auto arrow = t.find("->");
    if (t.rfind("rho", 0) != 0 || colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError("expected 'rho i : j -> <polynomial>', got '" + t + "'");
    long long i = 0;
    long long j = 0;
    try {
      i = std::stoll(detail::trim(t.substr(3, colon - 3)));
      j = std::stoll(detail::trim(t.substr(colon + 1, arrow - colon - 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad indices in '" + t + "'");
    }
    if (i < 1 || i > static_cast<long long>(g.dim()) || j < 1 || j > nvars) throw ParseError("index out of range in '" + t + "'");
    images[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = parse_polynomial(t.substr(arrow + 2), R);
  }
  std::vector<Derivation> rho;
  for (auto& im : images) rho.emplace_back(R, std::move(im));
  return LieAction(std::move(g), R, std::move(rho));
}

std::string to_text(const LieAction& action) {
  std::ostringstream os;
  os << to_text(action.algebra());
  os << "vars " << action.nvars() << '\n';
  for (std::size_t i = 0; i < action.rho().size(); ++i)
    for (std::size_t j = 0; j < action.nvars(); ++j) {
      const auto& f = action.rho()[i].image(static_cast<int>(j));
      if (!f.is_zero()) os << "rho " << i + 1 << " : " << j + 1 << " -> " << f.to_string() << '\n';
    }
  return os.str();
}

}  // namespace rlie

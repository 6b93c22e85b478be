#include "rlie/lie_algebra.hpp"

#include <cctype>
#include <sstream>

#include "rlie/errors.hpp"

namespace rlie {

RestrictedLieAlgebra::RestrictedLieAlgebra(int p, std::size_t dim, std::vector<std::string> labels)
    : p_(p), dim_(dim), field_(Field::prime(p)), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != dim) throw DimensionMismatch("label count differs from dimension");
  brackets_.assign(dim * dim, Vec(dim));
  pmaps_.assign(dim, Vec(dim));
}

void RestrictedLieAlgebra::set_bracket(std::size_t i, std::size_t j, Vec v) {
  if (v.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
  Vec neg(dim_);
  for (std::size_t k = 0; k < dim_; ++k) neg[k] = field_.neg(v[k]);
  brackets_.at(i * dim_ + j) = std::move(v);
  brackets_.at(j * dim_ + i) = std::move(neg);
}

void RestrictedLieAlgebra::set_bracket_entry(std::size_t i, std::size_t j, Vec v) {
  if (v.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
  brackets_.at(i * dim_ + j) = std::move(v);
}

void RestrictedLieAlgebra::set_pmap(std::size_t i, Vec v) {
  if (v.size() != dim_) throw DimensionMismatch("p-map value has wrong length");
  pmaps_.at(i) = std::move(v);
}

Vec RestrictedLieAlgebra::bracket_of(std::span<const Elem> a, std::span<const Elem> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("element has wrong length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].v == 0) continue;
      const Elem c = field_.mul(a[i], b[j]);
      const Vec& br = bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (br[k].v != 0) out[k] = field_.add(out[k], field_.mul(c, br[k]));
    }
  }
  return out;
}

bool RestrictedLieAlgebra::is_abelian() const {
  for (const auto& v : brackets_)
    for (auto x : v)
      if (x.v != 0) return false;
  return true;
}

Vec RestrictedLieAlgebra::unit(std::size_t i) const {
  Vec v(dim_);
  v.at(i) = Elem{1};
  return v;
}

void RestrictedLieAlgebra::attach_realization(std::vector<Derivation> r) {
  if (r.size() != dim_) throw DimensionMismatch("realization needs one derivation per basis element");
  realization_ = std::move(r);
}

Derivation RestrictedLieAlgebra::realize(std::span<const Elem> v) const {
  if (!realization_) throw PreconditionError("algebra has no realization by derivations");
  if (v.size() != dim_) throw DimensionMismatch("element has wrong length");
  Derivation d = Derivation::zero(realization_->front().ring());
  for (std::size_t i = 0; i < dim_; ++i)
    if (v[i].v != 0) d = d + (*realization_)[i].scaled(v[i].v);
  return d;
}

namespace {

std::string fmt_vec(const Vec& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k].v;
  return os.str();
}

}  // namespace

Verdict verify_restricted(const RestrictedLieAlgebra& g) {
  const std::size_t m = g.dim();
  const Field& F = g.field();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k)
      if (g.bracket(i, i)[k].v != 0) return Verdict::fail("antisymmetry: [e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) + "] != 0");
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (F.add(g.bracket(i, j)[k], g.bracket(j, i)[k]).v != 0)
          return Verdict::fail("antisymmetry: [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                               "] != -[e" + std::to_string(j + 1) + ",e" + std::to_string(i + 1) + "]");
  }
  using Sparse = std::vector<std::pair<std::size_t, Elem>>;
  std::vector<Sparse> sparse(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < m; ++c)
        if (g.bracket(i, j)[c].v != 0) sparse[i * m + j].emplace_back(c, g.bracket(i, j)[c]);
  Vec acc(m);
  std::vector<std::size_t> touched;
  // acc += [e_a, [e_b, e_c]]
  auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [l, x] : sparse[b * m + c])
      for (const auto& [r, y] : sparse[a * m + l]) {
        if (acc[r].v == 0) touched.push_back(r);
        acc[r] = F.add(acc[r], F.mul(x, y));
      }
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        bool zero = true;
        for (auto r : touched) {
          zero = zero && acc[r].v == 0;
          acc[r] = Elem{0};
        }
        touched.clear();
        if (!zero)
          return Verdict::fail("Jacobi identity fails on (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                               ",e" + std::to_string(k + 1) + ")");
      }
  if (const auto& real = g.realization()) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (!(bracket((*real)[i], (*real)[j]) == g.realize(g.bracket(i, j))))
          return Verdict::fail("realization: bracket of derivations e" + std::to_string(i + 1) + ",e" +
                               std::to_string(j + 1) + " disagrees with the table");
    for (std::size_t i = 0; i < m; ++i)
      if (!(p_power((*real)[i]) == g.realize(g.pmap(i))))
        return Verdict::fail("realization: p-th power of e" + std::to_string(i + 1) + " disagrees with the p-map table");
  }
  return Verdict::pass();
}

std::string to_text(const RestrictedLieAlgebra& g) {
  std::ostringstream os;
  os << "p=" << g.p() << " dim=" << g.dim() << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec& v = g.bracket(i, j);
      bool zero = true;
      for (auto x : v) zero = zero && x.v == 0;
      if (!zero) os << "bracket " << i + 1 << ' ' << j + 1 << " -> " << fmt_vec(v) << '\n';
    }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vec& v = g.pmap(i);
    bool zero = true;
    for (auto x : v) zero = zero && x.v == 0;
    if (!zero) os << "pmap " << i + 1 << " -> " << fmt_vec(v) << '\n';
  }
  return os.str();
}

namespace detail {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Vec parse_coords(std::string_view s, const Field& f, std::size_t dim) {
  Vec v;
  std::string cur;
  std::istringstream in{std::string(s)};
  while (std::getline(in, cur, ',')) {
    const std::string t = trim(cur);
    if (t.empty()) throw ParseError("empty coordinate in '" + std::string(s) + "'");
    long long x = 0;
    try {
      std::size_t used = 0;
      x = std::stoll(t, &used);
      if (used != t.size()) throw ParseError("bad coordinate '" + t + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad coordinate '" + t + "'");
    }
    v.push_back(f.from_int(x));
  }
  if (v.size() != dim) throw ParseError("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

namespace {

bool skippable(const std::string& t) { return t.empty() || t.front() == '#'; }

std::size_t parse_index(const std::string& tok, std::size_t dim) {
  long long i = 0;
  try {
    i = std::stoll(tok);
  } catch (const std::logic_error&) {
    throw ParseError("bad index '" + tok + "'");
  }
  if (i < 1 || i > static_cast<long long>(dim)) throw ParseError("index " + tok + " out of range");
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

RestrictedLieAlgebra parse_lie_algebra_lines(const std::vector<std::string>& lines, std::size_t& pos) {
  while (pos < lines.size() && skippable(trim(lines[pos]))) ++pos;
  if (pos >= lines.size()) throw ParseError("missing 'p=<p> dim=<m>' header");
  int p = 0;
  long long dim = -1;
  {
    std::istringstream in(trim(lines[pos]));
    std::string a;
    std::string b;
    in >> a >> b;
    if (a.rfind("p=", 0) != 0 || b.rfind("dim=", 0) != 0) throw ParseError("expected 'p=<p> dim=<m>' header");
    try {
      p = std::stoi(a.substr(2));
      dim = std::stoll(b.substr(4));
    } catch (const std::logic_error&) {
      throw ParseError("bad header '" + lines[pos] + "'");
    }
    if (!is_prime(p) || p > kMaxPrime) throw ParseError("unsupported characteristic in header");
    if (dim < 0 || dim > 512) throw ParseError("unsupported dimension in header");
  }
  ++pos;
  RestrictedLieAlgebra g(p, static_cast<std::size_t>(dim));
  for (; pos < lines.size(); ++pos) {
    const std::string t = trim(lines[pos]);
    if (skippable(t)) continue;
    const auto arrow = t.find("->");
    std::istringstream in(t.substr(0, arrow == std::string::npos ? t.size() : arrow));
    std::string kw;
    in >> kw;
    if (kw == "bracket") {
      if (arrow == std::string::npos) throw ParseError("missing '->' in '" + t + "'");
      std::string si;
      std::string sj;
      in >> si >> sj;
      const auto i = parse_index(si, g.dim());
      const auto j = parse_index(sj, g.dim());
      if (i >= j) throw ParseError("bracket entries must have i < j: '" + t + "'");
      g.set_bracket(i, j, parse_coords(t.substr(arrow + 2), g.field(), g.dim()));
    } else if (kw == "pmap") {
      if (arrow == std::string::npos) throw ParseError("missing '->' in '" + t + "'");
      std::string si;
      in >> si;
      g.set_pmap(parse_index(si, g.dim()), parse_coords(t.substr(arrow + 2), g.field(), g.dim()));
    } else {
      break;
    }
  }
  return g;
}

}  // namespace detail

RestrictedLieAlgebra parse_lie_algebra(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t pos = 0;
  auto g = detail::parse_lie_algebra_lines(lines, pos);
  for (; pos < lines.size(); ++pos) {
    const auto t = detail::trim(lines[pos]);
    if (!t.empty() && t.front() != '#') throw ParseError("unexpected line '" + t + "'");
  }
  return g;
}

}  // namespace rlie

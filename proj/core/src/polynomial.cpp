#include "rlie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "rlie/errors.hpp"

namespace rlie {

Ring Ring::polynomial(int nvars, int p) {
  if (!is_prime(p) || p > kMaxPrime) throw PreconditionError("unsupported characteristic " + std::to_string(p));
  return Ring{nvars, p, false};
}

Ring Ring::truncated_algebra(int nvars, int p) {
  if (!is_prime(p) || p > kMaxPrime) throw PreconditionError("unsupported characteristic " + std::to_string(p));
  return Ring{nvars, p, true};
}

Monomial::Monomial(std::vector<std::uint16_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.exps_.at(i) = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps_.size() != o.exps_.size()) throw DimensionMismatch("monomial variable counts differ");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] + o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r(*this);
  for (auto& e : r.exps_) e = static_cast<std::uint16_t>(e * k);
  r.degree_ = degree_ * k;
  return r;
}

bool Monomial::exceeds(int p) const {
  return std::any_of(exps_.begin(), exps_.end(), [p](auto e) { return e >= p; });
}

namespace {

void enumerate(int nvars, int d, int max_exp, std::size_t i, std::vector<std::uint16_t>& cur,
               std::vector<Monomial>& out) {
  if (i + 1 == static_cast<std::size_t>(nvars)) {
    if (max_exp > 0 && d >= max_exp) return;
    cur[i] = static_cast<std::uint16_t>(d);
    out.emplace_back(cur);
    return;
  }
  const int hi = max_exp > 0 ? std::min(d, max_exp - 1) : d;
  // ascending order: smaller leading exponent first
  for (int e = 0; e <= hi; ++e) {
    cur[i] = static_cast<std::uint16_t>(e);
    enumerate(nvars, d - e, max_exp, i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d, int max_exponent) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(std::vector<std::uint16_t>{});
    return out;
  }
  std::vector<std::uint16_t> cur(nvars, 0);
  enumerate(nvars, d, max_exponent, 0, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d, int max_exponent) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k, max_exponent);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

Coeff reduce(long long c, int p) { return static_cast<Coeff>(((c % p) + p) % p); }

void check_same(const Ring& a, const Ring& b) {
  if (a.nvars != b.nvars) throw DimensionMismatch("polynomials have different variable counts");
  if (a.p != b.p) throw DimensionMismatch("polynomials have different characteristics");
  if (a.truncated != b.truncated) throw DimensionMismatch("polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, long long c) {
  Polynomial f(ring);
  const Coeff r = reduce(c, ring.p);
  if (r != 0) f.terms_.push_back({Monomial(ring.nvars), r});
  return f;
}

Polynomial Polynomial::variable(Ring ring, int i) {
  if (i < 0 || i >= ring.nvars) throw DimensionMismatch("variable index out of range");
  return monomial(ring, Monomial::variable(ring.nvars, i), 1);
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, long long c) {
  std::vector<Term> t;
  t.push_back({std::move(m), reduce(c, ring.p)});
  return from_terms(ring, std::move(t));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial f(ring);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.size()) != ring.nvars) throw DimensionMismatch("monomial has wrong variable count");
    if (ring.truncated && t.mono.exceeds(ring.p)) continue;
    const Coeff c = reduce(t.coeff, ring.p);
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = static_cast<Coeff>((f.terms_.back().coeff + c) % ring.p);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c != 0) {
      f.terms_.push_back({std::move(t.mono), c});
    }
  }
  return f;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) { return t.mono < x; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : Coeff{0};
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Polynomial Polynomial::component(int d) const {
  Polynomial f(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) f.terms_.push_back(t);
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(ring_, o.ring_);
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      f.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      f.terms_.push_back(*b++);
    } else {
      const Coeff c = static_cast<Coeff>((a->coeff + b->coeff) % ring_.p);
      if (c != 0) f.terms_.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return f;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(ring_, o.ring_);
  if (terms_.empty() || o.terms_.empty()) return Polynomial(ring_);
  std::map<Monomial, unsigned> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.mono * b.mono;
      if (ring_.truncated && m.exceeds(ring_.p)) continue;
      auto& slot = acc[std::move(m)];
      slot = (slot + static_cast<unsigned>(a.coeff) * b.coeff) % static_cast<unsigned>(ring_.p);
    }
  Polynomial f(ring_);
  f.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) f.terms_.push_back({m, static_cast<Coeff>(c)});
  return f;
}

Polynomial Polynomial::scaled(long long c) const {
  const Coeff r = reduce(c, ring_.p);
  Polynomial f(ring_);
  if (r == 0) return f;
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.coeff = static_cast<Coeff>((t.coeff * r) % ring_.p);
  return f;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 0 || i >= ring_.nvars) throw DimensionMismatch("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.mono[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    const Coeff c = reduce(static_cast<long long>(t.coeff) * e, ring_.p);
    if (c == 0) continue;
    auto exps = t.mono.exponents();
    exps[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e - 1);
    out.push_back({Monomial(std::move(exps)), c});
  }
  return from_terms(ring_, std::move(out));
}

Elem Polynomial::evaluate(const Field& field, std::span<const Elem> point) const {
  if (field.characteristic() != ring_.p) throw DimensionMismatch("point field has a different characteristic");
  if (static_cast<int>(point.size()) != ring_.nvars) throw DimensionMismatch("point has wrong dimension");
  Elem sum{0};
  for (const auto& t : terms_) {
    Elem v = field.from_int(t.coeff);
    for (std::size_t i = 0; i < point.size() && v.v != 0; ++i)
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    sum = field.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_.nvars) throw DimensionMismatch("substitution needs one image per variable");
  if (images.empty()) return constant(ring_, terms_.empty() ? 0 : terms_.front().coeff);
  const Ring target = images.front().ring();
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto image_pow = [&](std::size_t i, int e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i)
      if (t.mono[i] != 0) term *= image_pow(i, t.mono[i]);
    result += term;
  }
  return result;
}

Polynomial Polynomial::in_ring(Ring ring) const {
  if (ring.nvars != ring_.nvars || ring.p != ring_.p) throw DimensionMismatch("incompatible ring");
  return from_terms(ring, terms_);
}

std::string Polynomial::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << static_cast<int>(it->coeff);
    for (std::size_t i = 0; i < it->mono.size(); ++i) {
      const int e = it->mono[i];
      if (e == 0) continue;
      os << '*' << names.prefix << (static_cast<int>(i) + names.offset);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

Polynomial frobenius_power(const Polynomial& f) {
  const int p = f.characteristic();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.mono.pow(p), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  return op == PolyOp::add ? a + b : a * b;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, Ring ring, const VarNames& names) : s_(s), ring_(ring), names_(names) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
      skip_ws();
    }
    while (true) {
      terms.push_back(term(sign));
      skip_ws();
      if (at_end()) break;
      const char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = c == '-' ? -1 : 1;
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(int sign) {
    long long coeff = sign;
    std::vector<std::uint16_t> exps(static_cast<std::size_t>(ring_.nvars), 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = (coeff * (number() % ring_.p)) % ring_.p;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const int v = variable();
        long long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          get();
          skip_ws();
          e = number();
        }
        exps[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(exps[static_cast<std::size_t>(v)] + e);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
    }
    return Term{Monomial(std::move(exps)), static_cast<Coeff>(((coeff % ring_.p) + ring_.p) % ring_.p)};
  }

  long long number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000'000) fail("number too large");
    }
    return v;
  }

  int variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) get();
    const std::string_view prefix = s_.substr(start, pos_ - start);
    if (prefix != names_.prefix) fail("unknown variable prefix '" + std::string(prefix) + "'");
    const long long idx = number() - names_.offset;
    if (idx < 0 || idx >= ring_.nvars) fail("variable index out of range");
    return static_cast<int>(idx);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg + " in \"" +
                     std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ring ring_;
  const VarNames& names_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Ring ring, const VarNames& names) {
  return Parser(text, ring, names).parse();
}

}  // namespace rlie

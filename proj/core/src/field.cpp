#include "rlie/field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "rlie/errors.hpp"

namespace rlie {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_prime(int p) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw BudgetExceeded("characteristic " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
}

// Remainder of a modulo monic b over F_p; both low-to-high.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

std::uint32_t ipow(std::uint32_t b, int e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> poly) {
  int deg = static_cast<int>(poly.size()) - 1;
  while (deg > 0 && poly[deg] % p == 0) --deg;
  if (deg < 1) return false;
  std::vector<int> f(poly.begin(), poly.begin() + deg + 1);
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::uint32_t count = ipow(p, d);
    for (std::uint32_t k = 0; k < count; ++k) {
      std::vector<int> g(d + 1);
      std::uint32_t t = k;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      g[d] = 1;
      // f need not be monic for the remainder test; scale it first.
      std::vector<int> fm = f;
      int inv_lead = 1;
      while ((inv_lead * f[deg]) % p != 1) ++inv_lead;
      for (int& c : fm) c = ((c * inv_lead) % p + p) % p;
      auto r = poly_rem(fm, g, p);
      bool zero = true;
      for (int c : r)
        if (c != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(int p) {
  check_prime(p);
  return FieldDescriptor{p, 1, {}};
}

FieldDescriptor FieldDescriptor::extension(int p, int e) {
  check_prime(p);
  if (e < 1) throw PreconditionError("extension degree must be >= 1");
  if (e == 1) return prime(p);
  if (std::pow(static_cast<double>(p), e) > kMaxFieldOrder)
    throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds " +
                         std::to_string(kMaxFieldOrder));
  const std::uint32_t count = ipow(p, e);
  for (std::uint32_t k = 0; k < count; ++k) {
    std::vector<int> m(e + 1);
    std::uint32_t t = k;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<int>(t % p);
      t /= p;
    }
    m[e] = 1;
    if (is_irreducible(p, m)) return FieldDescriptor{p, e, m};
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldDescriptor FieldDescriptor::with_modulus(int p, std::vector<int> modulus) {
  check_prime(p);
  if (modulus.size() < 3 || modulus.back() != 1)
    throw PreconditionError("modulus must be monic of degree >= 2");
  for (int& c : modulus) c = ((c % p) + p) % p;
  if (!is_irreducible(p, modulus)) throw PreconditionError("modulus is reducible over F_" + std::to_string(p));
  const int e = static_cast<int>(modulus.size()) - 1;
  if (std::pow(static_cast<double>(p), e) > kMaxFieldOrder) throw BudgetExceeded("field order exceeds budget");
  return FieldDescriptor{p, e, std::move(modulus)};
}

std::uint32_t FieldDescriptor::order() const { return ipow(static_cast<std::uint32_t>(p), e); }

namespace detail {

struct FieldTables {
  FieldDescriptor desc;
  std::uint32_t q = 0;
  std::vector<std::uint16_t> exp;  // length 2(q-1)
  std::vector<std::uint16_t> log;  // log[0] unused
  std::vector<std::uint16_t> add;  // q*q
  std::vector<std::uint16_t> neg;

  explicit FieldTables(FieldDescriptor d) : desc(std::move(d)), q(desc.order()) {
    const int p = desc.p;
    const int e = desc.e;
    auto digits = [&](std::uint32_t v) {
      std::vector<int> c(e);
      for (int i = 0; i < e; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
      }
      return c;
    };
    auto encode = [&](const std::vector<int>& c) {
      std::uint32_t v = 0;
      for (int i = e - 1; i >= 0; --i) v = v * p + static_cast<std::uint32_t>(c[i]);
      return v;
    };

    add.resize(static_cast<std::size_t>(q) * q);
    neg.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ca = digits(a);
      std::vector<int> cn(e);
      for (int i = 0; i < e; ++i) cn[i] = (p - ca[i]) % p;
      neg[a] = static_cast<std::uint16_t>(encode(cn));
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto cb = digits(b);
        std::vector<int> cs(e);
        for (int i = 0; i < e; ++i) cs[i] = (ca[i] + cb[i]) % p;
        add[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(encode(cs));
      }
    }

    auto mulpoly = [&](std::uint32_t a, std::uint32_t b) {
      const auto ca = digits(a);
      const auto cb = digits(b);
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      if (e > 1) prod = poly_rem(prod, desc.modulus, p);
      prod.resize(e, 0);
      return encode(prod);
    };

    log.assign(q, 0);
    exp.assign(2 * (q - 1), 0);
    for (std::uint32_t g = 1; g < q; ++g) {
      std::uint32_t x = 1;
      std::uint32_t order = 0;
      std::vector<std::uint16_t> powers;
      powers.reserve(q - 1);
      do {
        powers.push_back(static_cast<std::uint16_t>(x));
        x = mulpoly(x, g);
        ++order;
      } while (x != 1 && order < q);
      if (order == q - 1) {
        for (std::uint32_t i = 0; i < q - 1; ++i) {
          exp[i] = exp[i + q - 1] = powers[i];
          log[powers[i]] = static_cast<std::uint16_t>(i);
        }
        return;
      }
    }
    throw std::logic_error("no primitive element found");
  }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FieldTables> tables_for(const FieldDescriptor& d) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(d.p, d.modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const detail::FieldTables>(d);
  cache.emplace(key, t);
  return t;
}

}  // namespace

Field::Field(const FieldDescriptor& d) {
  check_prime(d.p);
  if (d.order() > kMaxFieldOrder) throw BudgetExceeded("field order exceeds budget");
  t_ = tables_for(d);
}

const FieldDescriptor& Field::descriptor() const { return t_->desc; }
int Field::characteristic() const { return t_->desc.p; }
int Field::degree() const { return t_->desc.e; }
std::uint32_t Field::order() const { return t_->q; }

Elem Field::from_int(long long c) const {
  const long long p = t_->desc.p;
  return Elem{static_cast<std::uint16_t>(((c % p) + p) % p)};
}

Elem Field::add(Elem a, Elem b) const { return Elem{t_->add[static_cast<std::size_t>(a.v) * t_->q + b.v]}; }
Elem Field::neg(Elem a) const { return Elem{t_->neg[a.v]}; }
Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return Elem{0};
  return Elem{t_->exp[t_->log[a.v] + t_->log[b.v]]};
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return Elem{t_->exp[(n - t_->log[a.v]) % n]};
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t n = t_->q - 1;
  return Elem{t_->exp[(static_cast<std::uint64_t>(t_->log[a.v]) * (k % n)) % n]};
}

std::vector<int> Field::coefficients(Elem a) const {
  std::vector<int> c(t_->desc.e);
  std::uint32_t v = a.v;
  for (auto& x : c) {
    x = static_cast<int>(v % t_->desc.p);
    v /= t_->desc.p;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != t_->desc.e) throw DimensionMismatch("coefficient vector has wrong length");
  std::uint32_t v = 0;
  const int p = t_->desc.p;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + static_cast<std::uint32_t>(((c[i] % p) + p) % p);
  return Elem{static_cast<std::uint16_t>(v)};
}

Elem Field::element(std::uint32_t index) const {
  if (index >= t_->q) throw std::out_of_range("field element index out of range");
  return Elem{static_cast<std::uint16_t>(index)};
}

std::string Field::to_string(Elem a) const { return std::to_string(a.v); }

bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_ || a.t_->desc == b.t_->desc; }

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer applied to the pair
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL));
}

std::vector<std::vector<Elem>> extension_sample(const Field& field, std::uint64_t seed, std::size_t count,
                                                std::size_t dim) {
  Rng rng(seed, 0x5a3b1e);
  std::vector<std::vector<Elem>> out(count, std::vector<Elem>(dim));
  for (auto& v : out)
    for (auto& x : v) x = rng.element(field);
  return out;
}

}  // namespace rlie

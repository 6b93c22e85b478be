#include "rlie/derivation.hpp"

#include "rlie/errors.hpp"

namespace rlie {

namespace {

void check_same(const Ring& a, const Ring& b) {
  if (!(a == b)) throw DimensionMismatch("derivations act on different rings");
}

}  // namespace

Derivation::Derivation(Ring ring) : ring_(ring), images_(static_cast<std::size_t>(ring.nvars), Polynomial(ring)) {}

Derivation::Derivation(Ring ring, std::vector<Polynomial> images) : ring_(ring), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != ring.nvars) throw DimensionMismatch("derivation needs one image per generator");
  for (auto& f : images_) {
    if (f.ring().nvars != ring.nvars || f.ring().p != ring.p) throw DimensionMismatch("derivation image in wrong ring");
    if (!(f.ring() == ring)) f = f.in_ring(ring);
  }
}

Derivation Derivation::partial(Ring ring, int i) {
  Derivation d(ring);
  d.images_.at(static_cast<std::size_t>(i)) = Polynomial::constant(ring, 1);
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& f : images_)
    if (!f.is_zero()) return false;
  return true;
}

Polynomial Derivation::operator()(const Polynomial& f) const {
  check_same(ring_, f.ring());
  Polynomial out(ring_);
  for (int i = 0; i < ring_.nvars; ++i) {
    const auto& img = images_[static_cast<std::size_t>(i)];
    if (img.is_zero()) continue;
    const Polynomial df = f.partial(i);
    if (!df.is_zero()) out += df * img;
  }
  return out;
}

Derivation Derivation::operator+(const Derivation& o) const {
  check_same(ring_, o.ring_);
  Derivation r(*this);
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] += o.images_[i];
  return r;
}

Derivation Derivation::operator-(const Derivation& o) const {
  check_same(ring_, o.ring_);
  Derivation r(*this);
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] -= o.images_[i];
  return r;
}

Derivation Derivation::scaled(long long c) const {
  Derivation r(*this);
  for (auto& f : r.images_) f = f.scaled(c);
  return r;
}

Derivation Derivation::times(const Polynomial& f) const {
  check_same(ring_, f.ring());
  Derivation r(*this);
  for (auto& g : r.images_) g = f * g;
  return r;
}

Polynomial apply(const Derivation& d, const Polynomial& f) { return d(f); }

Polynomial apply_power(const Derivation& d, const Polynomial& f, int k) {
  Polynomial g = f;
  for (int i = 0; i < k && !g.is_zero(); ++i) g = d(g);
  return g;
}

Derivation bracket(const Derivation& d, const Derivation& e) {
  check_same(d.ring(), e.ring());
  std::vector<Polynomial> images;
  images.reserve(d.images().size());
  for (std::size_t i = 0; i < d.images().size(); ++i) images.push_back(d(e.images()[i]) - e(d.images()[i]));
  return Derivation(d.ring(), std::move(images));
}

Derivation p_power(const Derivation& d) {
  const int p = d.ring().p;
  std::vector<Polynomial> images;
  images.reserve(d.images().size());
  for (int i = 0; i < d.ring().nvars; ++i)
    images.push_back(apply_power(d, Polynomial::variable(d.ring(), i), p));
  return Derivation(d.ring(), std::move(images));
}

Derivation fd_bracket(const Polynomial& f, const Derivation& d, const Derivation& e) {
  check_same(d.ring(), e.ring());
  return bracket(d, e).times(f) - d.times(e(f));
}

Derivation fd_power(const Polynomial& f, const Derivation& d) {
  check_same(d.ring(), f.ring());
  const int p = d.ring().p;
  const Derivation fd = d.times(f);
  const Polynomial tail = apply_power(fd, f, p - 1);
  return p_power(d).times(frobenius_power(f)) + d.times(tail);
}

}  // namespace rlie

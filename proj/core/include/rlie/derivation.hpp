#pragma once

#include <vector>

#include "rlie/polynomial.hpp"

namespace rlie {

/// A derivation of F_p[x_1..x_N] (or of the truncated algebra), stored by
/// the images of the generators. The value on an arbitrary element follows
/// from the Leibniz rule: D(f) = sum_i (d f / d x_i) * D(x_i).
class Derivation {
 public:
  explicit Derivation(Ring ring);
  Derivation(Ring ring, std::vector<Polynomial> images);

  static Derivation zero(Ring ring) { return Derivation(ring); }
  /// The coordinate derivation d/dx_i.
  static Derivation partial(Ring ring, int i);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  Polynomial operator()(const Polynomial& f) const;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  Derivation scaled(long long c) const;
  /// The derivation f * D.
  Derivation times(const Polynomial& f) const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  Ring ring_;
  std::vector<Polynomial> images_;
};

Polynomial apply(const Derivation& d, const Polynomial& f);
/// D applied k times to f.
Polynomial apply_power(const Derivation& d, const Polynomial& f, int k);

/// [D, E] = D E - E D, given by x_i -> D(E(x_i)) - E(D(x_i)).
Derivation bracket(const Derivation& d, const Derivation& e);
/// The derivation D^p (p-fold composition), x_i -> D^p(x_i).
Derivation p_power(const Derivation& d);

/// f [D, E] - E(f) D, which equals [fD, E].
Derivation fd_bracket(const Polynomial& f, const Derivation& d, const Derivation& e);
/// f^p D^p + (fD)^{p-1}(f) D, which equals (fD)^p.
Derivation fd_power(const Polynomial& f, const Derivation& d);

}  // namespace rlie

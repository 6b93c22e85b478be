#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlie/field.hpp"

namespace rlie {

using Coeff = std::uint8_t;

/// The ambient ring of a polynomial: F_p[x_1..x_N], or the truncated
/// algebra F_p[x_1..x_N]/(x_i^p) when `truncated` is set.
struct Ring {
  int nvars = 0;
  int p = 2;
  bool truncated = false;

  static Ring polynomial(int nvars, int p);
  static Ring truncated_algebra(int nvars, int p);

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then the exponent of x_1, then x_2, and so on.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  int degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int k) const;
  /// True when some exponent is >= p (the monomial vanishes in the truncated algebra).
  bool exceeds(int p) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

/// All monomials of total degree d in n variables, ascending graded-lex order.
/// With `max_exponent` > 0 each exponent is restricted to < max_exponent.
std::vector<Monomial> monomials_of_degree(int nvars, int d, int max_exponent = 0);
/// All monomials of degree <= d, ascending.
std::vector<Monomial> monomials_up_to_degree(int nvars, int d, int max_exponent = 0);

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Variable naming for the text format. Variable i (0-based) prints as
/// prefix + (i + offset): "x1", "x2", ... by default; W_n coordinates use "xi_0", "xi_1", ...
struct VarNames {
  std::string prefix = "x";
  int offset = 1;

  static VarNames xs() { return {}; }
  static VarNames xis() { return {"xi_", 0}; }
};

/// Sparse polynomial over F_p. Terms are kept in ascending graded-lex order
/// with no zero coefficients, so equality is term-wise.
class Polynomial {
 public:
  explicit Polynomial(Ring ring = {}) : ring_(ring) {}

  static Polynomial constant(Ring ring, long long c);
  static Polynomial variable(Ring ring, int i);
  static Polynomial monomial(Ring ring, Monomial m, long long c = 1);
  /// Sums duplicate monomials, drops zeros and (in truncated rings) terms with an exponent >= p.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  int characteristic() const { return ring_.p; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Monomial& m) const;
  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Degree-d homogeneous component.
  Polynomial component(int d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(long long c) const;
  Polynomial pow(int k) const;

  /// Formal partial derivative with respect to variable i.
  Polynomial partial(int i) const;
  /// Value at a point whose coordinates lie in an extension of F_p.
  Elem evaluate(const Field& field, std::span<const Elem> point) const;
  /// Replaces x_i by images[i]; the result lives in the images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Same terms viewed in another ring with the same variable count and characteristic.
  Polynomial in_ring(Ring ring) const;

  std::string to_string(const VarNames& names = VarNames::xs()) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// f^p. Over F_p this is sum c * m^p; exponents become multiples of p.
Polynomial frobenius_power(const Polynomial& f);

/// Sum or product of two polynomials in the same ring.
enum class PolyOp { add, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// Parses the canonical text format; accepts '+'/'-' separators, optional
/// coefficients and arbitrary whitespace. Coefficients are reduced mod p.
Polynomial parse_polynomial(std::string_view text, Ring ring, const VarNames& names = VarNames::xs());

}  // namespace rlie

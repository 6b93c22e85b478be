#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace rlie {

inline constexpr int kMaxPrime = 7;
inline constexpr std::uint32_t kMaxFieldOrder = 2401;  // 7^4

/// An element of a finite field F_{p^e}, encoded as the base-p integer
/// sum_i c_i p^i of its coordinates c_i in the power basis 1, a, a^2, ...
/// Elements of the prime field F_p are therefore encoded as 0..p-1.
struct Elem {
  std::uint16_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

bool is_prime(int n);

/// The ground field data: characteristic, extension degree and, for e > 1,
/// the monic irreducible modulus (coefficients low to high, length e + 1).
struct FieldDescriptor {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;

  static FieldDescriptor prime(int p);
  /// Lexicographically smallest monic irreducible of degree e, comparing the
  /// non-leading coefficients from the top one down.
  static FieldDescriptor extension(int p, int e);
  /// Throws PreconditionError unless the modulus is monic of degree >= 2 and irreducible.
  static FieldDescriptor with_modulus(int p, std::vector<int> modulus);

  std::uint32_t order() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Trial division by every monic polynomial of degree 1..deg/2 over F_p.
bool is_irreducible(int p, std::span<const int> poly);

namespace detail {
struct FieldTables;
}

/// Arithmetic context for F_{p^e}. Cheap to copy; the log/antilog and
/// addition tables are built once per descriptor and shared immutably.
class Field {
 public:
  /// F_2.
  Field() : Field(FieldDescriptor{}) {}
  explicit Field(const FieldDescriptor& d);

  static Field prime(int p) { return Field(FieldDescriptor::prime(p)); }
  static Field extension(int p, int e) { return Field(FieldDescriptor::extension(p, e)); }

  const FieldDescriptor& descriptor() const;
  int characteristic() const;
  int degree() const;
  std::uint32_t order() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer under Z -> F_p -> F_{p^e}.
  Elem from_int(long long c) const;
  bool in_prime_field(Elem a) const { return a.v < characteristic(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const int> c) const;
  Elem element(std::uint32_t index) const;

  std::string to_string(Elem a) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  std::shared_ptr<const detail::FieldTables> t_;
};

/// Derives an independent 64-bit seed for stream `stream` of a run seeded with `seed`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic generator used by every sampler in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(stream_seed(seed, stream)) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  Elem element(const Field& f) { return f.element(static_cast<std::uint32_t>(below(f.order()))); }

 private:
  std::mt19937_64 engine_;
};

/// `count` pseudo-random coordinate vectors of length `dim` over the field;
/// identical (field, seed, count, dim) always yields the identical list.
std::vector<std::vector<Elem>> extension_sample(const Field& field, std::uint64_t seed, std::size_t count,
                                                std::size_t dim);

}  // namespace rlie

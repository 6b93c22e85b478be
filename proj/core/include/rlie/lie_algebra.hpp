#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlie/derivation.hpp"
#include "rlie/field.hpp"

namespace rlie {

/// Coordinates of an element of a finite-dimensional algebra over F_p.
using Vec = std::vector<Elem>;

/// Outcome of a structural check; `failure` names the first violated identity.
struct Verdict {
  bool ok = true;
  std::string failure;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// A restricted Lie algebra over F_p given by structure constants: the
/// bracket of each ordered pair of basis elements and the p-map value on
/// each basis element. Optionally carries a faithful realization by
/// derivations (basis element i acts as realization()[i]).
class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra(int p, std::size_t dim, std::vector<std::string> labels = {});

  int p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim_ + j]; }
  const Vec& pmap(std::size_t i) const { return pmaps_.at(i); }
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, Vec v);
  /// Sets only the (i, j) entry; lets callers build (or tamper with) raw tables.
  void set_bracket_entry(std::size_t i, std::size_t j, Vec v);
  void set_pmap(std::size_t i, Vec v);

  /// Bilinear extension of the bracket table.
  Vec bracket_of(std::span<const Elem> a, std::span<const Elem> b) const;
  bool is_abelian() const;

  Vec zero() const { return Vec(dim_); }
  Vec unit(std::size_t i) const;

  const std::optional<std::vector<Derivation>>& realization() const { return realization_; }
  void attach_realization(std::vector<Derivation> r);
  /// Derivation realizing the element with coordinates `v` (requires a realization).
  Derivation realize(std::span<const Elem> v) const;

 private:
  int p_;
  std::size_t dim_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Vec> brackets_;
  std::vector<Vec> pmaps_;
  std::optional<std::vector<Derivation>> realization_;
};

/// Antisymmetry, Jacobi on all basis triples and, when a realization is
/// attached, agreement of the tables with brackets and p-th powers of the
/// realizing derivations. The abstract p-map is otherwise taken as given.
Verdict verify_restricted(const RestrictedLieAlgebra& g);

/// Text format: "p=<p> dim=<m>", then "bracket i j -> c_1,...,c_m" for i < j
/// and "pmap i -> c_1,...,c_m" (1-based indices, omitted entries are zero).
std::string to_text(const RestrictedLieAlgebra& g);
RestrictedLieAlgebra parse_lie_algebra(std::string_view text);

namespace detail {
/// Line-oriented parser shared with the action file format. Consumes lines
/// from `pos` until a line it does not recognise; blank and '#' lines are skipped.
RestrictedLieAlgebra parse_lie_algebra_lines(const std::vector<std::string>& lines, std::size_t& pos);
std::vector<std::string> split_lines(std::string_view text);
std::string trim(std::string_view s);
Vec parse_coords(std::string_view s, const Field& f, std::size_t dim);
}  // namespace detail

}  // namespace rlie

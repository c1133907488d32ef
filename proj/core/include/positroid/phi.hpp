#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/matroid.hpp"

namespace positroid {

/// A monomial in variables indexed by sink labels. Canonical form: only
/// positive exponents, variables ascending.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }

  int exponent(int var) const;
  int degree() const;
  bool is_one() const { return factors_.empty(); }
  /// Variables with positive exponent, ascending.
  std::vector<int> support() const;
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial times(int var, int power = 1) const;
  /// Absent when the variable does not divide this monomial.
  std::optional<Monomial> divided_by(int var) const;
  bool divides(const Monomial& other) const;

  /// "x3^2*x5" with variables ascending; "1" for the empty product.
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;  // (variable, exponent > 0)
};

/// Degree first, then lexicographic on the factor list: the order used
/// for every rendered monomial list.
bool degree_lex_less(const Monomial& a, const Monomial& b);

/// A set of monomials, optionally carrying the basis each one came from
/// (a bijection whenever the map that produced it is injective).
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(const std::vector<Monomial>& monomials);

  void insert(const Monomial& m, std::optional<LabelSet> source = std::nullopt);
  void remove(const Monomial& m) { entries_.erase(m); }
  bool contains(const Monomial& m) const { return entries_.count(m) > 0; }
  std::optional<LabelSet> source_of(const Monomial& m) const;
  int size() const { return static_cast<int>(entries_.size()); }

  /// Monomials in (degree, lex) order.
  std::vector<Monomial> sorted() const;
  const std::map<Monomial, std::optional<LabelSet>>& entries() const { return entries_; }

 private:
  std::map<Monomial, std::optional<LabelSet>> entries_;
};

/// T_k^B: passive elements of b whose minimal containing path is the pair
/// into k and whose source swap (b minus the element plus the freed
/// source) is again a basis. Throws NotASink when k is not a sink of b.
LabelSet t_set(const Positroid& m, LabelSet b, int k);

/// The defining rule: each sink contributes its own variable, each
/// passive element of b within B0 contributes the variable of the sink of
/// its minimal containing path. Throws LemmaViolation if a passive
/// element has no containing path.
Monomial phi_direct(const Positroid& m, LabelSet b);

/// The product formula: exponent of x_k is |T_k^B| + 1 for each sink k.
/// Must agree with phi_direct everywhere.
Monomial phi_product(const Positroid& m, LabelSet b);

/// Applies phi_direct to every basis, asserting injectivity (throws
/// InjectivityViolation with the colliding pair otherwise) and recording
/// the basis behind each monomial.
MonomialSet phi_image(const Positroid& m);

}  // namespace positroid

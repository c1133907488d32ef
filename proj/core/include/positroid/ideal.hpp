#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/phi.hpp"

namespace positroid {

/// Verdict over a monomial set: divisibility closure, purity, and the
/// degree counts, compared against an h-vector when one is supplied.
struct IdealReport {
  bool order_ideal = false;
  std::vector<std::pair<Monomial, int>> missing_divisors;  // (member, variable)
  bool pure = false;
  std::vector<Monomial> maximal;  // (degree, lex) order
  std::vector<std::int64_t> o_sequence;
  bool matches_h_vector = false;
};

/// Closure under division by each single variable (sufficient by
/// induction). Witnesses are (member, variable) pairs whose quotient is
/// missing.
std::pair<bool, std::vector<std::pair<Monomial, int>>> is_order_ideal(const MonomialSet& x);

/// Maximal monomials under divisibility within the set; pure iff they
/// all share one degree.
std::pair<bool, std::vector<Monomial>> purity(const MonomialSet& x);

/// Monomial counts by degree 0..max.
std::vector<std::int64_t> o_sequence(const MonomialSet& x);

IdealReport ideal_report(const MonomialSet& x, const HVector& h);

/// The basis whose monomial is phi(b) / x_var, built constructively: when
/// T_var is empty the path into var is removed, otherwise its source is
/// swapped for the smallest element of T_var; any exponents that rise on
/// enclosing variables are shed recursively, innermost first. Throws
/// NotDivisible when x_var does not divide phi(b) and LemmaViolation if
/// the construction fails to certify.
LabelSet divide_witness(const Positroid& m, LabelSet b, int var);

/// Counts how often the constructive move failed to certify and the
/// image-search fallback was used; the verification sweep requires zero.
struct WitnessStats {
  std::int64_t augment_fallbacks = 0;
};

/// Absent iff b has no active element (its monomial already has maximal
/// degree). Otherwise a basis whose monomial is a strict multiple of
/// phi(b), built from the largest active element by adding or rerouting
/// one path; candidates are validated by basis membership, with a
/// logged fallback to the minimal strict multiple in the image.
std::optional<LabelSet> augment_witness(const Positroid& m, LabelSet b,
                                        WitnessStats* stats = nullptr);

/// DOT digraph of the divisibility order: nodes are monomials (labelled
/// with their source basis when known), edges are covering relations
/// M -> M * x_k with both ends in the set. Node order is deterministic.
std::string hasse_dot(const MonomialSet& x);

}  // namespace positroid

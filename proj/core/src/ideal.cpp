#include "positroid/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "positroid/errors.hpp"

namespace positroid {

std::pair<bool, std::vector<std::pair<Monomial, int>>> is_order_ideal(const MonomialSet& x) {
  std::vector<std::pair<Monomial, int>> missing;
  for (const Monomial& m : x.sorted())
    for (int v : m.support())
      if (!x.contains(*m.divided_by(v))) missing.emplace_back(m, v);
  return {missing.empty(), missing};
}

std::pair<bool, std::vector<Monomial>> purity(const MonomialSet& x) {
  std::vector<Monomial> members = x.sorted();
  std::vector<Monomial> maximal;
  for (const Monomial& m : members) {
    bool is_maximal = true;
    for (const Monomial& other : members)
      if (other != m && m.divides(other)) {
        is_maximal = false;
        break;
      }
    if (is_maximal) maximal.push_back(m);
  }
  bool pure = true;
  for (const Monomial& m : maximal) pure = pure && m.degree() == maximal.front().degree();
  return {pure, maximal};
}

std::vector<std::int64_t> o_sequence(const MonomialSet& x) {
  int max_degree = -1;
  for (const auto& [m, src] : x.entries()) max_degree = std::max(max_degree, m.degree());
  std::vector<std::int64_t> counts(max_degree + 1, 0);
  for (const auto& [m, src] : x.entries()) ++counts[m.degree()];
  return counts;
}

IdealReport ideal_report(const MonomialSet& x, const HVector& h) {
  IdealReport report;
  std::tie(report.order_ideal, report.missing_divisors) = is_order_ideal(x);
  std::tie(report.pure, report.maximal) = purity(x);
  report.o_sequence = o_sequence(x);
  HVector o(report.o_sequence.begin(), report.o_sequence.end());
  report.matches_h_vector = trim_trailing_zeros(o) == trim_trailing_zeros(h);
  return report;
}

namespace {

constexpr int kWitnessDepthLimit = 1024;

LabelSet divide_step(const Positroid& m, LabelSet b, int var, int depth) {
  if (depth > kWitnessDepthLimit)
    throw LemmaViolation("division witness recursion exceeded its depth limit");
  Monomial from = phi_direct(m, b);
  auto target = from.divided_by(var);
  if (!target)
    throw NotDivisible("x" + std::to_string(var) + " does not divide phi(" + b.to_string() +
                       ") = " + from.to_string());

  MatchingRep rep = matching_rep(m.b0(), b);
  const MatchingPair* pair = rep.with_sink(var);
  LabelSet t = t_set(m, b, var);
  LabelSet next =
      t.empty() ? b.without(var).with(pair->source) : b.without(t.min()).with(pair->source);
  if (!m.contains(next))
    throw LemmaViolation("division step from " + b.to_string() + " by x" + std::to_string(var) +
                         " left the basis set");

  // Shed any exponents that rose on enclosing variables, innermost first.
  while (true) {
    Monomial got = phi_direct(m, next);
    if (got == *target) return next;
    MatchingRep next_rep = matching_rep(m.b0(), next);
    int pick = 0, pick_depth = -1;
    for (int v : got.support()) {
      int excess = got.exponent(v) - target->exponent(v);
      if (excess <= 0) continue;
      int d = next_rep.nesting_depth(v);
      if (d > pick_depth) {
        pick = v;
        pick_depth = d;
      }
    }
    if (pick == 0 || !target->divides(got))
      throw LemmaViolation("division step from " + b.to_string() + " by x" + std::to_string(var) +
                           " reached " + got.to_string() + " which cannot be shed to " +
                           target->to_string());
    next = divide_step(m, next, pick, depth + 1);
  }
}

const MatchingPair* pair_with_source(const MatchingRep& rep, int s) {
  for (const MatchingPair& p : rep.pairs)
    if (p.source == s) return &p;
  return nullptr;
}

}  // namespace

LabelSet divide_witness(const Positroid& m, LabelSet b, int var) {
  if (!m.contains(b)) throw NotABasis("not a basis: " + b.to_string());
  return divide_step(m, b, var, 0);
}

std::optional<LabelSet> augment_witness(const Positroid& m, LabelSet b, WitnessStats* stats) {
  if (!m.contains(b)) throw NotABasis("not a basis: " + b.to_string());
  LabelSet passive = passive_elements(m, b);
  LabelSet active = b - passive;
  if (active.empty()) return std::nullopt;

  int a = active.max();
  Monomial from = phi_direct(m, b);
  MatchingRep rep = matching_rep(m.b0(), b);

  auto certifies = [&](LabelSet candidate) {
    if (!m.contains(candidate)) return false;
    Monomial to = phi_direct(m, candidate);
    return from.divides(to) && from != to;
  };

  // Primary move: the case analysis on whether a+1 is a source label.
  // Candidates are never trusted, only validated by basis membership.
  std::optional<LabelSet> primary;
  if (!m.b0().contains(a + 1)) {
    if (!b.contains(a + 1)) primary = b.without(a).with(a + 1);
  } else if (!b.contains(a + 1)) {
    const MatchingPair* through = pair_with_source(rep, a + 1);
    LabelSet reachable = m.graph().reachable_sinks(a);
    if (through && !reachable.empty()) {
      int nearest = reachable.min();
      if (nearest <= through->sink) {
        primary = b.without(a).with(a + 1);
      } else if (const MatchingPair* occupied = rep.with_sink(nearest)) {
        primary = b.without(a).with(occupied->source);
      } else {
        primary = b.without(a).with(nearest);
      }
    }
  }
  if (primary && certifies(*primary)) return primary;

  // Remaining moves from the same vocabulary: swap a for some other open
  // source (rerouting that source's path to start at a) or for another
  // sink reachable from a (adding a path out of a). The minimal-sink
  // choice above can collide with an existing path, e.g. basis {1,3,6}
  // of the diagram (.*./..*/**), where adding 1->5 blocks the path 4->6
  // but rerouting it to 1->6 works.
  LabelSet pool = (m.b0() - b) | (m.graph().reachable_sinks(a) - b);
  for (int y : pool) {
    if (y == a) continue;
    LabelSet candidate = b.without(a).with(y);
    if (certifies(candidate)) return candidate;
  }

  // Fallback: minimal strict multiple in the image.
  if (stats) ++stats->augment_fallbacks;
  std::optional<LabelSet> best;
  std::optional<Monomial> best_monomial;
  for (LabelSet other : m.bases()) {
    Monomial to = phi_direct(m, other);
    if (!from.divides(to) || from == to) continue;
    if (!best_monomial || degree_lex_less(to, *best_monomial)) {
      best = other;
      best_monomial = to;
    }
  }
  if (!best)
    throw LemmaViolation("basis " + b.to_string() +
                         " has an active element but no strict multiple exists in the image");
  return best;
}

std::string hasse_dot(const MonomialSet& x) {
  std::vector<Monomial> nodes = x.sorted();
  std::set<int> variables;
  for (const Monomial& m : nodes)
    for (int v : m.support()) variables.insert(v);

  std::ostringstream dot;
  dot << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    dot << "  m" << i << " [label=\"" << nodes[i].to_string();
    if (auto src = x.source_of(nodes[i])) dot << "\\n" << src->to_string();
    dot << "\"];\n";
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (int v : variables) {
      Monomial up = nodes[i].times(v);
      auto it = std::find(nodes.begin(), nodes.end(), up);
      if (it != nodes.end())
        dot << "  m" << i << " -> m" << (it - nodes.begin()) << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace positroid

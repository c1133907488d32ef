#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "positroid/labels.hpp"
#include "positroid/network.hpp"

namespace positroid {

/// h-vector entries h_0..h_r; trailing zeros are kept so the length is
/// always rank + 1.
using HVector = std::vector<std::int64_t>;

/// Drops trailing zeros (used when comparing across a rank change, e.g.
/// before and after coloop contraction).
HVector trim_trailing_zeros(HVector h);

/// A positroid materialized as its full basis set, together with the
/// network it came from. Bases are stored in lexicographic order of their
/// ascending label vectors; b0 is the lexicographic minimum.
class Positroid {
 public:
  Positroid(LeGraph graph, std::vector<LabelSet> bases);

  int n() const { return graph_.n; }
  LabelSet b0() const { return graph_.sources; }
  int rank() const { return b0().size(); }
  const std::vector<LabelSet>& bases() const { return bases_; }
  const LeGraph& graph() const { return graph_; }
  bool contains(LabelSet b) const { return index_.count(b.bits()) > 0; }

 private:
  LeGraph graph_;
  std::vector<LabelSet> bases_;
  std::unordered_set<std::uint64_t> index_;
};

/// Iterates all rank-subsets of the ground set and keeps those accepted
/// by the flow decision procedure.
Positroid enumerate_bases(const LeGraph& g);

/// One path of a matching representation, as the interval (source, sink).
struct MatchingPair {
  int source = 0;
  int sink = 0;
  bool contains(int x) const { return source < x && x < sink; }
  auto operator<=>(const MatchingPair&) const = default;
};

/// The unique non-crossing pairing of B0 \ B with B \ B0: intervals are
/// pairwise nested or disjoint. Realized by every path family of a basis.
struct MatchingRep {
  std::vector<MatchingPair> pairs;  // sorted by source

  const MatchingPair* with_sink(int k) const;
  /// Number of pairs strictly containing the interval of the pair into k,
  /// plus one: the length of the longest nesting chain with k at the
  /// bottom.
  int nesting_depth(int k) const;
};

/// Single left-to-right scan with a stack of open sources. Throws
/// BadCardinality when |b| != |b0| and UnmatchedSink when a sink appears
/// with no open source.
MatchingRep matching_rep(LabelSet b0, LabelSet b);

/// The innermost pair whose interval strictly contains x (all containing
/// intervals are totally nested, so "innermost" is the one with maximal
/// source). Absent when no interval contains x.
std::optional<MatchingPair> minimal_containing_path(const MatchingRep& rep, int x);

/// Elements x of b for which some smaller j outside b gives a basis
/// b \ x + j. Throws NotABasis.
LabelSet passive_elements(const Positroid& m, LabelSet b);

/// h_i = number of bases with exactly i passive elements.
HVector h_vector_activity(const Positroid& m);

/// f_c = number of independent sets of cardinality c (subsets of bases).
std::vector<std::int64_t> f_vector(const Positroid& m);

/// The h-vector obtained from the f-vector by expanding
/// sum_c f_c (x-1)^(r-c) in powers of x. Independent of the activity
/// route; the two must agree.
HVector h_from_f(const Positroid& m);

}  // namespace positroid

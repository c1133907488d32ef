#include "positroid/matroid.hpp"

#include <algorithm>
#include <string>

#include "positroid/errors.hpp"

namespace positroid {

HVector trim_trailing_zeros(HVector h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

Positroid::Positroid(LeGraph graph, std::vector<LabelSet> bases)
    : graph_(std::move(graph)), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end(), label_lex_less);
  for (LabelSet b : bases_) index_.insert(b.bits());
}

namespace {

// All size-k subsets of [1..n] in lexicographic order of label vectors.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    LabelSet s;
    for (int x : pick) s.insert(x);
    fn(s);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Positroid enumerate_bases(const LeGraph& g) {
  std::vector<LabelSet> bases;
  int rank = g.sources.size();
  if (rank == 0) {
    bases.push_back(LabelSet());
  } else {
    for_each_subset(g.n, rank, [&](LabelSet s) {
      if (is_basis(g, s)) bases.push_back(s);
    });
  }
  return Positroid(g, std::move(bases));
}

const MatchingPair* MatchingRep::with_sink(int k) const {
  for (const MatchingPair& p : pairs)
    if (p.sink == k) return &p;
  return nullptr;
}

int MatchingRep::nesting_depth(int k) const {
  const MatchingPair* inner = with_sink(k);
  if (!inner) return 0;
  int depth = 1;
  for (const MatchingPair& p : pairs)
    if (p.source < inner->source && p.sink > inner->sink) ++depth;
  return depth;
}

MatchingRep matching_rep(LabelSet b0, LabelSet b) {
  if (b.size() != b0.size())
    throw BadCardinality("set has size " + std::to_string(b.size()) + ", expected " +
                         std::to_string(b0.size()));
  MatchingRep rep;
  std::vector<int> open;
  int n = std::max(b0.max(), b.max());
  for (int x = 1; x <= n; ++x) {
    if (b0.contains(x) && !b.contains(x)) {
      open.push_back(x);
    } else if (b.contains(x) && !b0.contains(x)) {
      if (open.empty())
        throw UnmatchedSink("sink " + std::to_string(x) + " has no open source");
      rep.pairs.push_back({open.back(), x});
      open.pop_back();
    }
  }
  std::sort(rep.pairs.begin(), rep.pairs.end());
  return rep;
}

std::optional<MatchingPair> minimal_containing_path(const MatchingRep& rep, int x) {
  std::optional<MatchingPair> best;
  for (const MatchingPair& p : rep.pairs)
    if (p.contains(x) && (!best || p.source > best->source)) best = p;
  return best;
}

LabelSet passive_elements(const Positroid& m, LabelSet b) {
  if (!m.contains(b)) throw NotABasis("not a basis: " + b.to_string());
  LabelSet passive;
  for (int x : b) {
    for (int j = 1; j < x; ++j) {
      if (b.contains(j)) continue;
      if (m.contains(b.without(x).with(j))) {
        passive.insert(x);
        break;
      }
    }
  }
  return passive;
}

HVector h_vector_activity(const Positroid& m) {
  HVector h(m.rank() + 1, 0);
  for (LabelSet b : m.bases()) ++h[passive_elements(m, b).size()];
  return h;
}

std::vector<std::int64_t> f_vector(const Positroid& m) {
  // Downward closure of the basis set over subset masks.
  int r = m.rank();
  std::vector<std::int64_t> f(r + 1, 0);
  std::unordered_set<std::uint64_t> independent;
  std::vector<std::uint64_t> frontier;
  for (LabelSet b : m.bases()) {
    if (independent.insert(b.bits()).second) frontier.push_back(b.bits());
  }
  while (!frontier.empty()) {
    std::uint64_t mask = frontier.back();
    frontier.pop_back();
    ++f[__builtin_popcountll(mask)];
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      std::uint64_t sub = mask & ~(rest & (~rest + 1));
      if (independent.insert(sub).second) frontier.push_back(sub);
    }
  }
  return f;
}

HVector h_from_f(const Positroid& m) {
  std::vector<std::int64_t> f = f_vector(m);
  int r = m.rank();
  // h_i = sum_{c<=i} f_c * C(r-c, i-c) * (-1)^(i-c)
  std::vector<std::vector<std::int64_t>> choose(r + 1, std::vector<std::int64_t>(r + 1, 0));
  for (int a = 0; a <= r; ++a) {
    choose[a][0] = 1;
    for (int k = 1; k <= a; ++k) choose[a][k] = choose[a - 1][k - 1] + choose[a - 1][k];
  }
  HVector h(r + 1, 0);
  for (int i = 0; i <= r; ++i)
    for (int c = 0; c <= i; ++c)
      h[i] += f[c] * choose[r - c][i - c] * ((i - c) % 2 ? -1 : 1);
  return h;
}

}  // namespace positroid

#include "positroid/verify.hpp"

#include <algorithm>
#include <set>

#include "positroid/errors.hpp"
#include "positroid/ideal.hpp"
#include "positroid/matroid.hpp"
#include "positroid/network.hpp"
#include "positroid/phi.hpp"

namespace positroid {

std::optional<Mutant> mutant_from_name(const std::string& name) {
  if (name == "none") return Mutant::none;
  if (name == "phi-unfiltered") return Mutant::phi_unfiltered;
  return std::nullopt;
}

SweepCounters& SweepCounters::operator+=(const SweepCounters& o) {
  diagrams += o.diagrams;
  loop_free += o.loop_free;
  random_samples += o.random_samples;
  subsets += o.subsets;
  families += o.families;
  divide_checks += o.divide_checks;
  augment_checks += o.augment_checks;
  return *this;
}

namespace {

Monomial phi_under(const Positroid& p, LabelSet b, Mutant mutant) {
  if (mutant == Mutant::none) return phi_direct(p, b);
  // phi without the passivity filter.
  MatchingRep rep = matching_rep(p.b0(), b);
  Monomial result;
  for (int k : b - p.b0()) result = result.times(k);
  for (int x : b & p.b0())
    if (auto innermost = minimal_containing_path(rep, x)) result = result.times(innermost->sink);
  return result;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
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

struct Checker {
  const LeDiagram& d;
  Mutant mutant;
  SweepCounters& counters;
  std::vector<std::string> violations;

  void fail(const std::string& tag, const std::string& detail) {
    violations.push_back("[" + tag + "] " + detail);
  }

  void run() {
    ++counters.diagrams;
    const int n = d.ground_set_size();
    BoundaryLabels labels = boundary_labels(d);

    // Labeling: rows and columns jointly a bijection onto [n], rows
    // ascending top to bottom, columns ascending right to left.
    {
      LabelSet all;
      for (int label : labels.row_labels) all.insert(label);
      for (int label : labels.col_labels) all.insert(label);
      if (all != LabelSet::range(n) || all.size() != n)
        fail("labels", "row and column labels are not a bijection onto [n]");
      for (size_t i = 1; i < labels.row_labels.size(); ++i)
        if (labels.row_labels[i] <= labels.row_labels[i - 1])
          fail("labels", "row labels not increasing top to bottom");
      for (size_t i = 1; i < labels.col_labels.size(); ++i)
        if (labels.col_labels[i] >= labels.col_labels[i - 1])
          fail("labels", "column labels not increasing right to left");
    }

    LeGraph g = build_graph(d);
    if (!check_planarity(g).empty())
      fail("planarity", "crossing in the graph of a valid diagram");

    Positroid p = enumerate_bases(g);

    // Grid-level loops/coloops against the basis-level definitions.
    auto [loops, coloops] = loops_coloops(d);
    {
      LabelSet in_some, in_all = LabelSet::range(n);
      for (LabelSet b : p.bases()) {
        in_some = in_some | b;
        in_all = in_all & b;
      }
      if (loops != LabelSet::range(n) - in_some)
        fail("loops-coloops", "empty columns " + loops.to_string() +
                                  " != elements in no basis " +
                                  (LabelSet::range(n) - in_some).to_string());
      if (coloops != in_all)
        fail("loops-coloops", "empty rows " + coloops.to_string() +
                                  " != elements in every basis " + in_all.to_string());
    }

    // Basic h-vector facts plus the f-vector oracle.
    HVector h = h_vector_activity(p);
    {
      std::int64_t total = 0;
      for (auto v : h) total += v;
      if (total != static_cast<std::int64_t>(p.bases().size()))
        fail("h-basic", "h entries do not sum to the basis count");
      if (!p.bases().empty() && h[0] != 1) fail("h-basic", "h_0 != 1");
      if (p.bases().empty() || p.bases().front() != p.b0())
        fail("h-basic", "b0 is not the lexicographic minimum of the basis set");
      if (h_from_f(p) != h)
        fail("h-from-f", "activity h-vector disagrees with the f-vector transform");
    }

    // Reduction: h-vector invariant, bases carried over by the relabeling.
    {
      auto [reduced, map] = reduce(d);
      Positroid rp = enumerate_bases(build_graph(reduced));
      if (trim_trailing_zeros(h_vector_activity(rp)) != trim_trailing_zeros(h))
        fail("reduce-h", "h-vector changed under reduction");
      std::set<std::uint64_t> expected;
      for (LabelSet b : p.bases()) expected.insert(map.apply(b - coloops).bits());
      std::set<std::uint64_t> got;
      for (LabelSet b : rp.bases()) got.insert(b.bits());
      if (expected != got) fail("reduce-bases", "bases do not correspond under reduction");
    }

    // Flow decision vs exhaustive backtracking, on every subset.
    const int rank = p.rank();
    for_each_subset_of_size(n, rank, [&](LabelSet s) {
      ++counters.subsets;
      auto families = enumerate_families(g, s);
      counters.families += static_cast<std::int64_t>(families.size());
      bool flow = is_basis(g, s);
      if (flow != !families.empty()) {
        fail("oracle-basis", "flow and backtracking disagree on " + s.to_string());
        return;
      }
      if (families.empty()) return;
      MatchingRep rep = matching_rep(p.b0(), s);
      std::vector<std::pair<int, int>> expected;
      for (const MatchingPair& pair : rep.pairs) expected.emplace_back(pair.source, pair.sink);
      for (const PathFamily& family : families) {
        if (family.represented(p.b0()) != s)
          fail("represents", "family does not represent " + s.to_string());
        for (const Path& path : family.paths)
          if (path.source >= path.sink)
            fail("path-direction", "path source not below sink in " + s.to_string());
        if (family.pairing() != expected)
          fail("unique-pairing", "family of " + s.to_string() + " realizes a different pairing");
      }
    });

    if (!loops.empty() || !coloops.empty()) return;
    ++counters.loop_free;

    // Per-basis activity and monomial facts.
    MonomialSet image;
    bool collision = false;
    for (LabelSet b : p.bases()) {
      LabelSet passive = passive_elements(p, b);
      if (!(b - p.b0()).subset_of(passive))
        fail("auto-passive", "a sink element of " + b.to_string() + " is not passive");
      MatchingRep rep = matching_rep(p.b0(), b);
      for (int x : (b & p.b0()) & passive)
        if (!minimal_containing_path(rep, x))
          fail("containment", "passive " + std::to_string(x) + " of " + b.to_string() +
                                  " lies in no path interval");
      Monomial mono = phi_under(p, b, mutant);
      if (mono != phi_product(p, b))
        fail("phi-direct-product", "defining rule and product formula disagree on " +
                                       b.to_string());
      if (mono.degree() != passive.size())
        fail("phi-degree", "deg phi(" + b.to_string() + ") != passivity");
      LabelSet support;
      for (int v : mono.support()) support.insert(v);
      if (support != b - p.b0())
        fail("phi-support", "support of phi(" + b.to_string() + ") is not b \\ b0");
      if (image.contains(mono)) {
        fail("phi-injective", "phi collides on " + b.to_string());
        collision = true;
      }
      image.insert(mono, b);
    }

    // Degree distribution and the ideal verdicts.
    {
      std::vector<std::int64_t> degrees = o_sequence(image);
      HVector dist(degrees.begin(), degrees.end());
      if (collision || trim_trailing_zeros(dist) != trim_trailing_zeros(h))
        fail("phi-degree-dist", "degree distribution of the image != h-vector");
      auto [ideal, witnesses] = is_order_ideal(image);
      if (!ideal)
        fail("order-ideal", "image not closed under division, e.g. " +
                                witnesses.front().first.to_string() + " / x" +
                                std::to_string(witnesses.front().second));
      auto [pure, maximal] = purity(image);
      if (!pure) fail("purity", "maximal monomials of mixed degree");
      for (const Monomial& m : maximal)
        if (m.degree() != rank) {
          fail("purity", "maximal monomial " + m.to_string() + " has degree != rank");
          break;
        }
    }

    // Constructive witnesses against the search oracles.
    if (mutant == Mutant::none) {
      for (LabelSet b : p.bases()) {
        Monomial from = phi_direct(p, b);
        for (int v : from.support()) {
          ++counters.divide_checks;
          try {
            LabelSet w = divide_witness(p, b, v);
            Monomial target = *from.divided_by(v);
            if (phi_direct(p, w) != target)
              fail("divide-witness", "divide(" + b.to_string() + ", x" + std::to_string(v) +
                                         ") does not certify");
            auto inverse = image.source_of(target);
            if (!inverse || *inverse != w)
              fail("divide-witness", "divide(" + b.to_string() + ", x" + std::to_string(v) +
                                         ") disagrees with the image inverse");
          } catch (const Error& e) {
            fail("divide-witness", e.what());
          }
        }
      }
      for (LabelSet b : p.bases()) {
        ++counters.augment_checks;
        try {
          WitnessStats stats;
          auto w = augment_witness(p, b, &stats);
          if (stats.augment_fallbacks != 0)
            fail("augment-fallback", "constructive move failed on " + b.to_string());
          bool full = passive_elements(p, b).size() == rank;
          if (full != !w.has_value())
            fail("augment-absent", "witness absence does not match full passivity on " +
                                       b.to_string());
          if (w) {
            Monomial from = phi_direct(p, b), to = phi_direct(p, *w);
            if (!from.divides(to) || from == to)
              fail("augment-witness", "augment(" + b.to_string() + ") is not a strict multiple");
          }
          // Iterated augmentation must reach a degree-rank monomial.
          LabelSet cursor = b;
          for (int step = 0; step <= rank; ++step) {
            auto next = augment_witness(p, cursor, nullptr);
            if (!next) break;
            cursor = *next;
          }
          if (phi_direct(p, cursor).degree() != rank)
            fail("augment-termination", "iterated augmentation from " + b.to_string() +
                                            " stalls below rank degree");
        } catch (const Error& e) {
          fail("augment-witness", e.what());
        }
      }
    }
  }
};

}  // namespace

std::vector<std::string> check_diagram(const LeDiagram& d, Mutant mutant,
                                       SweepCounters* counters) {
  SweepCounters local;
  Checker checker{d, mutant, counters ? *counters : local, {}};
  try {
    checker.run();
  } catch (const Error& e) {
    checker.fail("exception", e.what());
  }
  return checker.violations;
}

void for_each_shape(int n, const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    fn({});
    return;
  }
  for (int rows = 1; rows < n; ++rows) {
    int width = n - rows;
    std::vector<int> shape = {width};
    std::function<void()> extend = [&]() {
      if (static_cast<int>(shape.size()) == rows) {
        fn(shape);
        return;
      }
      for (int part = shape.back(); part >= 1; --part) {
        shape.push_back(part);
        extend();
        shape.pop_back();
      }
    };
    extend();
  }
}

void for_each_valid_diagram(int n, const std::function<void(const LeDiagram&)>& fn) {
  for_each_shape(n, [&](const std::vector<int>& shape) {
    if (shape.empty()) {
      fn(LeDiagram());
      return;
    }
    std::vector<Cell> cells;
    for (size_t r = 0; r < shape.size(); ++r)
      for (int c = 1; c <= shape[r]; ++c) cells.push_back({static_cast<int>(r) + 1, c});
    const int count = static_cast<int>(cells.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << count); ++mask) {
      std::vector<Cell> fill;
      for (int i = 0; i < count; ++i)
        if ((mask >> i) & 1) fill.push_back(cells[i]);
      LeDiagram d(shape, fill);
      if (is_valid_le(d)) fn(d);
    }
  });
}

namespace {

LeDiagram drop_row(const LeDiagram& d, int row) {
  std::vector<int> shape;
  std::vector<Cell> fill;
  for (int r = 1; r <= d.rows(); ++r) {
    if (r == row) continue;
    int nr = static_cast<int>(shape.size()) + 1;
    shape.push_back(d.row_length(r));
    for (int c = 1; c <= d.row_length(r); ++c)
      if (d.dotted(r, c)) fill.push_back({nr, c});
  }
  return LeDiagram(shape, fill);
}

LeDiagram drop_col(const LeDiagram& d, int col) {
  std::vector<int> shape;
  std::vector<Cell> fill;
  for (int r = 1; r <= d.rows(); ++r) {
    int length = d.row_length(r) - (d.row_length(r) >= col ? 1 : 0);
    if (length == 0) continue;  // dropping the row's only cell
    int nr = static_cast<int>(shape.size()) + 1;
    shape.push_back(length);
    for (int c = 1; c <= d.row_length(r); ++c) {
      if (c == col || !d.dotted(r, c)) continue;
      fill.push_back({nr, c < col ? c : c - 1});
    }
  }
  return LeDiagram(shape, fill);
}

}  // namespace

LeDiagram shrink_counterexample(LeDiagram d,
                                const std::function<bool(const LeDiagram&)>& still_fails) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (int r = 1; r <= d.rows() && !improved; ++r) {
      LeDiagram candidate = drop_row(d, r);
      if (is_valid_le(candidate) && still_fails(candidate)) {
        d = candidate;
        improved = true;
      }
    }
    for (int c = 1; c <= d.max_width() && !improved; ++c) {
      LeDiagram candidate = drop_col(d, c);
      if (is_valid_le(candidate) && still_fails(candidate)) {
        d = candidate;
        improved = true;
      }
    }
    for (const Cell& cell : d.fill()) {
      if (improved) break;
      std::vector<Cell> fill;
      for (const Cell& other : d.fill())
        if (other != cell) fill.push_back(other);
      LeDiagram candidate(d.shape(), fill);
      if (is_valid_le(candidate) && still_fails(candidate)) {
        d = candidate;
        improved = true;
      }
    }
  }
  return d;
}

namespace {

std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

SweepResult run_sweep(const SweepOptions& options) {
  SweepResult result;
  bool stopped = false;

  auto visit = [&](const LeDiagram& d) {
    if (stopped) return;
    std::vector<std::string> violations = check_diagram(d, options.mutant, &result.counters);
    if (!violations.empty()) {
      result.violations.push_back({d, violations});
      if (options.stop_on_violation) stopped = true;
    }
  };

  for (int n = 0; n <= options.max_n && !stopped; ++n) for_each_valid_diagram(n, visit);

  for (int i = 0; i < options.samples && !stopped; ++i) {
    std::uint64_t state = options.seed + 0x632be59bd9b4e019ull * (i + 1);
    int rows = 1 + static_cast<int>(mix64(state) % 4);
    int cols = 1 + static_cast<int>(mix64(state) % std::min(9 - rows, 5));
    double density = 0.30 + 0.65 * (static_cast<double>(mix64(state) >> 11) * 0x1.0p-53);
    LeDiagram d = random_diagram(rows, cols, density, mix64(state));
    ++result.counters.random_samples;
    visit(d);
  }

  if (!result.violations.empty() && options.shrink) {
    result.minimized = shrink_counterexample(result.violations.front().diagram,
                                             [&](const LeDiagram& d) {
                                               return !check_diagram(d, options.mutant).empty();
                                             });
  }
  return result;
}

}  // namespace positroid

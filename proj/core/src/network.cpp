#include "positroid/network.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "positroid/errors.hpp"

namespace positroid {

int LeGraph::dot_id(int r, int c) const {
  for (int i = 0; i < dot_count(); ++i)
    if (dot_cells[i].row == r && dot_cells[i].col == c) return n + i;
  return -1;
}

Cell LeGraph::cell_of(int vertex) const {
  if (vertex < n) return {0, 0};
  return dot_cells[vertex - n];
}

LabelSet LeGraph::reachable_sinks(int source_label) const {
  LabelSet found;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<int> stack = {source_label - 1};
  seen[source_label - 1] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v < n && v != source_label - 1) found.insert(v + 1);
    for (int w : out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return found;
}

namespace {

LeGraph build_impl(const LeDiagram& d) {
  LeGraph g;
  g.labels = boundary_labels(d);
  g.n = d.ground_set_size();
  g.sources = g.labels.b0;

  g.vertices.resize(g.n);
  for (int r = 1; r <= d.rows(); ++r) {
    // Boundary vertex of row r sits in the middle of its east edge.
    g.vertices[g.labels.row_label(r) - 1] = {2 * r, 2 * d.row_length(r) + 1};
  }
  for (int c = 1; c <= d.max_width(); ++c) {
    g.vertices[g.labels.col_label(c) - 1] = {2 * d.column_height(c) + 1, 2 * c};
  }
  for (const Cell& cell : d.fill()) {
    g.dot_cells.push_back(cell);
    g.vertices.push_back({2 * cell.row, 2 * cell.col});
  }
  g.out.resize(g.vertices.size());

  // Row chains: boundary vertex, then dots east to west.
  for (int r = 1; r <= d.rows(); ++r) {
    int prev = g.labels.row_label(r) - 1;
    for (int c = d.row_length(r); c >= 1; --c) {
      if (!d.dotted(r, c)) continue;
      int id = g.dot_id(r, c);
      g.out[prev].push_back(id);
      prev = id;
    }
  }
  // Column chains: dots top to bottom, then the boundary vertex.
  for (int c = 1; c <= d.max_width(); ++c) {
    int prev = -1;
    for (int r = 1; r <= d.column_height(c); ++r) {
      if (!d.dotted(r, c)) continue;
      int id = g.dot_id(r, c);
      if (prev >= 0) g.out[prev].push_back(id);
      prev = id;
    }
    if (prev >= 0) g.out[prev].push_back(g.labels.col_label(c) - 1);
  }
  return g;
}

}  // namespace

LeGraph build_graph(const LeDiagram& d) {
  auto violations = validate_le(d);
  if (!violations.empty())
    throw InvalidDiagram("diagram fails the Le-property (" +
                         std::to_string(violations.size()) + " violating triple" +
                         (violations.size() == 1 ? "" : "s") + ")");
  return build_impl(d);
}

LeGraph build_graph_unchecked(const LeDiagram& d) { return build_impl(d); }

std::vector<EdgeCrossing> check_planarity(const LeGraph& g) {
  struct Segment {
    int fixed2;  // the shared coordinate, doubled
    int lo2, hi2;
    int from, to;
  };
  std::vector<Segment> horizontal, vertical;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.out[v]) {
      const auto& a = g.vertices[v];
      const auto& b = g.vertices[w];
      if (a.y2 == b.y2)
        horizontal.push_back({a.y2, std::min(a.x2, b.x2), std::max(a.x2, b.x2), v, w});
      else
        vertical.push_back({a.x2, std::min(a.y2, b.y2), std::max(a.y2, b.y2), v, w});
    }
  }
  std::vector<EdgeCrossing> crossings;
  for (const Segment& h : horizontal) {
    for (const Segment& v : vertical) {
      if (v.fixed2 > h.lo2 && v.fixed2 < h.hi2 && h.fixed2 > v.lo2 && h.fixed2 < v.hi2)
        crossings.push_back({{h.fixed2 / 2, v.fixed2 / 2}, {h.from, h.to}, {v.from, v.to}});
    }
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const EdgeCrossing& a, const EdgeCrossing& b) { return a.at < b.at; });
  return crossings;
}

namespace {

// Unit-capacity max flow on the vertex-split graph. Each vertex v becomes
// in(v) -> out(v) with capacity one, so a flow of value k is exactly k
// vertex-disjoint paths.
class DisjointPathFlow {
 public:
  explicit DisjointPathFlow(const LeGraph& g) {
    int base = g.vertex_count();
    node_count_ = 2 * base + 2;
    super_source_ = 2 * base;
    super_sink_ = 2 * base + 1;
    adj_.resize(node_count_);
    for (int v = 0; v < base; ++v) add_edge(in(v), out(v));
    for (int v = 0; v < base; ++v)
      for (int w : g.out[v]) add_edge(out(v), in(w));
  }

  void connect_terminals(LabelSet path_sources, LabelSet path_sinks) {
    for (int s : path_sources) add_edge(super_source_, in(s - 1));
    for (int t : path_sinks) add_edge(out(t - 1), super_sink_);
  }

  int max_flow() {
    int total = 0;
    while (augment()) ++total;
    return total;
  }

 private:
  struct Edge {
    int to;
    int cap;
    int rev;
  };

  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }

  void add_edge(int from, int to) {
    adj_[from].push_back({to, 1, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
  }

  bool augment() {
    std::vector<std::pair<int, int>> parent(node_count_, {-1, -1});
    std::queue<int> queue;
    queue.push(super_source_);
    parent[super_source_] = {super_source_, -1};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      if (v == super_sink_) break;
      for (size_t i = 0; i < adj_[v].size(); ++i) {
        const Edge& e = adj_[v][i];
        if (e.cap > 0 && parent[e.to].first < 0) {
          parent[e.to] = {v, static_cast<int>(i)};
          queue.push(e.to);
        }
      }
    }
    if (parent[super_sink_].first < 0) return false;
    for (int v = super_sink_; v != super_source_;) {
      auto [u, i] = parent[v];
      adj_[u][i].cap -= 1;
      adj_[adj_[u][i].to][adj_[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }

  int node_count_, super_source_, super_sink_;
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

bool is_basis(const LeGraph& g, LabelSet subset) {
  if (subset.size() != g.sources.size())
    throw BadCardinality("subset has size " + std::to_string(subset.size()) +
                         ", expected " + std::to_string(g.sources.size()));
  if (!subset.subset_of(LabelSet::range(g.n)))
    throw BadCardinality("subset contains labels outside the ground set");
  LabelSet path_sources = g.sources - subset;
  LabelSet path_sinks = subset - g.sources;
  if (path_sources.empty()) return true;  // the empty family represents B0
  DisjointPathFlow flow(g);
  flow.connect_terminals(path_sources, path_sinks);
  return flow.max_flow() == path_sources.size();
}

LabelSet PathFamily::represented(LabelSet b0) const {
  LabelSet s = b0;
  for (const Path& p : paths) {
    s.erase(p.source);
    s.insert(p.sink);
  }
  return s;
}

std::vector<std::pair<int, int>> PathFamily::pairing() const {
  std::vector<std::pair<int, int>> pairs;
  for (const Path& p : paths) pairs.emplace_back(p.source, p.sink);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<PathFamily> enumerate_families(const LeGraph& g, LabelSet subset) {
  std::vector<PathFamily> families;
  if (subset.size() != g.sources.size()) return families;
  if (!subset.subset_of(LabelSet::range(g.n))) return families;
  LabelSet path_sources = g.sources - subset;
  LabelSet path_sinks = subset - g.sources;
  if (path_sources.empty()) {
    families.push_back({});
    return families;
  }

  std::vector<int> source_order = path_sources.to_vector();
  std::vector<bool> used(g.vertex_count(), false);
  PathFamily current;
  std::vector<int> trail;

  std::function<void(size_t)> place_source = [&](size_t index) {
    if (index == source_order.size()) {
      families.push_back(current);
      return;
    }
    int start = source_order[index] - 1;
    std::function<void(int)> walk = [&](int v) {
      used[v] = true;
      trail.push_back(v);
      int label = g.label_of(v);
      if (v != start && v < g.n) {
        if (path_sinks.contains(label)) {
          current.paths.push_back({source_order[index], label, trail});
          place_source(index + 1);
          current.paths.pop_back();
        }
      } else {
        for (int w : g.out[v])
          if (!used[w]) walk(w);
      }
      trail.pop_back();
      used[v] = false;
    };
    walk(start);
  };
  place_source(0);
  return families;
}

std::string graph_to_dot(const LeGraph& g) {
  std::ostringstream dot;
  dot << "digraph le_graph {\n";
  dot << "  node [shape=circle, fixedsize=true, width=0.3];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& pos = g.vertices[v];
    dot << "  v" << v << " [label=\"";
    if (v < g.n)
      dot << v + 1;
    else
      dot << "(" << g.cell_of(v).row << "," << g.cell_of(v).col << ")";
    dot << "\", pos=\"" << pos.x2 / 2.0 << "," << -pos.y2 / 2.0 << "!\"";
    if (v < g.n) dot << ", shape=" << (g.is_source(v + 1) ? "square" : "diamond");
    dot << "];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.out[v]) dot << "  v" << v << " -> v" << w << ";\n";
  dot << "}\n";
  return dot.str();
}

}  // namespace positroid

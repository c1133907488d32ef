#pragma once

#include <string>
#include <utility>
#include <vector>

#include "positroid/diagram.hpp"
#include "positroid/labels.hpp"

namespace positroid {

/// Planar directed network built from a Le-diagram. Boundary vertices
/// 1..n sit on the southeast boundary; row vertices are sources and
/// column vertices are sinks. Each dot becomes an internal vertex with an
/// incoming horizontal edge from its nearest eastern neighbor (dot, or
/// the row's boundary vertex) and an outgoing vertical edge to its
/// nearest southern neighbor (dot, or the column's boundary vertex), so
/// paths run west along rows and south along columns and may only turn
/// at dots.
///
/// Note: row vertices being the path starting points is forced by how
/// path families represent sets (sources are removed from the canonical
/// basis, sinks are added), even though hook edges are conventionally
/// drawn rightward and downward from each dot.
struct LeGraph {
  /// Vertex ids: 0..n-1 are boundary vertices (label - 1), the rest are
  /// dots in row-major order.
  struct Vertex {
    int y2 = 0;  // doubled grid coordinates; boundary vertices sit on
    int x2 = 0;  // half-integer positions
  };

  int n = 0;
  LabelSet sources;                   // row labels (B0)
  BoundaryLabels labels;
  std::vector<Vertex> vertices;
  std::vector<Cell> dot_cells;        // grid coords of dot vertex i (id n + i)
  std::vector<std::vector<int>> out;  // adjacency by vertex id

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int dot_count() const { return static_cast<int>(dot_cells.size()); }
  bool is_source(int label) const { return sources.contains(label); }
  /// Vertex id of the dot at grid (r, c); -1 if absent.
  int dot_id(int r, int c) const;
  /// Grid cell of a dot vertex; row 0 for boundary vertices.
  Cell cell_of(int vertex) const;
  /// Boundary label of a vertex; 0 for internal vertices.
  int label_of(int vertex) const { return vertex < n ? vertex + 1 : 0; }

  /// Sinks reachable from the given source label, ignoring other paths.
  LabelSet reachable_sinks(int source_label) const;
};

/// Builds the Le-graph. Throws InvalidDiagram when the diagram fails the
/// Le-property.
LeGraph build_graph(const LeDiagram& d);

/// Same construction with the Le check skipped, for probing how the
/// planarity checker behaves on bad inputs.
LeGraph build_graph_unchecked(const LeDiagram& d);

/// A horizontal and a vertical edge meeting at a point that is not a
/// vertex. Cannot occur on graphs built from valid diagrams.
struct EdgeCrossing {
  Cell at;                    // grid point of the crossing
  std::pair<int, int> horizontal;  // (from, to) vertex ids
  std::pair<int, int> vertical;
};

std::vector<EdgeCrossing> check_planarity(const LeGraph& g);

/// True iff `subset` is represented by some family of pairwise
/// vertex-disjoint paths, decided by unit-vertex-capacity maximum flow.
/// Throws BadCardinality when |subset| != |B0|.
bool is_basis(const LeGraph& g, LabelSet subset);

struct Path {
  int source = 0;
  int sink = 0;
  std::vector<int> vertices;  // vertex ids, source first
};

/// Pairwise vertex-disjoint paths; represents B0 minus the sources plus
/// the sinks.
struct PathFamily {
  std::vector<Path> paths;

  LabelSet represented(LabelSet b0) const;
  /// (source, sink) pairs sorted by source.
  std::vector<std::pair<int, int>> pairing() const;
};

/// Exhaustive backtracking over all vertex-disjoint families representing
/// `subset`. Ground truth for is_basis; empty when `subset` is not a
/// basis (including wrong cardinality). Representing the canonical basis
/// itself yields exactly the empty family.
std::vector<PathFamily> enumerate_families(const LeGraph& g, LabelSet subset);

/// Debug dump, DOT format, vertices pinned to grid coordinates.
std::string graph_to_dot(const LeGraph& g);

}  // namespace positroid

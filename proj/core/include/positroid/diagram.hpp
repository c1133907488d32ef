#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "positroid/labels.hpp"

namespace positroid {

/// Grid coordinates, 1-indexed, row 1 at the top, column 1 at the left.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// A Young diagram with dotted cells. The shape is weakly decreasing with
/// all parts >= 1; an empty shape (zero rows) is legal and denotes the
/// rank-0 positroid on the empty ground set.
///
/// Whether the filling satisfies the Le-property is checked separately by
/// validate_le; this class only enforces structural invariants.
class LeDiagram {
 public:
  LeDiagram() = default;
  LeDiagram(std::vector<int> shape, const std::vector<Cell>& fill);

  int rows() const { return static_cast<int>(shape_.size()); }
  int row_length(int r) const { return shape_[r - 1]; }
  /// First part of the shape (0 for the empty diagram).
  int max_width() const { return shape_.empty() ? 0 : shape_[0]; }
  /// Height of grid column c, i.e. the conjugate partition entry.
  int column_height(int c) const;

  /// Ground set size n = rows + max width.
  int ground_set_size() const { return rows() + max_width(); }

  const std::vector<int>& shape() const { return shape_; }
  bool in_shape(int r, int c) const {
    return r >= 1 && r <= rows() && c >= 1 && c <= shape_[r - 1];
  }
  bool dotted(int r, int c) const { return in_shape(r, c) && grid_[r - 1][c - 1]; }

  /// Dotted cells in row-major order.
  std::vector<Cell> fill() const;
  int dot_count() const;

  LeDiagram with_dot(int r, int c) const;

  /// Grid text, one row per line, '*' for a dot and '.' for an empty box.
  /// The empty diagram renders as "(empty)".
  std::string to_grid() const;

  bool operator==(const LeDiagram&) const = default;

 private:
  std::vector<int> shape_;
  std::vector<std::vector<bool>> grid_;
};

/// Boundary labeling of a diagram: walking the southeast boundary from the
/// northeast corner to the southwest corner assigns 1..n to the steps.
/// Vertical steps name rows, horizontal steps name columns. Row labels
/// increase top to bottom; column labels increase right to left.
struct BoundaryLabels {
  std::vector<int> row_labels;  // index r-1 -> label of grid row r
  std::vector<int> col_labels;  // index c-1 -> label of grid column c
  LabelSet b0;                  // the row labels (source labels)

  int row_label(int r) const { return row_labels[r - 1]; }
  int col_label(int c) const { return col_labels[c - 1]; }
  /// Grid row of a label, 0 if the label names a column.
  int row_of(int label) const;
  /// Grid column of a label, 0 if the label names a row.
  int col_of(int label) const;
};

BoundaryLabels boundary_labels(const LeDiagram& d);

/// One failure of the Le-property: `above` and `left` are dotted while
/// `at` (same column as `above`, same row as `left`) is empty.
struct LeViolation {
  Cell above;
  Cell left;
  Cell at;
  auto operator<=>(const LeViolation&) const = default;
};

/// Every violating triple, in row-major order of the empty box. Empty
/// result means the diagram is a valid Le-diagram.
std::vector<LeViolation> validate_le(const LeDiagram& d);

bool is_valid_le(const LeDiagram& d);

/// Adds a dot at each violating box until no violation remains. The
/// fixpoint does not depend on resolution order (the closure is monotone);
/// boxes are resolved in row-major order for determinism.
LeDiagram le_closure(const LeDiagram& d);

/// (loops, coloops): labels of dot-free columns and dot-free rows.
std::pair<LabelSet, LabelSet> loops_coloops(const LeDiagram& d);

/// Relabeling produced by reduce.
struct GroundSetMap {
  std::map<int, int> relabel;  // surviving old label -> new label
  LabelSet removed_loops;
  LabelSet removed_coloops;

  bool identity() const;
  /// Applies the map to a set of surviving old labels.
  LabelSet apply(LabelSet s) const;
};

/// Deletes every empty row and column and renumbers the surviving ground
/// set to [n'] order-preservingly. The result has no loops or coloops and
/// the same h-vector as the input.
std::pair<LeDiagram, GroundSetMap> reduce(const LeDiagram& d);

/// Deterministic in seed: samples a partition inside the given box, dots
/// each box with the given probability, then closes under the Le-property
/// and reduces. The result is always valid and loop/coloop-free.
LeDiagram random_diagram(int max_rows, int max_cols, double density, std::uint64_t seed);

/// Parses grid text: lines over {'*', '.'}, one row per line, lines
/// weakly decreasing in length. Lines starting with '#' are ignored.
/// Throws ParseError on bad characters, empty input, blank interior
/// lines, or increasing line lengths.
LeDiagram parse_grid(std::string_view text);

/// Structured-object serialization (shape array + fill coordinate list).
std::string diagram_to_json(const LeDiagram& d);

}  // namespace positroid

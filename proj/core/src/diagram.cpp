#include "positroid/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "positroid/errors.hpp"

namespace positroid {

LeDiagram::LeDiagram(std::vector<int> shape, const std::vector<Cell>& fill)
    : shape_(std::move(shape)) {
  for (size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] < 1) throw std::invalid_argument("shape parts must be >= 1");
    if (i > 0 && shape_[i] > shape_[i - 1])
      throw std::invalid_argument("shape must be weakly decreasing");
  }
  grid_.resize(shape_.size());
  for (size_t i = 0; i < shape_.size(); ++i) grid_[i].assign(shape_[i], false);
  for (const Cell& cell : fill) {
    if (!in_shape(cell.row, cell.col))
      throw std::invalid_argument("fill cell (" + std::to_string(cell.row) + "," +
                                  std::to_string(cell.col) + ") outside shape");
    grid_[cell.row - 1][cell.col - 1] = true;
  }
  if (ground_set_size() > LabelSet::kMaxLabel)
    throw std::invalid_argument("ground set larger than " +
                                std::to_string(LabelSet::kMaxLabel) + " is not supported");
}

int LeDiagram::column_height(int c) const {
  int h = 0;
  while (h < rows() && shape_[h] >= c) ++h;
  return h;
}

std::vector<Cell> LeDiagram::fill() const {
  std::vector<Cell> cells;
  for (int r = 1; r <= rows(); ++r)
    for (int c = 1; c <= row_length(r); ++c)
      if (grid_[r - 1][c - 1]) cells.push_back({r, c});
  return cells;
}

int LeDiagram::dot_count() const {
  int count = 0;
  for (const auto& row : grid_)
    for (bool dot : row) count += dot;
  return count;
}

LeDiagram LeDiagram::with_dot(int r, int c) const {
  LeDiagram d = *this;
  d.grid_[r - 1][c - 1] = true;
  return d;
}

std::string LeDiagram::to_grid() const {
  if (rows() == 0) return "(empty)";
  std::string out;
  for (int r = 1; r <= rows(); ++r) {
    for (int c = 1; c <= row_length(r); ++c) out += grid_[r - 1][c - 1] ? '*' : '.';
    out += '\n';
  }
  return out;
}

BoundaryLabels boundary_labels(const LeDiagram& d) {
  BoundaryLabels labels;
  const int width = d.max_width();
  for (int r = 1; r <= d.rows(); ++r) labels.row_labels.push_back(r + width - d.row_length(r));
  for (int c = 1; c <= width; ++c) labels.col_labels.push_back(d.column_height(c) + (width - c) + 1);
  for (int label : labels.row_labels) labels.b0.insert(label);
  return labels;
}

int BoundaryLabels::row_of(int label) const {
  for (size_t i = 0; i < row_labels.size(); ++i)
    if (row_labels[i] == label) return static_cast<int>(i) + 1;
  return 0;
}

int BoundaryLabels::col_of(int label) const {
  for (size_t i = 0; i < col_labels.size(); ++i)
    if (col_labels[i] == label) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<LeViolation> validate_le(const LeDiagram& d) {
  std::vector<LeViolation> violations;
  for (int r = 1; r <= d.rows(); ++r) {
    for (int c = 1; c <= d.row_length(r); ++c) {
      if (d.dotted(r, c)) continue;
      for (int ra = 1; ra < r; ++ra) {
        if (!d.dotted(ra, c)) continue;
        for (int cl = 1; cl < c; ++cl)
          if (d.dotted(r, cl)) violations.push_back({{ra, c}, {r, cl}, {r, c}});
      }
    }
  }
  return violations;
}

bool is_valid_le(const LeDiagram& d) {
  for (int r = 2; r <= d.rows(); ++r) {
    bool seen_dot_left = false;
    for (int c = 1; c <= d.row_length(r); ++c) {
      if (d.dotted(r, c)) {
        seen_dot_left = true;
        continue;
      }
      if (!seen_dot_left) continue;
      for (int ra = 1; ra < r; ++ra)
        if (d.dotted(ra, c)) return false;
    }
  }
  return true;
}

LeDiagram le_closure(const LeDiagram& d) {
  LeDiagram closed = d;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 1; r <= closed.rows() && !changed; ++r) {
      for (int c = 1; c <= closed.row_length(r) && !changed; ++c) {
        if (closed.dotted(r, c)) continue;
        bool above = false, left = false;
        for (int ra = 1; ra < r && !above; ++ra) above = closed.dotted(ra, c);
        for (int cl = 1; cl < c && !left; ++cl) left = closed.dotted(r, cl);
        if (above && left) {
          closed = closed.with_dot(r, c);
          changed = true;
        }
      }
    }
  }
  return closed;
}

std::pair<LabelSet, LabelSet> loops_coloops(const LeDiagram& d) {
  BoundaryLabels labels = boundary_labels(d);
  LabelSet loops, coloops;
  for (int c = 1; c <= d.max_width(); ++c) {
    bool any = false;
    for (int r = 1; r <= d.column_height(c); ++r) any = any || d.dotted(r, c);
    if (!any) loops.insert(labels.col_label(c));
  }
  for (int r = 1; r <= d.rows(); ++r) {
    bool any = false;
    for (int c = 1; c <= d.row_length(r); ++c) any = any || d.dotted(r, c);
    if (!any) coloops.insert(labels.row_label(r));
  }
  return {loops, coloops};
}

bool GroundSetMap::identity() const {
  for (const auto& [from, to] : relabel)
    if (from != to) return false;
  return removed_loops.empty() && removed_coloops.empty();
}

LabelSet GroundSetMap::apply(LabelSet s) const {
  LabelSet out;
  for (int x : s) out.insert(relabel.at(x));
  return out;
}

std::pair<LeDiagram, GroundSetMap> reduce(const LeDiagram& d) {
  BoundaryLabels labels = boundary_labels(d);
  auto [loops, coloops] = loops_coloops(d);

  std::vector<int> keep_rows, keep_cols;
  for (int r = 1; r <= d.rows(); ++r)
    if (!coloops.contains(labels.row_label(r))) keep_rows.push_back(r);
  for (int c = 1; c <= d.max_width(); ++c)
    if (!loops.contains(labels.col_label(c))) keep_cols.push_back(c);

  std::vector<int> shape;
  std::vector<Cell> fill;
  for (size_t ri = 0; ri < keep_rows.size(); ++ri) {
    int r = keep_rows[ri];
    int length = 0;
    for (size_t ci = 0; ci < keep_cols.size(); ++ci) {
      int c = keep_cols[ci];
      if (c > d.row_length(r)) break;
      length = static_cast<int>(ci) + 1;
      if (d.dotted(r, c)) fill.push_back({static_cast<int>(ri) + 1, static_cast<int>(ci) + 1});
    }
    shape.push_back(length);
  }

  GroundSetMap map;
  map.removed_loops = loops;
  map.removed_coloops = coloops;
  LabelSet removed = loops | coloops;
  int next = 1;
  for (int label = 1; label <= d.ground_set_size(); ++label)
    if (!removed.contains(label)) map.relabel[label] = next++;

  return {LeDiagram(std::move(shape), fill), map};
}

namespace {

// splitmix64; keeps the generator stable across standard libraries.
std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int bounded(std::uint64_t& state, int inclusive_max) {
  return inclusive_max <= 0 ? 0 : static_cast<int>(mix64(state) % (inclusive_max + 1));
}

double unit(std::uint64_t& state) {
  return static_cast<double>(mix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

LeDiagram random_diagram(int max_rows, int max_cols, double density, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<int> shape;
  int prev = max_cols;
  for (int r = 0; r < max_rows; ++r) {
    int part = bounded(state, prev);
    if (part == 0) break;
    shape.push_back(part);
    prev = part;
  }
  std::vector<Cell> fill;
  for (size_t r = 0; r < shape.size(); ++r)
    for (int c = 1; c <= shape[r]; ++c)
      if (unit(state) < density) fill.push_back({static_cast<int>(r) + 1, c});
  LeDiagram d(std::move(shape), fill);
  return reduce(le_closure(d)).first;
}

LeDiagram parse_grid(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current += ch;
    }
  }
  if (!current.empty()) lines.push_back(current);

  std::vector<int> shape;
  std::vector<Cell> fill;
  bool body_done = false;  // set once a blank line follows content
  int row = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      if (!shape.empty()) body_done = true;
      continue;
    }
    if (body_done) throw ParseError("blank line inside diagram", static_cast<int>(i) + 1, 0);
    ++row;
    int length = static_cast<int>(line.size());
    if (!shape.empty() && length > shape.back())
      throw ParseError("row longer than the one above (shape must be weakly decreasing)",
                       static_cast<int>(i) + 1, shape.back() + 1);
    shape.push_back(length);
    for (int c = 1; c <= length; ++c) {
      char ch = line[c - 1];
      if (ch == '*')
        fill.push_back({row, c});
      else if (ch != '.')
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         static_cast<int>(i) + 1, c);
    }
  }
  if (shape.empty()) throw ParseError("empty input", 0, 0);
  return LeDiagram(std::move(shape), fill);
}

std::string diagram_to_json(const LeDiagram& d) {
  nlohmann::json j;
  j["shape"] = d.shape();
  j["n"] = d.ground_set_size();
  auto cells = nlohmann::json::array();
  for (const Cell& cell : d.fill()) cells.push_back({cell.row, cell.col});
  j["fill"] = cells;
  return j.dump();
}

}  // namespace positroid

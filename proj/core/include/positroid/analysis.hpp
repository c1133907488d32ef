#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/diagram.hpp"
#include "positroid/ideal.hpp"
#include "positroid/matroid.hpp"
#include "positroid/phi.hpp"

namespace positroid {

/// Everything cmd_analyze reports about one diagram.
struct Analysis {
  struct BasisDetail {
    LabelSet basis;
    MatchingRep rep;
    LabelSet passive;
    Monomial monomial;
  };
  struct WitnessDetail {
    LabelSet basis;
    std::vector<std::pair<int, LabelSet>> divides;  // (variable, resulting basis)
    std::optional<LabelSet> augment;
  };

  LeDiagram input;
  bool auto_reduced = false;
  GroundSetMap reduction;
  LeDiagram diagram;  // the analyzed (possibly reduced) diagram

  int n = 0;
  LabelSet b0;
  int rank = 0;
  std::vector<BasisDetail> bases;  // lexicographic order
  std::vector<std::int64_t> f;
  HVector h_activity;
  HVector h_f_transform;
  MonomialSet image;
  IdealReport ideal;
  std::vector<WitnessDetail> witnesses;  // filled when requested

  /// Internal invariants re-checked during assembly; nonempty means the
  /// run must fail.
  std::vector<std::string> check_failures;
  bool ok() const { return check_failures.empty(); }
};

/// Runs the full pipeline. Throws Error when the diagram has loops or
/// coloops and auto_reduce is off (the h-vector machinery assumes a
/// reduced diagram), and InvalidDiagram when the Le-property fails.
Analysis analyze(const LeDiagram& input, bool auto_reduce = false, bool with_witnesses = false);

std::string render_text(const Analysis& a);
std::string render_json(const Analysis& a);

}  // namespace positroid

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "positroid/diagram.hpp"

namespace positroid {

/// Deliberately broken variants of the pipeline, used to prove the sweep
/// harness actually detects violations.
enum class Mutant {
  none,
  /// The basis-to-monomial map without its passivity filter: every
  /// element of b within B0 that lies inside a path interval contributes.
  phi_unfiltered,
};

std::optional<Mutant> mutant_from_name(const std::string& name);

struct SweepCounters {
  std::int64_t diagrams = 0;        // valid diagrams checked
  std::int64_t loop_free = 0;       // of which loop/coloop-free
  std::int64_t random_samples = 0;
  std::int64_t subsets = 0;         // subsets cross-checked (flow vs backtracking)
  std::int64_t families = 0;        // path families enumerated
  std::int64_t divide_checks = 0;
  std::int64_t augment_checks = 0;

  SweepCounters& operator+=(const SweepCounters& o);
};

/// Runs every invariant on one valid diagram. Diagrams with loops or
/// coloops get the labeling, planarity, loop/coloop and reduction checks;
/// loop/coloop-free diagrams additionally get the full basis, activity,
/// monomial, ideal and witness suite. Returns one tagged message per
/// violation; empty means clean.
std::vector<std::string> check_diagram(const LeDiagram& d, Mutant mutant = Mutant::none,
                                       SweepCounters* counters = nullptr);

/// All shapes with ground set exactly n (rows + first part = n).
void for_each_shape(int n, const std::function<void(const std::vector<int>&)>& fn);

/// Every valid Le-diagram (loops and coloops included) with ground set
/// size exactly n, in a deterministic order. n = 0 yields the empty
/// diagram.
void for_each_valid_diagram(int n, const std::function<void(const LeDiagram&)>& fn);

/// Greedy minimization: repeatedly drops a row, a column, or a dot while
/// the predicate still holds on the (still Le-valid) result.
LeDiagram shrink_counterexample(LeDiagram d,
                                const std::function<bool(const LeDiagram&)>& still_fails);

struct SweepOptions {
  int max_n = 6;            // exhaustive over all valid diagrams with n <= max_n
  int samples = 0;          // seeded random reduced diagrams (n <= 9)
  std::uint64_t seed = 0;
  Mutant mutant = Mutant::none;
  bool stop_on_violation = true;
  bool shrink = true;
};

struct SweepViolation {
  LeDiagram diagram;
  std::vector<std::string> details;
};

struct SweepResult {
  SweepCounters counters;
  std::vector<SweepViolation> violations;
  std::optional<LeDiagram> minimized;  // shrunk first counterexample
  bool clean() const { return violations.empty(); }
};

SweepResult run_sweep(const SweepOptions& options);

}  // namespace positroid

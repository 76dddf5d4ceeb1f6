#pragma once
// Proof machinery as executable reduction steps: the 4-face diagonal lemma,
// its one-triangle dichotomy, small-face precoloring extension, and the
// engine that chains them (with the exact solver as terminal fallback).

#include <optional>
#include <string>
#include <variant>

#include "core/color.hpp"
#include "core/plane.hpp"

namespace tricolor {

// Analysis of a 4-face v1 v2 v3 v4 with both diagonals absent. Either some
// diagonal identification adds no triangle (safe_index 1 = {v1,v3},
// 2 = {v2,v4}), or both identifications raise the triangle census and the
// graph contains the blocking configuration: a triangle v_i v_{i+1} z plus
// paths v_{i+1} z x v_{i+3} and v_i z y v_{i+2}.
struct Lemma10Witness {
  int i;        // 1..4, cyclic face position (v5 = v1, ...)
  int z, x, y;  // witness vertices; x and y may coincide
};
struct Lemma10Outcome {
  std::optional<int> safe_index;          // 1 or 2 when a safe diagonal exists
  std::optional<Lemma10Witness> witness;  // set iff safe_index is empty
};

// Errors: not_a_cycle (f is not a simple 4-face of g), diagonal_present.
Lemma10Outcome lemma10_analyze(const PlaneGraph& g, const std::array<int, 4>& f);

// One-triangle dichotomy for a 4-face: either the face shares an edge with
// the triangle, or a concrete safe diagonal exists.
struct Corollary4Case {
  bool adjacent_to_triangle;
  std::array<int, 3> triangle;  // set when adjacent_to_triangle
  int safe_index;               // set otherwise (1 or 2)
};
// Errors: too_many_triangles (census > 1), not_a_cycle, diagonal_present.
Corollary4Case corollary4_case(const PlaneGraph& g, const std::array<int, 4>& f);

// Precoloring extension across a facial cycle of length <= 5: fixes
// `partial` (which must cover exactly V(f) and be proper on it) and solves.
// Errors: not_a_cycle (not a facial cycle), invalid_spec (length > 5),
// improper_partial.
std::optional<Coloring> extend_small_face(const PlaneGraph& g, const std::vector<int>& f,
                                          const std::map<int, int>& partial);

// ---- reduction engine --------------------------------------------------------

enum class StepKind {
  identify_diagonal,
  split_at_cycle,
  extend_face,
  contract_neighborhood,
  solver_fallback,
};
const char* step_kind_name(StepKind k);

struct ReductionStep {
  StepKind kind;
  std::string args;  // no embedded spaces
  int n_before, m_before, n_after, m_after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  // One step per line: "STEP kind args n_before m_before n_after m_after".
  std::string to_text() const;
};

struct EngineResult {
  std::optional<Coloring> coloring;
  ReductionTrace trace;
};

// Colors g under cs by chaining proof steps:
//   1. safe diagonal identification on a 4-face (census never raised,
//      constraints compatible) — verdict protected by a final re-solve of
//      the original instance if the reduced line ends unsatisfiable;
//   2. split at a chordless separating cycle (length <= 4 with at most one
//      triangle on the discarded side, length 5 with none) whose kept side
//      carries all constrained vertices; the discarded side is re-attached
//      by extend_small_face, which the split conditions guarantee succeeds;
//   3. closed-neighborhood contraction when cs is exactly a monochromatic
//      precoloring of an independent 3-vertex neighborhood;
//   4. exact solver fallback.
// The verdict always equals solve(g, cs); every coloring passes
// verify_coloring. Errors: invalid_constraints.
EngineResult reduce_and_color(const PlaneGraph& g, const ConstraintSet& cs);

}  // namespace tricolor

#pragma once
// Theorem harness: per-theorem instance enumeration with engine/oracle
// cross-checks, corpus-wide scans over a worker pool, critical-graph bound
// audits, tightness-witness search, and the seeded random instances used by
// the differential and metamorphic suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/reduce.hpp"

namespace tricolor {

enum class TheoremId {
  t6_pair,
  t8_add3vertex,
  t9_small_face,
  t11_mono_neighborhood,
  t13_adynamic,
  c1_three_common,
  l10_witness,
  ky_bound,
  t15_pl44f,
};

// Closed vocabulary "T6_pair", "T8_add3vertex", ... (invalid_spec on unknown).
const char* theorem_name(TheoremId t);
TheoremId theorem_from_name(const std::string& name);
extern const std::vector<TheoremId> kAllTheorems;

// One verdict disagreement or hypothesis-violating unsatisfiable, replayable
// from the three strings alone.
struct Failure {
  std::string graph_text;       // "n=7;e=0-1,0-2,..."
  std::string constraint_text;  // ConstraintSet::to_text or op-specific note
  std::string detail;
};

struct Report {
  TheoremId theorem = TheoremId::t6_pair;
  long instances = 0;
  std::vector<Failure> failures;
  double seconds = 0.0;         // diagnostic only; excluded from to_text()
  uint64_t manifest_hash = 0;   // corpus filter hash; 0 for single graphs
  bool pass() const { return failures.empty(); }
  // Line-oriented: one "FAIL ..." line per failure, then the key=value
  // summary (theorem, instances, failures, manifest). Deterministic.
  std::string to_text() const;
};

std::string graph_text(const Graph& g);

// Enumerates every constraint instance the theorem quantifies over on this
// graph (zero when g fails the theorem's hypotheses), runs the reduction
// engine where the pattern applies, cross-checks against the exact solver.
Report check_theorem(const PlaneGraph& g, TheoremId t);
// Same, taking the graph; embeds on demand (KY_bound and T15_pl44f never
// need the embedding and accept non-planar inputs).
Report check_theorem_graph(const Graph& g, TheoremId t);

// Aggregates check_theorem over the filtered enumeration stream (for
// T15_pl44f: over the DHGO-composition stream capped at filter.max_n),
// distributing graphs across `jobs` workers (0 = hardware parallelism).
// Failure order is independent of jobs.
Report scan_corpus(const CorpusFilter& filter, TheoremId t, int jobs = 0);

// ---- tightness search -------------------------------------------------------

extern const std::vector<std::string> kTightnessPatterns;

struct TightnessWitness {
  Graph g;
  std::string constraint;  // replay note: constraint text or added-vertex set
};

// All witnesses at the smallest n <= max_n where the relaxed hypothesis
// fails (oracle-confirmed unsatisfiable); empty when none exist under the
// cap (absence under a cap is not refutation). Errors: invalid_spec
// (unknown pattern), cap_exceeded.
std::vector<TightnessWitness> search_tightness(const std::string& pattern, int max_n);

// ---- bound audits -----------------------------------------------------------

struct KyVerdict {
  bool holds = false;     // 3m >= 5n - 2
  bool equality = false;  // 3m == 5n - 2
};
// Errors: not_critical unless g is 4-critical.
KyVerdict check_ky_bound(const Graph& g);

// Consistency of the four-triangle biconditional: census == 4 iff (planar
// and the canonical embedding has no simple 4-face and census == 4). True
// vacuously when census != 4.
bool check_pl44f(const Graph& g);

// ---- adynamic coloring ------------------------------------------------------

struct AdynamicResult {
  std::optional<Coloring> coloring;
  int witness = -1;  // 2+-vertex whose neighborhood is monochromatic
};
// Proper 3-coloring in which some vertex of degree >= 2 has a monochromatic
// neighborhood. Tries eligible vertices in ascending order: a 2-vertex by
// the adjacent-copy split (equisatisfiable), a 3-vertex through the
// reduction engine, anything else by the exact solver.
AdynamicResult adynamic_3color(const PlaneGraph& g);

// ---- seeded instances -------------------------------------------------------

// splitmix64: tiny, deterministic, reproducible across platforms.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  int below(int k);  // uniform in [0, k)
};

// Random connected planar instance: n in [4, max_n], triangle census <= 1,
// constraints drawn from the theorem patterns (possibly empty). Incremental
// growth, not uniform over isomorphism classes.
struct RandomInstance {
  Graph g;
  ConstraintSet cs;
};
RandomInstance random_planar_instance(Rng& rng, int max_n);

}  // namespace tricolor

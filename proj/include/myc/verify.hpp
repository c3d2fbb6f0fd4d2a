#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "myc/cache.hpp"
#include "myc/complex.hpp"
#include "myc/formulas.hpp"
#include "myc/graph.hpp"
#include "myc/homology.hpp"
#include "myc/homotopy.hpp"
#include "myc/sphere_wedge.hpp"

namespace myc {

/// Every report carries this reminder of what a MATCH certifies: predictions
/// are homotopy-type statements, the computation is integral homology.
inline constexpr const char* kVerificationNote =
    "homotopy equivalence implies homology equality; the converse is not checked";

struct VerifyOptions {
  long long max_faces = kDefaultFaceBudget;
  bool fold = true;
  std::string cache_dir;  // empty disables the result cache
  int jobs = 1;           // sweep-level parallelism
  bool fold_spot_check = false;  // sweep re-runs every 10th instance unfolded
};

enum class Verdict { Match, Mismatch, TorsionFound, ResourceExceeded };

/// Stable wire names: MATCH, MISMATCH, TORSION_FOUND, RESOURCE_EXCEEDED.
const char* verdict_name(Verdict v);

/// Names the graph an instance was built from, e.g. family "cycle",
/// params "n=7 l=1". The counts and hash describe the graph actually
/// verified (after the mycielskian/cover/iteration construction, before
/// fold preprocessing).
struct InstanceInfo {
  std::string family;
  std::string params;
  int n_vertices = 0;
  long long n_edges = 0;
  std::string graph_hash;
};

/// Caller-supplied naming for reports; verify_* appends the l/r parameters.
struct InstanceLabel {
  std::string family = "graph";
  std::string params;
};

struct VerificationReport {
  InstanceInfo instance;
  std::string predicted;  // homology profile string (ascii), "0" if trivial
  std::string computed;   // ditto; empty when the computation was cut short
  Verdict verdict = Verdict::ResourceExceeded;
  long long fold_removed = 0;
  long long millis = 0;
  bool cache_hit = false;

  // Typed views of the strings above, when available.
  std::optional<SphereWedge> predicted_wedge;
  std::optional<HomologyProfile> computed_profile;

  // Iterated checks only: the closed-form prediction alongside the recursive
  // one, and whether it agrees with the brute-force profile.
  std::string closed_predicted;
  std::optional<bool> closed_agrees;

  std::string note = kVerificationNote;

  /// Stable schema: {instance: {family, params, n_vertices, n_edges,
  /// graph_hash}, predicted, computed, verdict, fold_removed, millis} plus
  /// the additive fields cache_hit, closed_predicted, closed_agrees, note.
  std::string to_json() const;

  /// One line: FAMILY(params)  verdict  predicted vs computed.
  std::string to_text(bool ascii = false) const;
};

/// Brute-force homology of the independence complex of g, with optional fold
/// preprocessing and result caching. Throws resource_error past the face
/// budget; cache hits return the stored profile without recomputation.
struct ComputedHomology {
  HomologyProfile profile;
  long long fold_removed = 0;
  bool cache_hit = false;
};
ComputedHomology brute_homology(const Graph& g, const VerifyOptions& opts,
                                const ResultCache& cache);

/// Brute-force bindings for the two formula atoms: A is the homology of the
/// independence complex of g read back as a sphere wedge, B the same for the
/// bipartite double cover of g. Throws torsion_error when either profile has
/// torsion (the interpretation as a wedge of spheres would be unsound).
std::pair<SphereWedge, SphereWedge> bind_atoms(const Graph& g,
                                               const VerifyOptions& opts = {});

/// Compares brute-force homology of the independence complex of the
/// generalized mycielskian of g against the level-l formula evaluated on
/// bind_atoms(g). Resource exhaustion yields a RESOURCE_EXCEEDED report, not
/// an exception.
VerificationReport verify_mycielskian(const Graph& g, long long l,
                                      const VerifyOptions& opts = {},
                                      const InstanceLabel& label = {});

/// Same loop on the bipartite double cover of the mycielskian, against
/// cover_mycielskian_expr(l, variant).
VerificationReport verify_cover(
    const Graph& g, long long l, const VerifyOptions& opts = {},
    const InstanceLabel& label = {},
    formulas::CoverVariant variant = formulas::CoverVariant::Derived);

/// r-fold iteration, r >= 1. The verdict compares brute force against the
/// recursive expression engine; when a closed form applies (l = 0 or
/// l % 3 != 0) its prediction and agreement with brute force are recorded
/// in closed_predicted / closed_agrees.
VerificationReport verify_iterated(
    const Graph& g, long long l, long long r, const VerifyOptions& opts = {},
    const InstanceLabel& label = {},
    formulas::CoverVariant cover_variant = formulas::CoverVariant::Derived,
    formulas::ClosedReading reading = formulas::ClosedReading::Derived);

// --- sweeps -----------------------------------------------------------------

struct SweepItem {
  enum class Kind { Mycielskian, Cover, Iterated };
  Kind kind = Kind::Mycielskian;
  InstanceLabel label;
  Graph base;
  long long l = 0;
  long long r = 1;
};

struct SweepSummary {
  std::vector<VerificationReport> reports;  // same order as the items
  long long matches = 0;
  long long mismatches = 0;
  long long torsion = 0;
  long long resource = 0;
  long long cache_hits = 0;
  long long fold_spot_checks = 0;
  long long fold_spot_check_failures = 0;

  std::string to_text(bool ascii = false) const;  // aligned table + totals
  std::string to_json() const;                    // JSON array of reports
};

/// Runs every item in deterministic input order (results are ordered even
/// when opts.jobs > 1). Per-instance failures are aggregated, never thrown.
SweepSummary sweep(const std::vector<SweepItem>& items,
                   const VerifyOptions& opts = {});

// --- the expected-discrepancy register ---------------------------------------

/// A place where the printed form of a published formula disagrees with the
/// value derived from the theorems it rests on, confirmed by brute-force
/// homology on the witness instance. The acceptance checks treat exactly
/// these divergences as expected; anything else is an implementation bug.
struct ExpectedDiscrepancy {
  std::string id;        // stable slug, e.g. "cn-6r+1-l3k+2"
  std::string family;    // cycle | path | cover | iter-closed | iter-cover | display
  std::string witness;   // parameters of the confirming instance
  std::string printed;   // value as printed (ascii wedge notation)
  std::string derived;   // value derived and confirmed by brute force
  std::string detail;    // one-sentence description of the divergence
};

const std::vector<ExpectedDiscrepancy>& known_discrepancies();

/// Lookup by id; nullptr when absent.
const ExpectedDiscrepancy* find_discrepancy(const std::string& id);

}  // namespace myc

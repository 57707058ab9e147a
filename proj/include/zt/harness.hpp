#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zt/spectra.hpp"
#include "zt/structure.hpp"
#include "zt/tensor.hpp"

namespace zt {

/// Target for the randomized Z-tensor generator: A = D - C with diagonal
/// entries drawn from diag_range and C's support sampled at `density` over
/// the admissible tuples.
///   - bipartition: restrict the support to odd-intersection tuples, making
///     C weakly odd-bipartite with respect to that set by construction;
///   - vanishing_rows: exclude tuples whose leading index lies in the set;
///   - symmetric: sample one value per index multiset and replicate it over
///     all permutations;
///   - require_weakly_irreducible: rejection-resample (bounded) until the
///     representing graph of C is connected.
struct GenSpec {
  int order = 4;
  int dim = 3;
  double density = 0.3;
  std::optional<IndexSet> bipartition;
  bool require_weakly_irreducible = false;
  bool symmetric = false;
  std::optional<IndexSet> vanishing_rows;
  std::pair<double, double> diag_range{0.5, 2.0};
  std::pair<double, double> offdiag_range{0.1, 1.0};
  std::uint64_t seed = 1;
};

Tensor gen_z_tensor(const GenSpec& spec);

struct TrialFailure {
  std::uint64_t seed = 0;
  std::string tensor_path;  // serialized counterexample; may be empty
  std::string detail;
};

struct TheoremReport {
  std::string theorem_id;
  int trials = 0;
  int passes = 0;
  int inconclusive = 0;
  std::vector<TrialFailure> failures;
  double wall_seconds = 0.0;
};

struct CheckConfig {
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<int> orders;  // empty: per-check defaults
  std::vector<int> dims;    // empty: per-check defaults
  double density = 0.3;
  std::string report_dir = "reports";
  SolverOptions solver;
};

std::vector<std::string> registered_theorems();
std::string theorem_summary(const std::string& id);

/// Runs `trials` seeded instances of a registered check. Identical
/// (id, config) inputs produce identical reports; every failure records the
/// trial seed and a serialized counterexample so it can be replayed.
TheoremReport check_theorem(const std::string& id, const CheckConfig& cfg);

/// The four fixed worked examples end to end (decompose, detect, solve,
/// compare), asserting the printed eigenvalues to 1e-8.
std::vector<TheoremReport> regression_suite(const SolverOptions& opts = {});

/// Example tensors 1-4 (three order-5 dimension-3 instances and the 4th
/// order dimension-2 one).
Tensor paper_example(int which);

void write_reports_json(std::ostream& out,
                        const std::vector<TheoremReport>& reports);
std::string report_to_text(const TheoremReport& report);

}  // namespace zt

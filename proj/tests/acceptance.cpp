// Acceptance suite: runs the fixed worked-example regressions and the
// randomized theorem batches at their pinned tolerances, printing one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zt/charpoly.hpp"
#include "zt/harness.hpp"
#include "zt/prng.hpp"
#include "zt/spectra.hpp"
#include "zt/structure.hpp"

using namespace zt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome ok() { return {}; }
Outcome fail(const std::string& d) { return {false, d}; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Outcome expect(bool cond, const std::string& d) {
  return cond ? ok() : fail(d);
}

Outcome join(std::initializer_list<Outcome> outcomes) {
  for (const auto& o : outcomes)
    if (!o.pass) return o;
  return ok();
}

// criterion 1: 5th order, dim 3, d = (1,1,1), c11122 = c22233 = 1
Outcome criterion_example1() {
  ZComparison cmp = compare_z(paper_example(1));
  return join({
      expect(std::abs(cmp.z_pair.lambda - 1.0) <= 1e-8,
             "lambda(A) = " + num(cmp.z_pair.lambda)),
      expect(std::abs(cmp.abs_pair.lambda - 1.0) <= 1e-8,
             "lambda(|A|) = " + num(cmp.abs_pair.lambda)),
  });
}

// criterion 2: d = (1,1,3), c11333 = 1, c22333 = 2; detector returns {3}
Outcome criterion_example2() {
  Tensor A = paper_example(2);
  ZComparison cmp = compare_z(A);
  auto sols = find_weak_odd_bipartitions(z_decompose(A).C, 16);
  bool has3 = std::find(sols.begin(), sols.end(), IndexSet{3}) != sols.end();
  return join({
      expect(std::abs(cmp.z_pair.lambda - 3.0) <= 1e-8,
             "lambda(A) = " + num(cmp.z_pair.lambda)),
      expect(std::abs(cmp.abs_pair.lambda - 3.0) <= 1e-8,
             "lambda(|A|) = " + num(cmp.abs_pair.lambda)),
      expect(has3, "V = {3} missing from the detector output"),
  });
}

// criterion 3: d = (1,2,4), c11122 = c11333 = 1, c22233 = 2; no bipartition
Outcome criterion_example3() {
  Tensor A = paper_example(3);
  ZComparison cmp = compare_z(A);
  auto sols = find_weak_odd_bipartitions(z_decompose(A).C, 16);
  return join({
      expect(std::abs(cmp.z_pair.lambda - 4.0) <= 1e-8,
             "lambda(A) = " + num(cmp.z_pair.lambda)),
      expect(std::abs(cmp.abs_pair.lambda - 4.0) <= 1e-8,
             "lambda(|A|) = " + num(cmp.abs_pair.lambda)),
      expect(sols.empty(), "detector unexpectedly found a bipartition"),
  });
}

// criterion 4: 4th-order counterexample via the brute oracle on both sides
Outcome criterion_example4() {
  Tensor A = paper_example(4);
  SolverOptions opts;
  auto pa = brute_force_h_eigenpairs(A, opts);
  auto pb = brute_force_h_eigenpairs(abs_tensor(A), opts);
  if (pa.empty() || pb.empty()) return fail("oracle found no eigenpairs");
  auto sols = find_weak_odd_bipartitions(z_decompose(A).C, 4);
  return join({
      expect(std::abs(pa.front().lambda - 1.0) <= 1e-8,
             "lambda(A) = " + num(pa.front().lambda)),
      expect(std::abs(pb.front().lambda - 1.0) <= 1e-8,
             "lambda(|A|) = " + num(pb.front().lambda)),
      expect(sols.empty(), "detector unexpectedly found a bipartition"),
  });
}

// criterion 5: 200 weakly odd-bipartite, weakly irreducible instances
Outcome criterion_eq_weak() {
  CheckConfig cfg;
  cfg.trials = 200;
  cfg.seed = 7;
  cfg.orders = {4};
  cfg.dims = {3, 4, 5};
  cfg.report_dir = "acceptance_reports";
  TheoremReport r = check_theorem("T-eq-weak", cfg);
  return join({
      expect(r.failures.empty(),
             std::to_string(r.failures.size()) + " failures; first: " +
                 (r.failures.empty() ? "" : r.failures.front().detail)),
      expect(r.inconclusive == 0,
             std::to_string(r.inconclusive) + " inconclusive trials"),
      expect(r.passes == 200, "passes = " + std::to_string(r.passes)),
  });
}

// criterion 6: 100 non-bipartite instances leave a strict gap
Outcome criterion_iff_reverse() {
  CheckConfig cfg;
  cfg.trials = 100;
  cfg.seed = 11;
  cfg.orders = {4};
  cfg.dims = {3, 4};
  cfg.report_dir = "acceptance_reports";
  TheoremReport r = check_theorem("T-iff-reverse", cfg);
  std::printf("       [T-iff-reverse] %d passes, %d inconclusive\n", r.passes,
              r.inconclusive);
  return join({
      expect(r.failures.empty(),
             std::to_string(r.failures.size()) + " failures; first: " +
                 (r.failures.empty() ? "" : r.failures.front().detail)),
      expect(r.inconclusive <= 10,
             "inconclusive rate " + std::to_string(r.inconclusive) + "% > 10%"),
  });
}

// criterion 7: structural theorems, exhaustively checked per instance
Outcome criterion_structural() {
  CheckConfig cfg;
  cfg.trials = 100;
  cfg.seed = 13;
  cfg.report_dir = "acceptance_reports";
  cfg.orders = {4};
  cfg.dims = {2, 3, 4, 5, 6};
  TheoremReport odd = check_theorem("T-oddbip-irred", cfg);
  CheckConfig cfg2 = cfg;
  cfg2.orders = {};
  cfg2.dims = {};
  TheoremReport even = check_theorem("T-evenbip-red", cfg2);
  return join({
      expect(odd.passes == 100, "odd-bipartite: passes = " + std::to_string(odd.passes)),
      expect(even.passes == 100, "even-bipartite: passes = " + std::to_string(even.passes)),
  });
}

// criterion 8: power iteration against the oracle on nonnegative input
Outcome criterion_oracle_cross() {
  SolverOptions opts;
  int converged = 0;
  int mismatches = 0;
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::mt19937_64 rng(detail::mix_seed(2024, trial));
    int m = 3 + static_cast<int>(rng() % 2);
    int n = 2 + static_cast<int>(rng() % 2);
    // random nonnegative tensor over a directed cycle backbone, so the
    // shifted iteration has a positive fixed point
    Tensor N(m, n);
    for (int i = 1; i <= n; ++i) {
      IndexTuple cycle(m, i);
      for (std::size_t j = 1; j < cycle.size(); ++j) cycle[j] = i % n + 1;
      N.set(cycle, detail::uniform(rng, 0.3, 1.2));
    }
    detail::for_each_tuple(m, n, [&](const IndexTuple& idx) {
      if (detail::u01(rng) < 0.35) N.set(idx, detail::uniform(rng, 0.1, 1.1));
    });
    if (!is_weakly_irreducible(N)) continue;
    EigenPair rho = power_iteration_rho(N, opts);
    auto pairs = brute_force_h_eigenpairs(N, opts);
    if (pairs.empty()) continue;
    ++converged;
    double diff = std::abs(pairs.front().lambda - rho.lambda);
    worst = std::max(worst, diff);
    if (diff > 1e-6) ++mismatches;
  }
  std::printf("       [oracle-cross] %d/50 oracle-converged, worst gap %s\n",
              converged, num(worst).c_str());
  return join({
      expect(converged >= 45, "oracle convergence below 90%: " +
                                  std::to_string(converged) + "/50"),
      expect(mismatches == 0, std::to_string(mismatches) +
                                  " mismatches beyond 1e-6 (worst " +
                                  num(worst) + ")"),
  });
}

// criterion 9: exact polynomial identity for sign-similar pairs, and the
// rho/spectrum equivalence on a mixed dimension-2 family
Outcome criterion_dim2() {
  CheckConfig cfg;
  cfg.trials = 50;
  cfg.seed = 29;
  cfg.report_dir = "acceptance_reports";
  TheoremReport spec_eq = check_theorem("C-spec-eq", cfg);
  CheckConfig cfg2 = cfg;
  cfg2.seed = 31;
  TheoremReport rho_iff = check_theorem("T-rho-iff", cfg2);
  return join({
      expect(spec_eq.passes == 50,
             "C-spec-eq passes = " + std::to_string(spec_eq.passes) +
                 (spec_eq.failures.empty() ? "" : "; " + spec_eq.failures.front().detail)),
      expect(rho_iff.failures.empty(),
             "T-rho-iff failures: " +
                 (rho_iff.failures.empty() ? "" : rho_iff.failures.front().detail)),
      expect(rho_iff.inconclusive == 0,
             "T-rho-iff inconclusive = " + std::to_string(rho_iff.inconclusive)),
  });
}

// criterion 10: the shift law across 50 random small tensors
Outcome criterion_shift() {
  CheckConfig cfg;
  cfg.trials = 50;
  cfg.seed = 37;
  cfg.report_dir = "acceptance_reports";
  TheoremReport r = check_theorem("P-shift", cfg);
  std::printf("       [P-shift] %d passes, %d inconclusive\n", r.passes,
              r.inconclusive);
  return join({
      expect(r.failures.empty(),
             std::to_string(r.failures.size()) + " failures; first: " +
                 (r.failures.empty() ? "" : r.failures.front().detail)),
      expect(r.inconclusive <= 5, "inconclusive = " + std::to_string(r.inconclusive)),
  });
}

struct Criterion {
  int id;
  const char* label;
  std::function<Outcome()> run;
  double time_limit_s;  // 0: no limit asserted
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example 1: lambda(A) = lambda(|A|) = 1", criterion_example1, 1.0},
      {2, "worked example 2: both 3, detector yields {3}", criterion_example2, 1.0},
      {3, "worked example 3: both 4, certified no bipartition", criterion_example3, 0},
      {4, "4th-order counterexample: oracle finds 1 on both sides", criterion_example4, 0},
      {5, "T-eq-weak, 200 trials, m=4, n in {3,4,5}", criterion_eq_weak, 300.0},
      {6, "T-iff reverse, 100 trials, strict gap or inconclusive <= 10%",
       criterion_iff_reverse, 0},
      {7, "exhaustive structural theorems, 100 + 100 instances", criterion_structural, 0},
      {8, "power iteration vs oracle, 50 nonnegative instances", criterion_oracle_cross, 0},
      {9, "dimension-2 spectrum theorems, 50 + 50 instances", criterion_dim2, 0},
      {10, "shift law, 50 instances", criterion_shift, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s && outcome.pass)
      outcome = fail("over time budget: " + num(secs) + " s > " +
                     num(c.time_limit_s) + " s");
    std::printf("criterion %2d: %s  (%.2f s)  %s\n", c.id,
                outcome.pass ? "PASS" : "FAIL", secs, c.label);
    if (!outcome.pass) {
      std::printf("              %s\n", outcome.detail.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

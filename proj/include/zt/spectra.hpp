#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "zt/charpoly.hpp"
#include "zt/structure.hpp"
#include "zt/tensor.hpp"

namespace zt {

struct SolverOptions {
  double tol = 1e-10;
  int max_iters = 100000;
  int starts = 200;        // random Newton starts in addition to fixed ones
  double dedup_tol = 1e-6;
  std::uint64_t seed = 42;
};

/// H-eigenpair candidate. The residual is
///   || T x^{m-1} - lambda x^{[m-1]} ||_inf / max(1, ||x||_inf^{m-1})
/// as recomputed by eigen_residual.
struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
};

double eigen_residual(const Tensor& T, double lambda, const Eigen::VectorXd& x);

/// Collatz-Wielandt bracket per iteration of the power method (on N + I).
struct PowerTrace {
  std::vector<double> lower, upper;
};

/// Largest H-eigenvalue rho(N) of a nonnegative weakly irreducible tensor by
/// power iteration on the shifted tensor N + I, mapping the eigenvalue back
/// by the shift law. The returned eigenvector is positive and normalized to
/// sum x_i^m = 1.
EigenPair power_iteration_rho(const Tensor& N, const SolverOptions& opts = {},
                              PowerTrace* trace = nullptr);

/// Transfers an eigenpair of |A| to a candidate pair of A across a weak odd
/// bipartition V: for even order, x is kept on V and negated off it; for odd
/// order, negated on V and kept off it. The residual is left NaN; callers
/// must revalidate against A.
EigenPair sign_flip_eigenpair(const EigenPair& pair, const IndexSet& V,
                              int order, Parity order_parity);

/// Newton-based desk-scale oracle: solves T x^{m-1} = lambda x^{[m-1]} with a
/// normalization row from many seeded starts, deduplicates and sorts by
/// lambda descending. Heuristically complete only. Guarded to n <= 4, m <= 6.
std::vector<EigenPair> brute_force_h_eigenpairs(const Tensor& T,
                                                const SolverOptions& opts = {});

enum class SolveMethod { power_iteration, sign_flip, brute_force };

const char* solve_method_name(SolveMethod m);

/// Side-by-side result for a Z-tensor A and its absolute tensor.
struct ZComparison {
  EigenPair abs_pair;  // lambda(|A|)
  SolveMethod abs_method = SolveMethod::power_iteration;
  EigenPair z_pair;  // lambda(A)
  SolveMethod z_method = SolveMethod::sign_flip;
  std::optional<IndexSet> bipartition;  // witness used by the sign flip
};

ZComparison compare_z(const Tensor& A, const SolverOptions& opts = {});

/// lambda(A) for a Z-tensor with nonnegative diagonal: the sign-flip transfer
/// across a weak odd bipartition when one applies (for odd order, subject to
/// the vanishing-row condition), otherwise the largest real eigenvalue the
/// brute-force oracle finds.
EigenPair largest_h_eigenvalue_z(const Tensor& A, const SolverOptions& opts = {});

/// Spectral radius estimate. `certified` distinguishes the exact routes
/// (power iteration on nonnegative weakly irreducible input, dimension-2
/// characteristic polynomial) from the brute-force lower bound.
struct RhoEstimate {
  double value = 0.0;
  bool certified = false;
};

RhoEstimate rho_estimate(const Tensor& T, const SolverOptions& opts = {});

}  // namespace zt

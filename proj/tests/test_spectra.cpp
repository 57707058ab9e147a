#include <doctest.h>

#include <cmath>

#include "zt/harness.hpp"
#include "zt/prng.hpp"
#include "zt/spectra.hpp"

using namespace zt;

namespace {

Tensor swap_matrix() {
  return make_tensor(2, 2, {{{1, 2}, 1.0}, {{2, 1}, 1.0}});
}

double lambda_max(const std::vector<EigenPair>& pairs) {
  REQUIRE(!pairs.empty());
  return pairs.front().lambda;
}

}  // namespace

TEST_CASE("brute-force oracle on diagonal and identity tensors") {
  SolverOptions opts;
  Tensor D = make_tensor(5, 3, {{{1, 1, 1, 1, 1}, 1.0},
                                {{2, 2, 2, 2, 2}, 2.0},
                                {{3, 3, 3, 3, 3}, 4.0}});
  auto pairs = brute_force_h_eigenpairs(D, opts);
  // coordinate vectors solve the system exactly at lambda = d_i
  for (double expected : {1.0, 2.0, 4.0}) {
    bool found = false;
    for (const auto& p : pairs)
      found = found || std::abs(p.lambda - expected) < 1e-8;
    CHECK(found);
  }
  for (const auto& p : pairs) CHECK(p.residual <= opts.tol);

  auto id_pairs = brute_force_h_eigenpairs(identity_tensor(4, 2), opts);
  for (const auto& p : id_pairs) {
    CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.residual <= opts.tol);
  }

  CHECK_THROWS_AS(brute_force_h_eigenpairs(Tensor(3, 5), opts), Error);
  CHECK_THROWS_AS(brute_force_h_eigenpairs(Tensor(7, 2), opts), Error);
}

TEST_CASE("oracle finds lambda = 1 on the 4th-order counterexample") {
  SolverOptions opts;
  Tensor A = paper_example(4);
  CHECK(lambda_max(brute_force_h_eigenpairs(A, opts)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lambda_max(brute_force_h_eigenpairs(abs_tensor(A), opts)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("power iteration on the worked example's absolute tensor") {
  Tensor absA = abs_tensor(paper_example(2));
  SolverOptions opts;
  PowerTrace trace;
  EigenPair p = power_iteration_rho(absA, opts, &trace);
  CHECK(p.lambda == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(p.residual <= opts.tol);
  CHECK(p.x.minCoeff() > 0.0);
  // eigenvector proportional to (2^(-1/3), 1, 1)
  CHECK(p.x(0) / p.x(2) == doctest::Approx(std::pow(0.5, 1.0 / 3)).epsilon(1e-8));
  CHECK(p.x(1) / p.x(2) == doctest::Approx(1.0).epsilon(1e-8));
  double sum = 0;
  for (int i = 0; i < 3; ++i) sum += std::pow(p.x(i), 5);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));

  // Collatz-Wielandt bracket contains rho(N + I) at every iteration
  double rho_m = p.lambda + 1.0;
  REQUIRE(!trace.lower.empty());
  for (std::size_t k = 0; k < trace.lower.size(); ++k) {
    CHECK(trace.lower[k] <= rho_m + 1e-9);
    CHECK(trace.upper[k] >= rho_m - 1e-9);
  }
}

TEST_CASE("power iteration preconditions and small cases") {
  SolverOptions opts;
  EigenPair p = power_iteration_rho(swap_matrix(), opts);
  CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p.x(0) == doctest::Approx(p.x(1)).epsilon(1e-10));

  // identity at dimension 1 is the weakly irreducible case of rho(I) = 1
  CHECK(power_iteration_rho(identity_tensor(4, 1), opts).lambda ==
        doctest::Approx(1.0));
  // at higher dimension the representing graph is disconnected
  CHECK_THROWS_AS(power_iteration_rho(identity_tensor(4, 3), opts), Error);

  Tensor neg = make_tensor(2, 2, {{{1, 2}, -1.0}, {{2, 1}, 1.0}});
  CHECK_THROWS_AS(power_iteration_rho(neg, opts), Error);
}

TEST_CASE("sign flip transfers the worked example's eigenpair") {
  Tensor A = paper_example(2);
  EigenPair abs_pair = power_iteration_rho(abs_tensor(A));
  EigenPair flipped = sign_flip_eigenpair(abs_pair, {3}, 5, Parity::odd);
  CHECK(flipped.x(0) > 0);
  CHECK(flipped.x(1) > 0);
  CHECK(flipped.x(2) < 0);
  double resid = eigen_residual(A, flipped.lambda, flipped.x);
  CHECK(resid <= 1e-10);

  Eigen::VectorXd ones = Eigen::VectorXd::Ones(2);
  EigenPair even_pair{1.0, ones, 0.0, 0};
  EigenPair y = sign_flip_eigenpair(even_pair, {1}, 4, Parity::even);
  CHECK(y.x(0) == 1.0);
  CHECK(y.x(1) == -1.0);

  CHECK_THROWS_AS(sign_flip_eigenpair(even_pair, {1}, 5, Parity::even), Error);
  CHECK_THROWS_AS(sign_flip_eigenpair(even_pair, {1, 2}, 4, Parity::even), Error);
}

TEST_CASE("largest H-eigenvalue on the three worked examples") {
  SolverOptions opts;
  CHECK(largest_h_eigenvalue_z(paper_example(1), opts).lambda ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(largest_h_eigenvalue_z(paper_example(2), opts).lambda ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(largest_h_eigenvalue_z(paper_example(3), opts).lambda ==
        doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("compare_z routes and validates") {
  SolverOptions opts;
  ZComparison cmp = compare_z(paper_example(2), opts);
  CHECK(cmp.z_method == SolveMethod::sign_flip);
  REQUIRE(cmp.bipartition.has_value());
  CHECK(*cmp.bipartition == IndexSet{3});
  CHECK(cmp.z_pair.residual <= opts.tol);
  CHECK(cmp.abs_pair.residual <= opts.tol);

  ZComparison cx = compare_z(paper_example(4), opts);
  CHECK_FALSE(cx.bipartition.has_value());
  CHECK(cx.z_method == SolveMethod::brute_force);
  CHECK(std::abs(cx.z_pair.lambda - cx.abs_pair.lambda) <= 1e-8);

  CHECK_THROWS_AS(compare_z(swap_matrix(), opts), Error);  // not a Z-tensor
}

TEST_CASE("shift law maps oracle eigenpairs") {
  SolverOptions opts;
  std::mt19937_64 rng(5);
  GenSpec spec;
  spec.order = 3;
  spec.dim = 3;
  spec.density = 0.5;
  for (int trial = 0; trial < 10; ++trial) {
    spec.seed = 500 + trial;
    Tensor B = gen_z_tensor(spec);
    double a = detail::uniform(rng, 0.3, 2.0) * (trial % 2 ? -1.0 : 1.0);
    double b = detail::uniform(rng, -2.0, 2.0);
    Tensor S = shift(B, a, b);
    for (const auto& pair : brute_force_h_eigenpairs(B, opts)) {
      double mu = a * (pair.lambda + b);
      CHECK(eigen_residual(S, mu, pair.x) <= 1e-8);
    }
  }
}

TEST_CASE("domination chain for Z-tensors") {
  SolverOptions opts;
  GenSpec spec;
  spec.order = 4;
  spec.dim = 3;
  spec.density = 0.4;
  spec.require_weakly_irreducible = true;
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    spec.seed = seed;
    Tensor A = gen_z_tensor(spec);
    RhoEstimate rho_abs = rho_estimate(abs_tensor(A), opts);
    for (const auto& pair : brute_force_h_eigenpairs(A, opts))
      CHECK(pair.lambda <= rho_abs.value + 1e-6);
  }
}

TEST_CASE("rho estimates") {
  SolverOptions opts;
  CHECK(rho_estimate(abs_tensor(paper_example(2)), opts).value ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rho_estimate(Tensor(3, 2), opts).value == 0.0);
  CHECK(rho_estimate(Tensor(3, 2), opts).certified);
  RhoEstimate r = rho_estimate(swap_matrix(), opts);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.certified);
}

TEST_CASE("solver option validation") {
  SolverOptions bad;
  bad.tol = 1e-4;  // violates tol < dedup_tol
  CHECK_THROWS_AS(power_iteration_rho(swap_matrix(), bad), Error);
}

#include <doctest.h>

#include "zt/charpoly.hpp"
#include "zt/harness.hpp"
#include "zt/spectra.hpp"

using namespace zt;

namespace {

bool contains_root(const CharPoly2& p, double x, double tol) {
  for (const auto& [r, mult] : p.roots())
    if (std::abs(r - std::complex<double>(x, 0)) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("rational polynomial arithmetic") {
  RatPoly x = RatPoly::variable();
  RatPoly p = (x + RatPoly::constant(1)) * (x - RatPoly::constant(2));
  CHECK(p.degree() == 2);
  CHECK(p.eval(2) == 0);
  CHECK(p.eval(-1) == 0);
  CHECK(divide_exact(p, x - RatPoly::constant(2)).eval(-1) == 0);
  CHECK_THROWS_AS(divide_exact(x * x + RatPoly::constant(1), x - RatPoly::constant(1)),
                  Error);

  RatPoly sq = p * p;
  RatPoly g = poly_gcd(sq, derivative(sq));
  CHECK(g.degree() == 2);  // the square-free kernel reappears
  CHECK(square_free_part(sq).degree() == 2);
}

TEST_CASE("matrix characteristic polynomial") {
  // [[a, b], [c, d]] -> lambda^2 - (a+d) lambda + (ad - bc)
  Tensor M = make_tensor(2, 2, {{{1, 1}, 3.0}, {{1, 2}, 2.0},
                                {{2, 1}, -1.0}, {{2, 2}, 4.0}});
  CharPoly2 cp = char_poly_dim2(M);
  REQUIRE(cp.coeffs.size() == 3);
  Rational lead = cp.coeffs[2];
  CHECK(cp.coeffs[1] / lead == Rational(-7));
  CHECK(cp.coeffs[0] / lead == Rational(14));
  CHECK_FALSE(cp.degenerate);
}

TEST_CASE("identity tensor gives (lambda - 1)^(2m-2)") {
  for (int m : {2, 3, 4}) {
    CharPoly2 cp = char_poly_dim2(identity_tensor(m, 2));
    CHECK(cp.effective_degree() == 2 * (m - 1));
    auto roots = cp.roots();
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].first.real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(roots[0].second == 2 * (m - 1));
  }
}

TEST_CASE("counterexample tensor spectrum is {1}") {
  Tensor A = paper_example(4);
  CharPoly2 cp = char_poly_dim2(A);
  CHECK(cp.effective_degree() == 6);
  auto roots = cp.roots();
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].first.real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(roots[0].second == 6);
  CHECK(contains_root(cp, 1.0, 1e-9));
  CHECK(max_root_modulus(cp) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("zero tensor and dimension guard") {
  CharPoly2 cp = char_poly_dim2(Tensor(3, 2));
  CHECK(max_root_modulus(cp) == doctest::Approx(0.0));
  CHECK_THROWS_AS(char_poly_dim2(Tensor(3, 3)), Error);
}

TEST_CASE("spectra_equal_dim2 on diagonal matrices") {
  auto diag = [](double a, double b) {
    return make_tensor(2, 2, {{{1, 1}, a}, {{2, 2}, b}});
  };
  CHECK(spectra_equal_dim2(diag(1, 2), diag(2, 1)));
  CHECK_FALSE(spectra_equal_dim2(diag(1, 2), diag(1, 3)));
  CHECK(spectra_equal_dim2(diag(1, 2), diag(2, 1), 1e-12));
}

TEST_CASE("oracle eigenvalues are characteristic roots") {
  // dim-2 consistency: every oracle eigenvalue is a root, and every real
  // root with a real eigenvector shows up in the oracle list.
  SolverOptions opts;
  for (int which : {4}) {
    Tensor A = paper_example(which);
    CharPoly2 cp = char_poly_dim2(A);
    auto pairs = brute_force_h_eigenpairs(A, opts);
    REQUIRE(!pairs.empty());
    for (const auto& pair : pairs) CHECK(contains_root(cp, pair.lambda, 1e-6));
  }

  GenSpec spec;
  spec.order = 4;
  spec.dim = 2;
  spec.density = 0.6;
  spec.bipartition = IndexSet{1};
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    spec.seed = seed;
    Tensor A = gen_z_tensor(spec);
    CharPoly2 cp = char_poly_dim2(A);
    auto pairs = brute_force_h_eigenpairs(A, opts);
    for (const auto& pair : pairs) CHECK(contains_root(cp, pair.lambda, 1e-6));
  }

  // Converse on a family whose real roots all carry real eigenvectors:
  // diagonal tensors have spectrum {a, b} realized by coordinate vectors.
  for (auto [a, b] : std::vector<std::pair<double, double>>{
           {1.0, 2.0}, {0.5, 3.25}, {2.0, 2.0}}) {
    Tensor D = make_tensor(4, 2, {{{1, 1, 1, 1}, a}, {{2, 2, 2, 2}, b}});
    auto pairs = brute_force_h_eigenpairs(D, opts);
    for (const auto& [root, mult] : char_poly_dim2(D).roots()) {
      if (std::abs(root.imag()) > 1e-9) continue;
      bool found = false;
      for (const auto& pair : pairs)
        found = found || std::abs(pair.lambda - root.real()) <= opts.dedup_tol;
      CHECK(found);
    }
  }
}

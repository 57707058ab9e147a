#pragma once

#include <complex>
#include <vector>

#include "zt/rational.hpp"
#include "zt/tensor.hpp"

namespace zt {

/// Univariate polynomial with exact rational coefficients, ascending powers.
/// High-order zero coefficients are trimmed by arithmetic; the zero
/// polynomial is the empty vector.
struct RatPoly {
  std::vector<Rational> c;

  static RatPoly zero() { return {}; }
  static RatPoly constant(const Rational& a);
  static RatPoly variable();  // the monomial lambda

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational leading() const { return c.empty() ? Rational(0) : c.back(); }
  void trim();

  Rational eval(const Rational& x) const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);

/// Quotient of an exact division; throws if the division leaves a remainder.
RatPoly divide_exact(const RatPoly& num, const RatPoly& den);

RatPoly derivative(const RatPoly& p);

/// Monic gcd by the Euclidean algorithm over the rationals.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// p with repeated roots collapsed to simple ones: p / gcd(p, p').
RatPoly square_free_part(const RatPoly& p);

/// Characteristic polynomial of an order-m dimension-2 tensor: the Sylvester
/// resultant in lambda of the two eigen-equation binary forms. Its roots are
/// the full complex spectrum; the degree is 2(m-1).
struct CharPoly2 {
  int order = 2;
  /// Exactly 2(m-1)+1 rational coefficients, ascending. The leading one may
  /// vanish for degenerate tensors; it is recorded, never trimmed.
  std::vector<Rational> coeffs;
  bool degenerate = false;

  Eigen::VectorXd coeffs_double() const;
  int effective_degree() const;  // -1 for the identically-zero polynomial

  /// Distinct complex roots (from the square-free part, so they are
  /// well-conditioned) with exact multiplicities.
  std::vector<std::pair<std::complex<double>, int>> roots() const;
};

CharPoly2 char_poly_dim2(const Tensor& T);

/// Largest root modulus; 0 for a constant polynomial.
double max_root_modulus(const CharPoly2& p);

/// True when the two characteristic polynomials agree after normalizing
/// leading coefficients: with tol = 0 the comparison is exact over the
/// rationals, otherwise coefficients are compared as doubles within tol.
bool spectra_equal_dim2(const Tensor& A, const Tensor& B, double tol = 0.0);

/// Complex roots of a real-coefficient polynomial via the companion matrix.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& ascending);

}  // namespace zt

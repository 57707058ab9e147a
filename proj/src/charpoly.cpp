#include "zt/charpoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstddef>

namespace zt {

RatPoly RatPoly::constant(const Rational& a) {
  RatPoly p;
  if (!(a == 0)) p.c.push_back(a);
  return p;
}

RatPoly RatPoly::variable() {
  RatPoly p;
  p.c = {Rational(0), Rational(1)};
  return p;
}

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  RatPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.trim();
  return out;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  RatPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.trim();
  return out;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly::zero();
  RatPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

RatPoly divide_exact(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero())
    throw Error(Errc::DegeneratePolynomial, "division by the zero polynomial");
  RatPoly rem = num;
  RatPoly quot;
  if (num.degree() >= den.degree())
    quot.c.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1,
                  Rational(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / den.leading();
    quot.c[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < den.c.size(); ++i)
      rem.c[static_cast<std::size_t>(shift) + i] -= factor * den.c[i];
    rem.trim();
  }
  if (!rem.is_zero())
    throw Error(Errc::DegeneratePolynomial,
                "polynomial division left a remainder");
  quot.trim();
  return quot;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.c.size(); ++i)
    out.c.push_back(p.c[i] * Rational(static_cast<long>(i)));
  out.trim();
  return out;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    // remainder of a by b
    RatPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      Rational factor = r.leading() / b.leading();
      for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[static_cast<std::size_t>(shift) + i] -= factor * b.c[i];
      r.trim();
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational lead = a.leading();
    for (auto& coeff : a.c) coeff /= lead;
  }
  return a;
}

RatPoly square_free_part(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  RatPoly g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return p;
  return divide_exact(p, g);
}

namespace {

/// Determinant of a square matrix of polynomials by Bareiss fraction-free
/// elimination; every division along the way is exact.
RatPoly poly_determinant(std::vector<std::vector<RatPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return RatPoly::constant(Rational(1));
  int sign = 1;
  RatPoly prev = RatPoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return RatPoly::zero();
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] =
            divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = RatPoly::zero();
    }
    prev = a[k][k];
  }
  RatPoly det = a[n - 1][n - 1];
  if (sign < 0) det = RatPoly::zero() - det;
  return det;
}

}  // namespace

CharPoly2 char_poly_dim2(const Tensor& T) {
  if (T.dim() != 2)
    throw Error(Errc::DimensionMismatch,
                "characteristic polynomial is implemented for dimension 2");
  const int k = T.order() - 1;  // degree of each eigen-equation form

  // Row i of the eigen system as a binary form in (x1, x2):
  //   f_i = sum_e coeff[i][e] x1^e x2^(k-e)  -  lambda x_i^k
  // where e counts the 1s among the trailing indices of an entry.
  std::vector<std::vector<RatPoly>> coeff(
      2, std::vector<RatPoly>(static_cast<std::size_t>(k) + 1));
  for (const auto& [idx, val] : T.entries()) {
    int e = 0;
    for (std::size_t j = 1; j < idx.size(); ++j) e += idx[j] == 1;
    coeff[static_cast<std::size_t>(idx[0] - 1)][static_cast<std::size_t>(e)] =
        coeff[static_cast<std::size_t>(idx[0] - 1)][static_cast<std::size_t>(e)] +
        RatPoly::constant(Rational(val));
  }
  coeff[0][static_cast<std::size_t>(k)] =
      coeff[0][static_cast<std::size_t>(k)] - RatPoly::variable();
  coeff[1][0] = coeff[1][0] - RatPoly::variable();

  // Sylvester matrix of the two dehomogenized polynomials (x2 = 1), both
  // taken with formal degree k so the root at infinity is accounted for.
  const std::size_t size = 2 * static_cast<std::size_t>(k);
  std::vector<std::vector<RatPoly>> syl(size, std::vector<RatPoly>(size));
  for (std::size_t row = 0; row < static_cast<std::size_t>(k); ++row)
    for (int e = 0; e <= k; ++e)
      syl[row][row + static_cast<std::size_t>(k - e)] =
          coeff[0][static_cast<std::size_t>(e)];
  for (std::size_t row = 0; row < static_cast<std::size_t>(k); ++row)
    for (int e = 0; e <= k; ++e)
      syl[static_cast<std::size_t>(k) + row][row + static_cast<std::size_t>(k - e)] =
          coeff[1][static_cast<std::size_t>(e)];

  RatPoly det = poly_determinant(std::move(syl));

  CharPoly2 out;
  out.order = T.order();
  out.coeffs.assign(2 * static_cast<std::size_t>(k) + 1, Rational(0));
  for (std::size_t i = 0; i < det.c.size() && i < out.coeffs.size(); ++i)
    out.coeffs[i] = det.c[i];
  out.degenerate = out.coeffs.back() == 0;
  return out;
}

Eigen::VectorXd CharPoly2::coeffs_double() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = coeffs[i].get_d();
  return v;
}

int CharPoly2::effective_degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!(coeffs[static_cast<std::size_t>(i)] == 0)) return i;
  return -1;
}

std::vector<std::complex<double>> poly_roots(
    const std::vector<double>& ascending) {
  std::vector<double> c = ascending;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t d = c.size() - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) =
        -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    roots.push_back(solver.eigenvalues()(i));
  return roots;
}

std::vector<std::pair<std::complex<double>, int>> CharPoly2::roots() const {
  RatPoly p;
  p.c = coeffs;
  p.trim();
  if (p.is_zero() || p.degree() == 0) return {};

  // Multiplicity structure from the exact gcd chain: a root of multiplicity
  // r survives in the first r-1 gcds.
  std::vector<RatPoly> chain{p};
  while (chain.back().degree() > 0) {
    RatPoly g = poly_gcd(chain.back(), derivative(chain.back()));
    if (g.degree() == 0) break;
    chain.push_back(g);
  }

  RatPoly sf = square_free_part(p);
  std::vector<double> sfd(sf.c.size());
  for (std::size_t i = 0; i < sf.c.size(); ++i) sfd[i] = sf.c[i].get_d();
  auto simple = poly_roots(sfd);

  std::vector<std::pair<std::complex<double>, int>> out;
  for (const auto& r : simple) {
    int mult = 1;
    for (std::size_t level = 1; level < chain.size(); ++level) {
      // numeric evaluation of the exact chain polynomial at the root
      std::complex<double> acc(0, 0);
      for (auto it = chain[level].c.rbegin(); it != chain[level].c.rend(); ++it)
        acc = acc * r + std::complex<double>(it->get_d(), 0);
      if (std::abs(acc) < 1e-7 * std::max(1.0, std::pow(std::abs(r), chain[level].degree())))
        mult = static_cast<int>(level) + 1;
      else
        break;
    }
    out.emplace_back(r, mult);
  }
  return out;
}

double max_root_modulus(const CharPoly2& p) {
  double best = 0.0;
  for (const auto& [root, mult] : p.roots())
    best = std::max(best, std::abs(root));
  return best;
}

bool spectra_equal_dim2(const Tensor& A, const Tensor& B, double tol) {
  if (A.dim() != 2 || B.dim() != 2 || A.order() != B.order())
    throw Error(Errc::DimensionMismatch,
                "spectrum comparison needs two dimension-2 tensors of equal order");
  CharPoly2 pa = char_poly_dim2(A);
  CharPoly2 pb = char_poly_dim2(B);
  int da = pa.effective_degree();
  int db = pb.effective_degree();
  if (da < 0 || db < 0)
    throw Error(Errc::DegeneratePolynomial,
                "characteristic polynomial vanished identically");
  if (da != db) return false;
  Rational la = pa.coeffs[static_cast<std::size_t>(da)];
  Rational lb = pb.coeffs[static_cast<std::size_t>(db)];
  for (int i = 0; i <= da; ++i) {
    Rational qa = pa.coeffs[static_cast<std::size_t>(i)] / la;
    Rational qb = pb.coeffs[static_cast<std::size_t>(i)] / lb;
    if (tol == 0.0) {
      if (!(qa == qb)) return false;
    } else if (std::abs(qa.get_d() - qb.get_d()) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace zt

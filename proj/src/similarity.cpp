#include "zt/similarity.hpp"

#include <cmath>

#include "zt/structure.hpp"

namespace zt {

namespace {

constexpr std::size_t kWitnessCap = std::size_t(1) << kFreeVariableGuard;

template <typename Scalar, typename Vec>
BasicTensor<Scalar> transform_impl(const BasicTensor<Scalar>& A, const Vec& p) {
  const int m = A.order();
  BasicTensor<Scalar> out(m, A.dim());
  for (const auto& [idx, val] : A.entries()) {
    Scalar factor(1);
    for (std::size_t j = 1; j < idx.size(); ++j) factor *= p[idx[j] - 1];
    Scalar head(1);
    for (int e = 0; e < m - 1; ++e) head *= p[idx[0] - 1];
    out.set(idx, Scalar(val * factor / head));
  }
  return out;
}

}  // namespace

Tensor diag_similar_transform(const Tensor& A, const Eigen::VectorXd& p) {
  if (p.size() != A.dim())
    throw Error(Errc::DimensionMismatch, "scaling vector length mismatch");
  for (int i = 0; i < p.size(); ++i)
    if (p(i) == 0.0)
      throw Error(Errc::ZeroScaling, "diagonal scaling entries must be nonzero");
  return transform_impl(A, p);
}

ExactTensor diag_similar_transform(const ExactTensor& A,
                                   const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != A.dim())
    throw Error(Errc::DimensionMismatch, "scaling vector length mismatch");
  for (const auto& v : p)
    if (v == 0)
      throw Error(Errc::ZeroScaling, "diagonal scaling entries must be nonzero");
  return transform_impl(A, p);
}

bool verify_similarity(const Tensor& A, const Tensor& B,
                       const Eigen::VectorXd& p, double tol) {
  if (A.order() != B.order() || A.dim() != B.dim())
    throw Error(Errc::DimensionMismatch, "tensor shapes differ");
  Tensor transformed = diag_similar_transform(B, p);
  auto a = A.entries().begin();
  auto t = transformed.entries().begin();
  while (a != A.entries().end() || t != transformed.entries().end()) {
    double diff;
    if (a == A.entries().end()) {
      diff = t->second;
      ++t;
    } else if (t == transformed.entries().end() || a->first < t->first) {
      diff = a->second;
      ++a;
    } else if (t->first < a->first) {
      diff = t->second;
      ++t;
    } else {
      diff = t->second - a->second;
      ++a;
      ++t;
    }
    if (std::abs(diff) > tol) return false;
  }
  return true;
}

std::optional<SimilarityWitness> find_sign_similarity(const Tensor& A) {
  std::optional<ZDecomposition> split;
  try {
    split = z_decompose(A);
  } catch (const Error& e) {
    if (e.code() == Errc::PositiveOffDiagonal || e.code() == Errc::NegativeDiagonal)
      throw Error(Errc::NotZTensor, e.what());
    throw;
  }
  const ZDecomposition& zd = *split;
  if (!is_weakly_irreducible(zd.C))
    throw Error(Errc::NotWeaklyIrreducible,
                "the similarity theorem assumes a weakly irreducible C");

  // For odd order a sign matrix multiplies each C entry by an even number of
  // signs, so A and |A| can only be similar when the order is even.
  if (A.order() % 2 != 0) return std::nullopt;

  auto candidates = find_weak_bipartitions(zd.C, Parity::odd, 1);
  if (candidates.empty()) return std::nullopt;
  const IndexSet& V = candidates.front();

  SimilarityWitness w;
  w.p = Eigen::VectorXd::Ones(A.dim());
  for (int i : V) w.p(i - 1) = -1.0;
  w.restricted_to_signs = true;

  Tensor absT = compose(zd.d, zd.C, ComposeSign::plus);
  if (!verify_similarity(A, absT, w.p, 0.0))
    throw Error(Errc::InvalidArgument,
                "internal: sign witness failed exact verification");
  return w;
}

}  // namespace zt

#pragma once

#include <Eigen/Dense>

#include <optional>

#include "zt/rational.hpp"
#include "zt/tensor.hpp"

namespace zt {

/// Diagonal matrix P (stored by its diagonal p) realizing A = P^{-(m-1)} B P.
struct SimilarityWitness {
  Eigen::VectorXd p;
  bool restricted_to_signs = true;
};

/// P^{-(m-1)} A P for diagonal P: entrywise
///   b_{i1...im} = a_{i1...im} p_{i1}^{-(m-1)} p_{i2} ... p_{im}.
/// The sparsity pattern is preserved. All p_i must be nonzero.
Tensor diag_similar_transform(const Tensor& A, const Eigen::VectorXd& p);
ExactTensor diag_similar_transform(const ExactTensor& A,
                                   const std::vector<Rational>& p);

/// sup-norm comparison of diag_similar_transform(B, p) against A over the
/// union of the sparsity patterns.
bool verify_similarity(const Tensor& A, const Tensor& B,
                       const Eigen::VectorXd& p, double tol);

/// Searches for a sign matrix (p_i in {-1, +1}) making a Z-tensor diagonal
/// similar to its absolute tensor. Succeeds exactly when the order is even
/// and C admits a weak odd bipartition; sign arithmetic makes the returned
/// witness verify at tolerance 0.
std::optional<SimilarityWitness> find_sign_similarity(const Tensor& A);

}  // namespace zt

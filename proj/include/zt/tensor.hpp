#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "zt/error.hpp"

namespace zt {

/// 1-based index tuple; its length equals the owning tensor's order.
using IndexTuple = std::vector<int>;

/// Subset of [n] = {1, ..., n}.
using IndexSet = std::set<int>;

/// Dense enumeration of all dim^order tuples is refused above this bound.
inline constexpr std::int64_t kDenseIterationGuard = 10'000'000;

/// Exhaustive 2^n subset scans are refused above this dimension.
inline constexpr int kSubsetGuard = 20;

/// Enumeration of a GF(2) solution space is capped at 2^20 candidates.
inline constexpr int kFreeVariableGuard = 20;

/// Absolute tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

/// Absolute tolerance for iterative results.
inline constexpr double kIterativeTol = 1e-8;

enum class Parity { odd, even };

/// Sparse order-m dimension-n tensor over an arbitrary scalar.
///
/// Entries are literal positions: no symmetrization is applied, zero values
/// are never stored, and lookups of absent tuples yield 0. Instances are
/// treated as immutable values; all operations build new tensors, so sharing
/// across threads needs no synchronization.
template <typename Scalar>
class BasicTensor {
 public:
  using EntryMap = std::map<IndexTuple, Scalar>;

  BasicTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2)
      throw Error(Errc::InvalidArgument, "tensor order must be at least 2");
    if (dim < 1)
      throw Error(Errc::InvalidArgument, "tensor dimension must be at least 1");
  }

  /// Builds a tensor from raw (tuple, value) pairs. Zero values are dropped;
  /// repeating a tuple with the same value is tolerated, with a different
  /// value it is an error.
  static BasicTensor from_entries(
      int order, int dim,
      const std::vector<std::pair<IndexTuple, Scalar>>& raw) {
    BasicTensor t(order, dim);
    EntryMap seen;
    for (const auto& [idx, val] : raw) {
      t.check_tuple(idx);
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (!std::isfinite(val))
          throw Error(Errc::InvalidArgument,
                      "entry " + format_tuple(idx) + " is not finite");
      }
      auto [it, inserted] = seen.emplace(idx, val);
      if (!inserted && !(it->second == val))
        throw Error(Errc::DuplicateEntry,
                    "conflicting values for tuple " + format_tuple(idx));
      if (inserted && !(val == Scalar(0))) t.entries_.emplace(idx, val);
    }
    return t;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t entry_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const EntryMap& entries() const { return entries_; }

  /// Value at a tuple, 0 if absent.
  Scalar at(const IndexTuple& idx) const {
    check_tuple(idx);
    auto it = entries_.find(idx);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  /// Sets (or, with value 0, removes) one entry. Intended for builders;
  /// shared tensors should never be mutated.
  void set(const IndexTuple& idx, Scalar val) {
    check_tuple(idx);
    if (val == Scalar(0))
      entries_.erase(idx);
    else
      entries_[idx] = val;
  }

  bool operator==(const BasicTensor&) const = default;

  static std::string format_tuple(const IndexTuple& idx) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < idx.size(); ++j)
      os << idx[j] << (j + 1 < idx.size() ? "," : "");
    os << ')';
    return os.str();
  }

 private:
  void check_tuple(const IndexTuple& idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw Error(Errc::DimensionMismatch,
                  "tuple length " + std::to_string(idx.size()) +
                      " does not match order " + std::to_string(order_));
    for (int i : idx)
      if (i < 1 || i > dim_)
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside [1," +
                        std::to_string(dim_) + "]");
  }

  int order_;
  int dim_;
  EntryMap entries_;
};

using Tensor = BasicTensor<double>;

inline Tensor make_tensor(
    int order, int dim,
    const std::vector<std::pair<IndexTuple, double>>& raw) {
  return Tensor::from_entries(order, dim, raw);
}

namespace detail {

/// Visits every tuple in [1,dim]^order in lexicographic order.
template <typename Fn>
void for_each_tuple(int order, int dim, Fn&& fn) {
  IndexTuple idx(static_cast<std::size_t>(order), 1);
  while (true) {
    fn(const_cast<const IndexTuple&>(idx));
    int pos = order - 1;
    while (pos >= 0 && idx[pos] == dim) idx[pos--] = 1;
    if (pos < 0) break;
    ++idx[pos];
  }
}

inline std::int64_t dense_size(int order, int dim) {
  std::int64_t size = 1;
  for (int i = 0; i < order; ++i) {
    size *= dim;
    if (size > kDenseIterationGuard) return kDenseIterationGuard + 1;
  }
  return size;
}

inline void require_dense_ok(int order, int dim, const char* op) {
  if (dense_size(order, dim) > kDenseIterationGuard)
    throw Error(Errc::GuardExceeded,
                std::string(op) + " requires dense iteration over dim^order "
                                  "tuples, which exceeds the guard");
}

inline bool is_diagonal(const IndexTuple& idx) {
  for (std::size_t j = 1; j < idx.size(); ++j)
    if (idx[j] != idx[0]) return false;
  return true;
}

inline IndexTuple diagonal_tuple(int i, int order) {
  return IndexTuple(static_cast<std::size_t>(order), i);
}

}  // namespace detail

/// Multiplicity-counted size of V ∩ {i_1, ..., i_m}: each position of the
/// tuple whose index lies in V contributes 1, so duplicates count repeatedly.
inline int intersection_count(const IndexTuple& idx, const IndexSet& V) {
  int count = 0;
  for (int i : idx) count += static_cast<int>(V.count(i));
  return count;
}

/// T x^{m-1}: component i sums t_{i i_2...i_m} x_{i_2}...x_{i_m} over the
/// stored entries only.
inline Eigen::VectorXd apply(const Tensor& T, const Eigen::VectorXd& x) {
  if (x.size() != T.dim())
    throw Error(Errc::DimensionMismatch, "vector length does not match dim");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(T.dim());
  for (const auto& [idx, val] : T.entries()) {
    double p = val;
    for (std::size_t j = 1; j < idx.size(); ++j) p *= x(idx[j] - 1);
    y(idx[0] - 1) += p;
  }
  return y;
}

/// The scalar form T x^m = <x, T x^{m-1}>, summed directly over entries.
inline double power_form(const Tensor& T, const Eigen::VectorXd& x) {
  if (x.size() != T.dim())
    throw Error(Errc::DimensionMismatch, "vector length does not match dim");
  double s = 0;
  for (const auto& [idx, val] : T.entries()) {
    double p = val;
    for (int i : idx) p *= x(i - 1);
    s += p;
  }
  return s;
}

/// Entrywise absolute value; the sparsity pattern is preserved.
template <typename Scalar>
BasicTensor<Scalar> abs_tensor(const BasicTensor<Scalar>& T) {
  using std::abs;
  BasicTensor<Scalar> out(T.order(), T.dim());
  for (const auto& [idx, val] : T.entries()) out.set(idx, Scalar(abs(val)));
  return out;
}

/// The identity tensor I: ones on the diagonal, so I x^{m-1} = x^{[m-1]}.
template <typename Scalar = double>
BasicTensor<Scalar> identity_tensor(int order, int dim) {
  BasicTensor<Scalar> out(order, dim);
  for (int i = 1; i <= dim; ++i)
    out.set(detail::diagonal_tuple(i, order), Scalar(1));
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> scale(const BasicTensor<Scalar>& T, const Scalar& c) {
  BasicTensor<Scalar> out(T.order(), T.dim());
  if (c == Scalar(0)) return out;
  for (const auto& [idx, val] : T.entries()) out.set(idx, Scalar(c * val));
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> operator+(const BasicTensor<Scalar>& a,
                              const BasicTensor<Scalar>& b) {
  if (a.order() != b.order() || a.dim() != b.dim())
    throw Error(Errc::DimensionMismatch, "tensor shapes differ");
  BasicTensor<Scalar> out = a;
  for (const auto& [idx, val] : b.entries())
    out.set(idx, Scalar(out.at(idx) + val));
  return out;
}

template <typename Scalar>
BasicTensor<Scalar> operator-(const BasicTensor<Scalar>& a,
                              const BasicTensor<Scalar>& b) {
  if (a.order() != b.order() || a.dim() != b.dim())
    throw Error(Errc::DimensionMismatch, "tensor shapes differ");
  BasicTensor<Scalar> out = a;
  for (const auto& [idx, val] : b.entries())
    out.set(idx, Scalar(out.at(idx) - val));
  return out;
}

/// a(B + bI). Eigenpairs map as (lambda, x) -> (a(lambda + b), x); a = 0
/// collapses everything to the zero tensor.
inline Tensor shift(const Tensor& B, double a, double b) {
  Tensor out = scale(B, a);
  if (a == 0.0) return out;
  for (int i = 1; i <= B.dim(); ++i) {
    IndexTuple diag = detail::diagonal_tuple(i, B.order());
    out.set(diag, out.at(diag) + a * b);
  }
  return out;
}

/// True when the stored entry map is invariant under index permutations.
/// Checked exactly; never imposed.
template <typename Scalar>
bool is_symmetric(const BasicTensor<Scalar>& T) {
  for (const auto& [idx, val] : T.entries()) {
    IndexTuple perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      if (!(T.at(perm) == val)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

/// Splitting A = D - C of a Z-tensor with nonnegative diagonal: d holds the
/// diagonal of D and C is nonnegative with zero diagonal.
struct ZDecomposition {
  Eigen::VectorXd d;
  Tensor C;
};

inline ZDecomposition z_decompose(const Tensor& A) {
  ZDecomposition out{Eigen::VectorXd::Zero(A.dim()), Tensor(A.order(), A.dim())};
  for (const auto& [idx, val] : A.entries()) {
    if (detail::is_diagonal(idx)) {
      if (val < 0)
        throw Error(Errc::NegativeDiagonal,
                    "diagonal entry " + Tensor::format_tuple(idx) +
                        " is negative");
      out.d(idx[0] - 1) = val;
    } else {
      if (val > 0)
        throw Error(Errc::PositiveOffDiagonal,
                    "off-diagonal entry " + Tensor::format_tuple(idx) +
                        " is positive");
      out.C.set(idx, -val);
    }
  }
  return out;
}

enum class ComposeSign { minus, plus };

/// Rebuilds D - C (minus) or D + C = |A| (plus) from a decomposition.
inline Tensor compose(const Eigen::VectorXd& d, const Tensor& C,
                      ComposeSign sign) {
  if (d.size() != C.dim())
    throw Error(Errc::DimensionMismatch,
                "diagonal length does not match tensor dimension");
  for (const auto& [idx, val] : C.entries()) {
    if (detail::is_diagonal(idx))
      throw Error(Errc::InvalidDecomposition, "C has a nonzero diagonal entry");
    if (val < 0)
      throw Error(Errc::InvalidDecomposition, "C has a negative entry");
  }
  for (int i = 0; i < d.size(); ++i)
    if (d(i) < 0)
      throw Error(Errc::InvalidDecomposition, "diagonal entry is negative");

  Tensor out(C.order(), C.dim());
  double s = sign == ComposeSign::minus ? -1.0 : 1.0;
  for (const auto& [idx, val] : C.entries()) out.set(idx, s * val);
  for (int i = 1; i <= C.dim(); ++i)
    out.set(detail::diagonal_tuple(i, C.order()), d(i - 1));
  return out;
}

/// Validates that V is a nonempty proper subset of [n].
inline void check_subset(const IndexSet& V, int n) {
  if (V.empty())
    throw Error(Errc::InvalidSubset, "index subset is empty");
  if (static_cast<int>(V.size()) >= n)
    throw Error(Errc::InvalidSubset, "index subset must be proper");
  for (int i : V)
    if (i < 1 || i > n)
      throw Error(Errc::IndexOutOfRange,
                  "subset element " + std::to_string(i) + " outside [1," +
                      std::to_string(n) + "]");
}

}  // namespace zt

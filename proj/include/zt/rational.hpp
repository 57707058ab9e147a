#pragma once

#include <gmpxx.h>

#include <string>

#include "zt/tensor.hpp"

namespace zt {

/// Exact rational scalar. Every finite double converts exactly, so tensors
/// read from files always admit an exact representation.
using Rational = mpq_class;

using ExactTensor = BasicTensor<Rational>;

inline ExactTensor to_exact(const Tensor& T) {
  ExactTensor out(T.order(), T.dim());
  for (const auto& [idx, val] : T.entries()) out.set(idx, Rational(val));
  return out;
}

inline Tensor to_double(const ExactTensor& T) {
  Tensor out(T.order(), T.dim());
  for (const auto& [idx, val] : T.entries()) out.set(idx, val.get_d());
  return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace zt

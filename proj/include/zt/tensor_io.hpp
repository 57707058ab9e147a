#pragma once

#include <iosfwd>
#include <string>

#include "zt/tensor.hpp"

namespace zt {

/// Reads either format:
///   - JSON object {"order": m, "dim": n, "entries": [{"idx": [...], "val": v}]}
///   - plain text: optional "m n" header line, then lines "i1 i2 ... im value";
///     '#' starts a comment. Without a header, the order is taken from the
///     first entry line and the dimension from the largest index seen.
/// Indices are 1-based in both formats.
Tensor read_tensor(std::istream& in);
Tensor read_tensor_file(const std::string& path);

/// Writes the JSON format with entries sorted lexicographically by tuple.
void write_tensor(std::ostream& out, const Tensor& T);
void write_tensor_file(const std::string& path, const Tensor& T);

}  // namespace zt

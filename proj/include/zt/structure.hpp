#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zt/tensor.hpp"

namespace zt {

/// Weak bipartiteness: every stored (hence nonzero) entry has a
/// multiplicity-counted intersection with V of the requested parity.
bool is_weakly_odd_bipartite(const Tensor& T, const IndexSet& V);
bool is_weakly_even_bipartite(const Tensor& T, const IndexSet& V);

/// Strict bipartiteness: additionally, every tuple of the requested parity
/// carries a nonzero value. Requires dense iteration (guarded).
bool is_odd_bipartite(const Tensor& T, const IndexSet& V);
bool is_even_bipartite(const Tensor& T, const IndexSet& V);

/// All subsets V making T weakly bipartite of the given parity, computed
/// exactly by GF(2) elimination over one congruence per stored entry:
///   sum_j mult_j(idx) x_j = 1 (odd) or 0 (even)  (mod 2).
/// Returns up to `limit` nonempty proper subsets ordered by (cardinality,
/// lexicographic); the empty list is a certificate that none exists.
std::vector<IndexSet> find_weak_bipartitions(const Tensor& T, Parity parity,
                                             std::size_t limit);
std::vector<IndexSet> find_weak_odd_bipartitions(const Tensor& T,
                                                 std::size_t limit);

/// First subset (in detector order) passing the strict check, if any.
std::optional<IndexSet> find_bipartition(const Tensor& T, Parity parity);
std::optional<IndexSet> find_odd_bipartition(const Tensor& T);

/// Reducibility with respect to V: t_{i1 i2...im} = 0 whenever i1 is in V
/// and none of i2, ..., im is.
bool is_reducible_for(const Tensor& T, const IndexSet& V);

/// First reducing subset in (cardinality, lexicographic) order, if any.
/// Exhaustive over 2^n - 2 subsets; guarded by n <= kSubsetGuard.
std::optional<IndexSet> find_reducing_subset(const Tensor& T);
bool is_irreducible(const Tensor& T);

/// Undirected co-occurrence graph: edge (i, j), i != j, exactly when some
/// stored entry's tuple contains both i and j.
struct RepresentingGraph {
  int vertex_count = 0;
  std::set<std::pair<int, int>> edges;  // i < j
};

RepresentingGraph representing_graph(const Tensor& T);

/// True when the representing graph is connected on all n vertices.
bool is_weakly_irreducible(const Tensor& T);

}  // namespace zt

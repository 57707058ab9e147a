#include "zt/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace zt {

namespace {

bool parity_matches(int count, Parity p) {
  return (count % 2 == 1) == (p == Parity::odd);
}

bool weakly_bipartite(const Tensor& T, const IndexSet& V, Parity p) {
  check_subset(V, T.dim());
  for (const auto& entry : T.entries())
    if (!parity_matches(intersection_count(entry.first, V), p)) return false;
  return true;
}

bool strictly_bipartite(const Tensor& T, const IndexSet& V, Parity p) {
  check_subset(V, T.dim());
  detail::require_dense_ok(T.order(), T.dim(), "strict bipartite check");
  bool ok = true;
  detail::for_each_tuple(T.order(), T.dim(), [&](const IndexTuple& idx) {
    if (!ok) return;
    bool hit = parity_matches(intersection_count(idx, V), p);
    bool nonzero = T.entries().count(idx) > 0;
    if (hit != nonzero) ok = false;
  });
  return ok;
}

IndexSet mask_to_set(std::uint64_t mask, int n) {
  IndexSet V;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1u) V.insert(i + 1);
  return V;
}

bool subset_order(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Streams nonempty proper subsets of [n] in (cardinality, lex) order.
std::vector<IndexSet> leading_subsets(int n, std::size_t limit) {
  std::vector<IndexSet> out;
  for (int k = 1; k < n && out.size() < limit; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i + 1;
    while (out.size() < limit) {
      out.emplace_back(comb.begin(), comb.end());
      int pos = k - 1;
      while (pos >= 0 && comb[pos] == n - k + pos + 1) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (int j = pos + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

bool is_weakly_odd_bipartite(const Tensor& T, const IndexSet& V) {
  return weakly_bipartite(T, V, Parity::odd);
}

bool is_weakly_even_bipartite(const Tensor& T, const IndexSet& V) {
  return weakly_bipartite(T, V, Parity::even);
}

bool is_odd_bipartite(const Tensor& T, const IndexSet& V) {
  return strictly_bipartite(T, V, Parity::odd);
}

bool is_even_bipartite(const Tensor& T, const IndexSet& V) {
  return strictly_bipartite(T, V, Parity::even);
}

std::vector<IndexSet> find_weak_bipartitions(const Tensor& T, Parity parity,
                                             std::size_t limit) {
  const int n = T.dim();
  if (limit == 0) return {};
  if (n > 63)
    throw Error(Errc::GuardExceeded, "bitset rows support at most 63 indices");

  // With no entries the congruence system is vacuous and every nonempty
  // proper subset qualifies.
  if (T.empty()) return leading_subsets(n, limit);

  // One row per entry: variable bits 0..n-1, affine bit at position n.
  const std::uint64_t rhs_bit = std::uint64_t(1) << n;
  const std::uint64_t var_mask = rhs_bit - 1;
  std::set<std::uint64_t> eqs;
  for (const auto& entry : T.entries()) {
    std::uint64_t row = 0;
    for (int i : entry.first) row ^= std::uint64_t(1) << (i - 1);
    if (parity == Parity::odd) row ^= rhs_bit;
    eqs.insert(row);
  }

  // Reduced row echelon form over GF(2).
  std::vector<std::uint64_t> pivot_row(static_cast<std::size_t>(n), 0);
  for (std::uint64_t row : eqs) {
    for (int b = 0; b < n; ++b)
      if ((row >> b & 1u) && pivot_row[b]) row ^= pivot_row[b];
    if ((row & var_mask) == 0) {
      if (row & rhs_bit) return {};  // inconsistent: certified no solution
      continue;
    }
    int p = std::countr_zero(row & var_mask);
    for (int b = 0; b < n; ++b)
      if (b != p && pivot_row[b] && (pivot_row[b] >> p & 1u))
        pivot_row[b] ^= row;
    pivot_row[p] = row;
  }

  std::vector<int> free_vars;
  for (int b = 0; b < n; ++b)
    if (!pivot_row[b]) free_vars.push_back(b);
  if (free_vars.size() > static_cast<std::size_t>(kFreeVariableGuard))
    throw Error(Errc::GuardExceeded,
                "solution space enumeration exceeds 2^" +
                    std::to_string(kFreeVariableGuard));

  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  std::vector<IndexSet> solutions;
  for (std::uint64_t combo = 0; combo < (std::uint64_t(1) << free_vars.size());
       ++combo) {
    std::uint64_t sol = 0;
    for (std::size_t j = 0; j < free_vars.size(); ++j)
      if (combo >> j & 1u) sol |= std::uint64_t(1) << free_vars[j];
    for (int b = 0; b < n; ++b) {
      if (!pivot_row[b]) continue;
      std::uint64_t row = pivot_row[b];
      int x = static_cast<int>(row >> n & 1u) ^
              (std::popcount((row & var_mask & ~(std::uint64_t(1) << b)) & sol) & 1);
      if (x) sol |= std::uint64_t(1) << b;
    }
    if (sol != 0 && sol != full) solutions.push_back(mask_to_set(sol, n));
  }
  std::sort(solutions.begin(), solutions.end(), subset_order);
  if (solutions.size() > limit) solutions.resize(limit);
  return solutions;
}

std::vector<IndexSet> find_weak_odd_bipartitions(const Tensor& T,
                                                 std::size_t limit) {
  return find_weak_bipartitions(T, Parity::odd, limit);
}

std::optional<IndexSet> find_bipartition(const Tensor& T, Parity parity) {
  detail::require_dense_ok(T.order(), T.dim(), "strict bipartite search");
  // A strict bipartition is in particular a weak one, so the GF(2)
  // candidates are exhaustive.
  auto candidates =
      find_weak_bipartitions(T, parity, std::size_t(1) << kFreeVariableGuard);
  for (const auto& V : candidates)
    if (strictly_bipartite(T, V, parity)) return V;
  return std::nullopt;
}

std::optional<IndexSet> find_odd_bipartition(const Tensor& T) {
  return find_bipartition(T, Parity::odd);
}

bool is_reducible_for(const Tensor& T, const IndexSet& V) {
  check_subset(V, T.dim());
  for (const auto& entry : T.entries()) {
    const IndexTuple& idx = entry.first;
    if (!V.count(idx[0])) continue;
    bool tail_outside = true;
    for (std::size_t j = 1; j < idx.size(); ++j)
      if (V.count(idx[j])) {
        tail_outside = false;
        break;
      }
    if (tail_outside) return false;
  }
  return true;
}

std::optional<IndexSet> find_reducing_subset(const Tensor& T) {
  const int n = T.dim();
  if (n > kSubsetGuard)
    throw Error(Errc::GuardExceeded,
                "exhaustive reducibility scan limited to dimension " +
                    std::to_string(kSubsetGuard));
  // Per-entry bit masks make each subset test a couple of AND operations.
  struct EntryMask {
    std::uint32_t head;
    std::uint32_t tail;
  };
  std::vector<EntryMask> masks;
  masks.reserve(T.entry_count());
  for (const auto& entry : T.entries()) {
    const IndexTuple& idx = entry.first;
    std::uint32_t tail = 0;
    for (std::size_t j = 1; j < idx.size(); ++j)
      tail |= std::uint32_t(1) << (idx[j] - 1);
    masks.push_back({std::uint32_t(1) << (idx[0] - 1), tail});
  }
  std::optional<IndexSet> best;
  for (std::uint32_t V = 1; V + 1 < (std::uint32_t(1) << n); ++V) {
    bool reducible = true;
    for (const auto& m : masks)
      if ((m.head & V) && !(m.tail & V)) {
        reducible = false;
        break;
      }
    if (reducible) {
      IndexSet set = mask_to_set(V, n);
      if (!best || subset_order(set, *best)) best = std::move(set);
    }
  }
  return best;
}

bool is_irreducible(const Tensor& T) {
  if (T.dim() == 1) return true;  // no nonempty proper subsets exist
  return !find_reducing_subset(T).has_value();
}

RepresentingGraph representing_graph(const Tensor& T) {
  RepresentingGraph g;
  g.vertex_count = T.dim();
  for (const auto& entry : T.entries()) {
    IndexTuple distinct = entry.first;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (std::size_t a = 0; a < distinct.size(); ++a)
      for (std::size_t b = a + 1; b < distinct.size(); ++b)
        g.edges.emplace(distinct[a], distinct[b]);
  }
  return g;
}

bool is_weakly_irreducible(const Tensor& T) {
  const int n = T.dim();
  if (n == 1) return true;
  RepresentingGraph g = representing_graph(T);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::queue<int> frontier;
  frontier.push(1);
  seen[1] = true;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
  }
  return reached == n;
}

}  // namespace zt

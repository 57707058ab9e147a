#include "zt/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "zt/charpoly.hpp"
#include "zt/prng.hpp"
#include "zt/similarity.hpp"
#include "zt/tensor_io.hpp"

namespace zt {

namespace {

using detail::gaussian;
using detail::mix_seed;
using detail::u01;
using detail::uniform;

constexpr double kEqualityTol = 1e-6;
constexpr double kStrictGapTol = 1e-8;
constexpr int kGenRetries = 200;

IndexSet complement(const IndexSet& V, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i)
    if (!V.count(i)) out.insert(i);
  return out;
}

IndexSet random_proper_subset(int n, std::mt19937_64& rng) {
  while (true) {
    std::uint64_t mask = rng() & ((std::uint64_t(1) << n) - 1);
    if (mask == 0 || mask == (std::uint64_t(1) << n) - 1) continue;
    IndexSet V;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) V.insert(i + 1);
    return V;
  }
}

/// General random tensor: support sampled over all tuples, values of random
/// sign when mixed_signs is set.
Tensor gen_random_tensor(int m, int n, double density, bool mixed_signs,
                         std::mt19937_64& rng) {
  Tensor T(m, n);
  detail::for_each_tuple(m, n, [&](const IndexTuple& idx) {
    double keep = u01(rng);
    double mag = uniform(rng, 0.2, 1.2);
    double sgn = (mixed_signs && u01(rng) < 0.5) ? -1.0 : 1.0;
    if (keep < density) T.set(idx, sgn * mag);
  });
  return T;
}

/// Strictly bipartite tensor: nonzero exactly on the tuples whose
/// multiplicity-counted intersection with V has the requested parity.
Tensor gen_dense_bipartite(int m, int n, const IndexSet& V, Parity parity,
                           std::mt19937_64& rng) {
  Tensor T(m, n);
  detail::for_each_tuple(m, n, [&](const IndexTuple& idx) {
    bool odd = intersection_count(idx, V) % 2 == 1;
    if (odd == (parity == Parity::odd)) T.set(idx, uniform(rng, 0.2, 1.2));
  });
  return T;
}

/// One-sided reachability digraph of the stored entries (leading index to
/// trailing indices). Strong connectivity of this graph guarantees a
/// positive fixed point for the shifted power iteration.
bool digraph_strongly_connected(const Tensor& T) {
  const int n = T.dim();
  if (n == 1) return true;
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> bwd(static_cast<std::size_t>(n) + 1);
  for (const auto& entry : T.entries()) {
    const IndexTuple& idx = entry.first;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      fwd[idx[0]].push_back(idx[j]);
      bwd[idx[j]].push_back(idx[0]);
    }
  }
  auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

Eigen::VectorXd random_diag(int n, std::pair<double, double> range,
                            std::mt19937_64& rng) {
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = uniform(rng, range.first, range.second);
  return d;
}

enum class TrialStatus { pass, fail, inconclusive };

struct TrialResult {
  TrialStatus status = TrialStatus::pass;
  std::string detail;
  std::optional<Tensor> counterexample;

  static TrialResult passed() { return {}; }
  static TrialResult failed(std::string d, std::optional<Tensor> t = {}) {
    return {TrialStatus::fail, std::move(d), std::move(t)};
  }
  static TrialResult undecided(std::string d, std::optional<Tensor> t = {}) {
    return {TrialStatus::inconclusive, std::move(d), std::move(t)};
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string set_to_string(const IndexSet& V) {
  std::ostringstream os;
  os << '{';
  for (auto it = V.begin(); it != V.end(); ++it)
    os << (it == V.begin() ? "" : ",") << *it;
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Individual checks. Each function consumes the trial's seeded generator and
// returns one verdict; the driver owns tallying and serialization.
// ---------------------------------------------------------------------------

TrialResult check_duality(std::mt19937_64& rng, int m, int n,
                          const CheckConfig& cfg) {
  Tensor T(m, n);
  if (u01(rng) < 0.5) {
    T = gen_random_tensor(m, n, cfg.density, true, rng);
  } else {
    // Support restricted to odd-count tuples for a random V, signs mixed:
    // duality is a statement about sparsity patterns, not about signs.
    IndexSet V = random_proper_subset(n, rng);
    detail::for_each_tuple(m, n, [&](const IndexTuple& idx) {
      if (intersection_count(idx, V) % 2 == 0) return;
      double keep = u01(rng);
      double val = uniform(rng, 0.2, 1.2) * (u01(rng) < 0.5 ? -1.0 : 1.0);
      if (keep < 0.7) T.set(idx, val);
    });
  }
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    IndexSet V;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) V.insert(i + 1);
    IndexSet W = complement(V, n);
    if (is_odd_bipartite(T, V) != is_even_bipartite(T, W))
      return TrialResult::failed("strict duality mismatch at V=" + set_to_string(V), T);
    if (is_weakly_odd_bipartite(T, V) != is_weakly_even_bipartite(T, W))
      return TrialResult::failed("weak duality mismatch at V=" + set_to_string(V), T);
  }
  return TrialResult::passed();
}

TrialResult check_oddbip_irreducible(std::mt19937_64& rng, int m, int n,
                                     const CheckConfig&) {
  IndexSet V = random_proper_subset(n, rng);
  Tensor T = gen_dense_bipartite(m, n, V, Parity::odd, rng);
  if (!is_odd_bipartite(T, V))
    return TrialResult::failed("generator postcondition violated", T);
  if (!is_irreducible(T))
    return TrialResult::failed("odd-bipartite tensor reported reducible", T);
  return TrialResult::passed();
}

TrialResult check_evenbip_reducible(std::mt19937_64& rng, int m, int n,
                                    const CheckConfig&) {
  IndexSet V = random_proper_subset(n, rng);
  Tensor T = gen_dense_bipartite(m, n, V, Parity::even, rng);
  if (!is_even_bipartite(T, V))
    return TrialResult::failed("generator postcondition violated", T);
  if (!is_reducible_for(T, V))
    return TrialResult::failed("even-bipartite tensor not reducible for V", T);
  return TrialResult::passed();
}

TrialResult check_weakly_irreducible(std::mt19937_64& rng, int m, int n,
                                     const CheckConfig& cfg) {
  IndexSet V = random_proper_subset(n, rng);
  Tensor C = gen_dense_bipartite(m, n, V, Parity::odd, rng);
  Eigen::VectorXd d = random_diag(n, {0.0, 2.0}, rng);
  Tensor A = compose(d, C, ComposeSign::minus);
  Tensor absA = compose(d, C, ComposeSign::plus);
  (void)cfg;
  if (!is_weakly_irreducible(A) || !is_weakly_irreducible(absA))
    return TrialResult::failed("A or |A| not weakly irreducible", A);
  return TrialResult::passed();
}

/// Shared verdict for the equality checks: the sign-flip pair certifies
/// lambda(|A|) as an H-eigenvalue of A; the oracle (when in range) guards the
/// other side of the equality.
TrialResult equality_verdict(const Tensor& A, const ZComparison& cmp,
                             const SolverOptions& solver, bool run_oracle) {
  if (cmp.z_method == SolveMethod::sign_flip) {
    if (!(cmp.z_pair.residual <= solver.tol))
      return TrialResult::failed("flipped pair failed residual validation", A);
  }
  double diff = std::abs(cmp.z_pair.lambda - cmp.abs_pair.lambda);
  if (cmp.z_method == SolveMethod::brute_force) {
    if (cmp.z_pair.lambda > cmp.abs_pair.lambda + kEqualityTol) {
      if (cmp.abs_method == SolveMethod::brute_force)
        return TrialResult::undecided("oracle exceeded an oracle-sourced "
                                      "lambda(|A|); abs side may be incomplete",
                                      A);
      return TrialResult::failed(
          "lambda(A)=" + fmt(cmp.z_pair.lambda) +
              " exceeds certified lambda(|A|)=" + fmt(cmp.abs_pair.lambda),
          A);
    }
    if (diff > kEqualityTol)
      return TrialResult::undecided(
          "oracle found lambda(A)=" + fmt(cmp.z_pair.lambda) + " short of " +
              fmt(cmp.abs_pair.lambda) + "; oracle may have missed the top",
          A);
  }
  if (run_oracle && A.dim() <= 4 && A.order() <= 6) {
    auto pairs = brute_force_h_eigenpairs(A, solver);
    if (!pairs.empty() &&
        pairs.front().lambda > cmp.abs_pair.lambda + kEqualityTol) {
      if (cmp.abs_method == SolveMethod::brute_force)
        return TrialResult::undecided("oracle exceeded oracle-sourced abs side", A);
      return TrialResult::failed(
          "oracle eigenvalue " + fmt(pairs.front().lambda) +
              " exceeds lambda(|A|)=" + fmt(cmp.abs_pair.lambda),
          A);
    }
  }
  if (diff > kEqualityTol && cmp.z_method != SolveMethod::brute_force)
    return TrialResult::failed("largest H-eigenvalues differ by " + fmt(diff), A);
  return TrialResult::passed();
}

TrialResult check_eq_odd_bipartite(std::mt19937_64& rng, int m, int n,
                                   const CheckConfig& cfg) {
  IndexSet V = random_proper_subset(n, rng);
  Tensor C = gen_dense_bipartite(m, n, V, Parity::odd, rng);
  Eigen::VectorXd d = random_diag(n, {0.5, 2.5}, rng);
  Tensor A = compose(d, C, ComposeSign::minus);
  ZComparison cmp = compare_z(A, cfg.solver);
  if (!cmp.bipartition)
    return TrialResult::failed("detector found no bipartition for an "
                               "odd-bipartite C",
                               A);
  return equality_verdict(A, cmp, cfg.solver, true);
}

Tensor gen_weak_bipartite_z(std::mt19937_64& rng, int m, int n, double density,
                            std::uint64_t trial_seed) {
  IndexSet V = random_proper_subset(n, rng);
  GenSpec spec;
  spec.order = m;
  spec.dim = n;
  spec.density = density;
  spec.bipartition = V;
  spec.require_weakly_irreducible = true;
  // Resample until the reachability digraph of C is strongly connected; the
  // shifted power iteration then has a positive fixed point and converges
  // geometrically, which keeps large batches inside the time budget.
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    spec.seed = mix_seed(trial_seed, 7000 + static_cast<std::uint64_t>(attempt));
    Tensor A = gen_z_tensor(spec);
    if (digraph_strongly_connected(z_decompose(A).C)) return A;
  }
  throw Error(Errc::RetriesExhausted,
              "no strongly connected sample at this density");
}

TrialResult check_eq_weak_bipartite(std::mt19937_64& rng, int m, int n,
                                    const CheckConfig& cfg,
                                    std::uint64_t trial_seed) {
  Tensor A = gen_weak_bipartite_z(rng, m, n, cfg.density, trial_seed);
  ZComparison cmp = compare_z(A, cfg.solver);
  if (!cmp.bipartition)
    return TrialResult::failed("detector lost the construction bipartition", A);
  return equality_verdict(A, cmp, cfg.solver, false);
}

/// Symmetric C sampled by index multiset, rejected until it is weakly
/// irreducible and (when requested) has no weak odd bipartition at all.
std::optional<Tensor> gen_symmetric_c(std::mt19937_64& rng, int m, int n,
                                      double density, bool forbid_bipartition) {
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    Tensor C(m, n);
    detail::for_each_tuple(m, n, [&](const IndexTuple& idx) {
      if (!std::is_sorted(idx.begin(), idx.end())) return;
      if (detail::is_diagonal(idx)) return;
      bool keep = u01(rng) < density;
      double val = uniform(rng, 0.2, 1.2);
      if (!keep) return;
      IndexTuple perm = idx;
      do {
        C.set(perm, val);
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
    if (C.empty() || !is_weakly_irreducible(C)) continue;
    if (forbid_bipartition &&
        !find_weak_odd_bipartitions(C, 1).empty())
      continue;
    return C;
  }
  return std::nullopt;
}

// Reverse direction of the equality theorem: weakly irreducible C with a
// certified-empty GF(2) solution space must leave a strict gap.
TrialResult check_iff_reverse(std::mt19937_64& rng, int m, int n,
                              const CheckConfig& cfg) {
  int nn = std::min(n, 4);
  auto C = gen_symmetric_c(rng, m, nn, 0.45, true);
  if (!C)
    return TrialResult::undecided("no non-bipartite sample at this density");
  Eigen::VectorXd d = random_diag(nn, {0.5, 2.5}, rng);
  Tensor A = compose(d, *C, ComposeSign::minus);
  Tensor absA = compose(d, *C, ComposeSign::plus);

  double rho_abs;
  bool rho_certified = true;
  try {
    rho_abs = power_iteration_rho(absA, cfg.solver).lambda;
  } catch (const Error& e) {
    if (e.code() != Errc::MaxItersExceeded) throw;
    auto pairs = brute_force_h_eigenpairs(absA, cfg.solver);
    if (pairs.empty()) return TrialResult::undecided("no eigenpair for |A|", A);
    rho_abs = pairs.front().lambda;
    rho_certified = false;
  }
  auto pairs = brute_force_h_eigenpairs(A, cfg.solver);
  if (pairs.empty())
    return TrialResult::undecided("oracle found no eigenpair of A", A);
  double gap = rho_abs - pairs.front().lambda;
  if (gap > kStrictGapTol) return TrialResult::passed();
  if (gap < -kStrictGapTol && rho_certified)
    return TrialResult::failed(
        "lambda(A)=" + fmt(pairs.front().lambda) + " meets rho(|A|)=" +
            fmt(rho_abs) + " with no bipartition (residual " +
            fmt(pairs.front().residual) + ")",
        A);
  return TrialResult::undecided("gap " + fmt(gap) + " below the 1e-8 margin", A);
}

TrialResult check_iff(std::mt19937_64& rng, int m, int n,
                      const CheckConfig& cfg, std::uint64_t trial_seed) {
  if (u01(rng) < 0.5)
    return check_eq_weak_bipartite(rng, m, std::min(n, 4), cfg, trial_seed);
  return check_iff_reverse(rng, m, n, cfg);
}

TrialResult check_odd_sufficient(std::mt19937_64& rng, int m, int n,
                                 const CheckConfig& cfg,
                                 std::uint64_t trial_seed, bool even_variant) {
  IndexSet V = random_proper_subset(n, rng);
  // The even-bipartite corollary is the dual statement: weakly even-bipartite
  // on V with rows vanishing off V is weakly odd-bipartite on the complement
  // with rows vanishing there.
  IndexSet target = even_variant ? complement(V, n) : V;

  GenSpec spec;
  spec.order = m;
  spec.dim = n;
  spec.density = 0.5;
  spec.bipartition = target;
  spec.vanishing_rows = target;
  Tensor A(m, n);
  bool nonempty = false;
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    spec.seed = mix_seed(trial_seed, 9000 + static_cast<std::uint64_t>(attempt));
    A = gen_z_tensor(spec);
    if (!z_decompose(A).C.empty()) {
      nonempty = true;
      break;
    }
  }
  if (!nonempty)
    return TrialResult::undecided("no admissible C support at this size");
  Tensor C = z_decompose(A).C;
  if (even_variant && !is_weakly_even_bipartite(C, V))
    return TrialResult::failed("generator lost weak even-bipartiteness", A);
  ZComparison cmp = compare_z(A, cfg.solver);
  return equality_verdict(A, cmp, cfg.solver, false);
}

TrialResult check_sign_similarity(std::mt19937_64& rng, int m, int n,
                                  const CheckConfig& cfg,
                                  std::uint64_t trial_seed) {
  bool want_bipartite = u01(rng) < 0.5;
  Tensor C(m, n);
  if (want_bipartite) {
    Tensor A = gen_weak_bipartite_z(rng, m, n, cfg.density, trial_seed);
    C = z_decompose(A).C;
  } else {
    auto sym = gen_symmetric_c(rng, m, n, 0.45, true);
    if (!sym) return TrialResult::undecided("no non-bipartite sample");
    C = *sym;
  }
  Eigen::VectorXd d = random_diag(n, {0.5, 2.0}, rng);
  Tensor A = compose(d, C, ComposeSign::minus);
  Tensor absA = compose(d, C, ComposeSign::plus);

  bool bipartition_exists = !find_weak_odd_bipartitions(C, 1).empty();
  bool expected = (m % 2 == 0) && bipartition_exists;
  auto witness = find_sign_similarity(A);
  if (witness.has_value() != expected)
    return TrialResult::failed(std::string("sign-similarity witness ") +
                                   (witness ? "present" : "absent") +
                                   " but the theorem predicts the opposite",
                               A);
  if (witness && !verify_similarity(A, absA, witness->p, 0.0))
    return TrialResult::failed("witness failed exact verification", A);
  return TrialResult::passed();
}

TrialResult check_spec_equal(std::mt19937_64& rng, int m, int n,
                             const CheckConfig& cfg, std::uint64_t trial_seed) {
  Tensor A = gen_weak_bipartite_z(rng, m, n, 0.5, trial_seed);
  ZDecomposition zd = z_decompose(A);
  Tensor absA = compose(zd.d, zd.C, ComposeSign::plus);
  (void)cfg;
  auto witness = find_sign_similarity(A);
  if (!witness)
    return TrialResult::failed("expected a sign-similarity witness", A);
  CharPoly2 pa = char_poly_dim2(A);
  CharPoly2 pb = char_poly_dim2(absA);
  if (pa.coeffs != pb.coeffs)
    return TrialResult::failed("characteristic polynomials differ exactly", A);
  if (!spectra_equal_dim2(A, absA, 0.0))
    return TrialResult::failed("normalized spectra comparison disagreed", A);
  return TrialResult::passed();
}

TrialResult check_rho_iff(std::mt19937_64& rng, int m, int n,
                          const CheckConfig&, std::uint64_t trial_seed) {
  // Mixed family of symmetric instances, roughly half admitting a weak odd
  // bipartition.
  bool want_bipartite = u01(rng) < 0.5;
  std::optional<Tensor> C;
  for (int attempt = 0; attempt < kGenRetries && !C; ++attempt) {
    auto sym = gen_symmetric_c(rng, m, n, 0.55, false);
    if (!sym) break;
    bool has = !find_weak_odd_bipartitions(*sym, 1).empty();
    if (has == want_bipartite) C = sym;
  }
  if (!C) return TrialResult::undecided("no sample matching the branch");
  Eigen::VectorXd d = random_diag(n, {0.5, 2.5}, rng);
  (void)trial_seed;
  Tensor A = compose(d, *C, ComposeSign::minus);
  Tensor absA = compose(d, *C, ComposeSign::plus);

  double rho_a = max_root_modulus(char_poly_dim2(A));
  double rho_b = max_root_modulus(char_poly_dim2(absA));
  bool spec_eq = spectra_equal_dim2(A, absA, 0.0);
  double diff = std::abs(rho_a - rho_b);
  if (diff > 1e-9 && diff < 1e-7)
    return TrialResult::undecided("rho difference " + fmt(diff) +
                                  " inside the numeric margin");
  bool rho_eq = diff <= 1e-9;
  if (rho_eq != spec_eq)
    return TrialResult::failed("rho equality " + std::string(rho_eq ? "holds" : "fails") +
                                   " but spectrum equality " +
                                   (spec_eq ? "holds" : "fails"),
                               A);
  return TrialResult::passed();
}

TrialResult check_shift_law(std::mt19937_64& rng, int m, int n,
                            const CheckConfig& cfg) {
  Tensor B = gen_random_tensor(m, n, 0.4, true, rng);
  double a = 0.0;
  while (std::abs(a) < 0.05) a = uniform(rng, -2.0, 2.0);
  double b = uniform(rng, -2.0, 2.0);
  auto pairs = brute_force_h_eigenpairs(B, cfg.solver);
  if (pairs.empty())
    return TrialResult::undecided("oracle found no eigenpair of B");
  Tensor S = shift(B, a, b);
  for (const auto& pair : pairs) {
    double mu = a * (pair.lambda + b);
    double resid = eigen_residual(S, mu, pair.x);
    if (resid > 1e-8)
      return TrialResult::failed("mapped pair residual " + fmt(resid), B);
    // Recover the eigenvalue from the dominant component's ratio.
    Eigen::VectorXd y = apply(S, pair.x);
    Eigen::Index i = 0;
    pair.x.cwiseAbs().maxCoeff(&i);
    double xi = std::pow(pair.x(i), m - 1);
    double mu_hat = y(i) / xi;
    if (std::abs(mu_hat - mu) > 1e-9)
      return TrialResult::failed("mapped eigenvalue off by " +
                                     fmt(std::abs(mu_hat - mu)),
                                 B);
  }
  return TrialResult::passed();
}

struct CheckDef {
  const char* id;
  const char* summary;
  std::vector<int> orders;
  std::vector<int> dims;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"L-dual", "odd order: odd-bipartite on V iff even-bipartite on the complement",
       {3, 5}, {2, 3, 4, 5}},
      {"T-oddbip-irred", "even order: odd-bipartite implies irreducible",
       {4}, {2, 3, 4, 5, 6}},
      {"T-evenbip-red", "even-bipartite implies reducible for the same V",
       {3, 4, 5}, {2, 3, 4, 5}},
      {"C-weakirred", "even order, C odd-bipartite: A and |A| weakly irreducible",
       {4}, {2, 3, 4, 5}},
      {"T-eq-odd", "even order, C odd-bipartite: lambda(A) = lambda(|A|)",
       {4}, {2, 3, 4}},
      {"T-eq-weak", "even order, C weakly odd-bipartite: lambda(A) = lambda(|A|)",
       {4}, {3, 4, 5}},
      {"T-iff", "even order, C weakly irreducible: equality iff weakly odd-bipartite",
       {4}, {3, 4}},
      {"T-iff-reverse", "even order, no weak odd bipartition: strict spectral gap",
       {4}, {3, 4}},
      {"T-odd-suff", "odd order, vanishing rows on V: lambda(A) = lambda(|A|)",
       {3, 5}, {2, 3}},
      {"C-odd-even", "odd order, weakly even-bipartite variant with vanishing rows off V",
       {3, 5}, {2, 3}},
      {"T-sign-sim", "sign similarity iff even order and a weak odd bipartition",
       {3, 4, 5}, {2, 3, 4}},
      {"C-spec-eq", "dimension 2: sign-similar pairs share the characteristic polynomial",
       {4}, {2}},
      {"T-rho-iff", "dimension 2: rho equality iff spectrum equality",
       {4}, {2}},
      {"P-shift", "eigenpairs of B map to eigenpairs of a(B + bI)",
       {3, 4}, {2, 3}},
  };
  return defs;
}

TrialResult dispatch(const std::string& id, std::mt19937_64& rng, int m, int n,
                     const CheckConfig& cfg, std::uint64_t trial_seed) {
  if (id == "L-dual") return check_duality(rng, m, n, cfg);
  if (id == "T-oddbip-irred") return check_oddbip_irreducible(rng, m, n, cfg);
  if (id == "T-evenbip-red") return check_evenbip_reducible(rng, m, n, cfg);
  if (id == "C-weakirred") return check_weakly_irreducible(rng, m, n, cfg);
  if (id == "T-eq-odd") return check_eq_odd_bipartite(rng, m, n, cfg);
  if (id == "T-eq-weak") return check_eq_weak_bipartite(rng, m, n, cfg, trial_seed);
  if (id == "T-iff") return check_iff(rng, m, n, cfg, trial_seed);
  if (id == "T-iff-reverse") return check_iff_reverse(rng, m, n, cfg);
  if (id == "T-odd-suff")
    return check_odd_sufficient(rng, m, n, cfg, trial_seed, false);
  if (id == "C-odd-even")
    return check_odd_sufficient(rng, m, n, cfg, trial_seed, true);
  if (id == "T-sign-sim") return check_sign_similarity(rng, m, n, cfg, trial_seed);
  if (id == "C-spec-eq") return check_spec_equal(rng, m, n, cfg, trial_seed);
  if (id == "T-rho-iff") return check_rho_iff(rng, m, n, cfg, trial_seed);
  if (id == "P-shift") return check_shift_law(rng, m, n, cfg);
  throw Error(Errc::UnknownTheorem, "no registered check named " + id);
}

std::vector<int> intersect_or_default(const std::vector<int>& requested,
                                      const std::vector<int>& allowed) {
  if (requested.empty()) return allowed;
  std::vector<int> out;
  for (int v : requested)
    if (std::find(allowed.begin(), allowed.end(), v) != allowed.end())
      out.push_back(v);
  return out;
}

}  // namespace

Tensor gen_z_tensor(const GenSpec& spec) {
  if (spec.density <= 0.0 || spec.density > 1.0)
    throw Error(Errc::InvalidArgument, "density must lie in (0, 1]");
  if (spec.diag_range.first < 0 || spec.diag_range.second < spec.diag_range.first)
    throw Error(Errc::InvalidArgument, "diagonal range must satisfy 0 <= lo <= hi");
  if (spec.offdiag_range.first < 0 ||
      spec.offdiag_range.second < spec.offdiag_range.first)
    throw Error(Errc::InvalidArgument, "off-diagonal range must satisfy 0 <= lo <= hi");
  if (spec.bipartition) check_subset(*spec.bipartition, spec.dim);
  if (spec.symmetric && spec.vanishing_rows)
    throw Error(Errc::InvalidArgument,
                "symmetric sampling cannot honor vanishing rows");
  detail::require_dense_ok(spec.order, spec.dim, "tensor generation");

  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    Tensor C(spec.order, spec.dim);
    auto admissible = [&](const IndexTuple& idx) {
      if (detail::is_diagonal(idx)) return false;
      if (spec.bipartition &&
          intersection_count(idx, *spec.bipartition) % 2 == 0)
        return false;
      if (spec.vanishing_rows && spec.vanishing_rows->count(idx[0])) return false;
      return true;
    };
    detail::for_each_tuple(spec.order, spec.dim, [&](const IndexTuple& idx) {
      if (spec.symmetric && !std::is_sorted(idx.begin(), idx.end())) return;
      if (!admissible(idx)) return;
      bool keep = u01(rng) < spec.density;
      double val =
          uniform(rng, spec.offdiag_range.first, spec.offdiag_range.second);
      if (!keep || val == 0.0) return;
      if (spec.symmetric) {
        IndexTuple perm = idx;
        do {
          C.set(perm, val);
        } while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        C.set(idx, val);
      }
    });
    if (spec.require_weakly_irreducible && !is_weakly_irreducible(C)) continue;
    Eigen::VectorXd d(spec.dim);
    for (int i = 0; i < spec.dim; ++i)
      d(i) = uniform(rng, spec.diag_range.first, spec.diag_range.second);
    return compose(d, C, ComposeSign::minus);
  }
  throw Error(Errc::RetriesExhausted,
              "generator could not satisfy the constraints; the density may "
              "be too low to connect the representing graph");
}

std::vector<std::string> registered_theorems() {
  std::vector<std::string> ids;
  for (const auto& def : registry()) ids.emplace_back(def.id);
  return ids;
}

std::string theorem_summary(const std::string& id) {
  for (const auto& def : registry())
    if (id == def.id) return def.summary;
  throw Error(Errc::UnknownTheorem, "no registered check named " + id);
}

TheoremReport check_theorem(const std::string& id, const CheckConfig& cfg) {
  const CheckDef* def = nullptr;
  for (const auto& d : registry())
    if (id == d.id) def = &d;
  if (!def) throw Error(Errc::UnknownTheorem, "no registered check named " + id);

  std::vector<int> orders = intersect_or_default(cfg.orders, def->orders);
  std::vector<int> dims = intersect_or_default(cfg.dims, def->dims);
  if (orders.empty() || dims.empty())
    throw Error(Errc::InvalidArgument,
                "requested sizes do not overlap the check's admissible sizes");

  TheoremReport report;
  report.theorem_id = id;
  report.trials = cfg.trials;
  auto t0 = std::chrono::steady_clock::now();
  for (int t = 0; t < cfg.trials; ++t) {
    std::uint64_t trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(trial_seed);
    int m = orders[rng() % orders.size()];
    int n = dims[rng() % dims.size()];
    TrialResult result;
    try {
      result = dispatch(id, rng, m, n, cfg, trial_seed);
    } catch (const Error& e) {
      result = TrialResult::undecided(std::string("error: ") + e.what());
    }
    switch (result.status) {
      case TrialStatus::pass:
        ++report.passes;
        break;
      case TrialStatus::inconclusive:
        ++report.inconclusive;
        break;
      case TrialStatus::fail: {
        TrialFailure failure;
        failure.seed = trial_seed;
        failure.detail = result.detail;
        if (result.counterexample) {
          std::filesystem::create_directories(cfg.report_dir);
          failure.tensor_path = cfg.report_dir + "/" + id + "-seed" +
                                std::to_string(trial_seed) + ".tensor";
          write_tensor_file(failure.tensor_path, *result.counterexample);
        }
        report.failures.push_back(std::move(failure));
        break;
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

Tensor paper_example(int which) {
  switch (which) {
    case 1:
      return make_tensor(5, 3,
                         {{{1, 1, 1, 1, 1}, 1.0},
                          {{2, 2, 2, 2, 2}, 1.0},
                          {{3, 3, 3, 3, 3}, 1.0},
                          {{1, 1, 1, 2, 2}, -1.0},
                          {{2, 2, 2, 3, 3}, -1.0}});
    case 2:
      return make_tensor(5, 3,
                         {{{1, 1, 1, 1, 1}, 1.0},
                          {{2, 2, 2, 2, 2}, 1.0},
                          {{3, 3, 3, 3, 3}, 3.0},
                          {{1, 1, 3, 3, 3}, -1.0},
                          {{2, 2, 3, 3, 3}, -2.0}});
    case 3:
      return make_tensor(5, 3,
                         {{{1, 1, 1, 1, 1}, 1.0},
                          {{2, 2, 2, 2, 2}, 2.0},
                          {{3, 3, 3, 3, 3}, 4.0},
                          {{1, 1, 1, 2, 2}, -1.0},
                          {{1, 1, 3, 3, 3}, -1.0},
                          {{2, 2, 2, 3, 3}, -2.0}});
    case 4:
      return make_tensor(4, 2,
                         {{{1, 1, 1, 1}, 1.0},
                          {{2, 2, 2, 2}, 1.0},
                          {{1, 1, 2, 2}, -1.0}});
    default:
      throw Error(Errc::InvalidArgument, "examples are numbered 1 to 4");
  }
}

std::vector<TheoremReport> regression_suite(const SolverOptions& opts) {
  struct Fixture {
    int which;
    double lambda;
    bool expect_bipartition;
    std::optional<IndexSet> expected_set;
  };
  const std::vector<Fixture> fixtures = {
      {1, 1.0, true, std::nullopt},
      {2, 3.0, true, IndexSet{3}},
      {3, 4.0, false, std::nullopt},
      {4, 1.0, false, std::nullopt},
  };

  std::vector<TheoremReport> reports;
  for (const auto& fx : fixtures) {
    TheoremReport report;
    report.theorem_id = "EX-" + std::to_string(fx.which);
    report.trials = 1;
    auto t0 = std::chrono::steady_clock::now();
    Tensor A = paper_example(fx.which);
    std::string problem;
    try {
      ZDecomposition zd = z_decompose(A);
      auto found = find_weak_odd_bipartitions(zd.C, 64);
      if (fx.expect_bipartition && found.empty())
        problem = "expected a weak odd bipartition, found none";
      if (!fx.expect_bipartition && !found.empty())
        problem = "expected no weak odd bipartition";
      if (fx.expected_set &&
          std::find(found.begin(), found.end(), *fx.expected_set) == found.end())
        problem = "expected bipartition {3} among the solutions";
      if (problem.empty()) {
        ZComparison cmp = compare_z(A, opts);
        if (std::abs(cmp.z_pair.lambda - fx.lambda) > 1e-8)
          problem = "lambda(A) = " + fmt(cmp.z_pair.lambda) + ", expected " +
                    fmt(fx.lambda);
        else if (std::abs(cmp.abs_pair.lambda - fx.lambda) > 1e-8)
          problem = "lambda(|A|) = " + fmt(cmp.abs_pair.lambda) +
                    ", expected " + fmt(fx.lambda);
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      report.passes = 1;
    } else {
      report.failures.push_back({0, "", problem});
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    reports.push_back(std::move(report));
  }
  return reports;
}

void write_reports_json(std::ostream& out,
                        const std::vector<TheoremReport>& reports) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"seed", f.seed},
                          {"tensor", f.tensor_path},
                          {"detail", f.detail}});
    doc.push_back({{"theorem", r.theorem_id},
                   {"trials", r.trials},
                   {"passes", r.passes},
                   {"inconclusive", r.inconclusive},
                   {"failures", failures},
                   {"wall_seconds", r.wall_seconds}});
  }
  out << doc.dump(2) << '\n';
}

std::string report_to_text(const TheoremReport& r) {
  std::ostringstream os;
  os << r.theorem_id << ": " << r.passes << "/" << r.trials << " passed";
  if (r.inconclusive) os << ", " << r.inconclusive << " inconclusive";
  if (!r.failures.empty()) os << ", " << r.failures.size() << " FAILED";
  os.precision(3);
  os << " (" << r.wall_seconds << " s)";
  for (const auto& f : r.failures) {
    os << "\n  seed " << f.seed << ": " << f.detail;
    if (!f.tensor_path.empty()) os << " [" << f.tensor_path << "]";
  }
  return os.str();
}

}  // namespace zt

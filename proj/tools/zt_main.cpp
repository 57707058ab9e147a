// Command-line front end: loads tensors, runs the structural detectors and
// eigenvalue solvers, compares a Z-tensor with its absolute tensor, searches
// sign similarities and drives the randomized theorem checks.
//
// Exit codes: 0 success / predicate true, 1 predicate false or check failure,
// 2 input or parse error, 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zt/charpoly.hpp"
#include "zt/harness.hpp"
#include "zt/rational.hpp"
#include "zt/similarity.hpp"
#include "zt/spectra.hpp"
#include "zt/structure.hpp"
#include "zt/tensor_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string set_str(const zt::IndexSet& V) {
  std::string s = "{";
  for (auto it = V.begin(); it != V.end(); ++it)
    s += (it == V.begin() ? "" : ",") + std::to_string(*it);
  return s + "}";
}

json set_json(const zt::IndexSet& V) { return json(std::vector<int>(V.begin(), V.end())); }

json pair_json(const zt::EigenPair& p) {
  return json{{"lambda", p.lambda},
              {"x", std::vector<double>(p.x.data(), p.x.data() + p.x.size())},
              {"residual", p.residual},
              {"iterations", p.iterations}};
}

void print_pair(const std::string& label, const zt::EigenPair& p) {
  std::cout << label << ": lambda = " << num(p.lambda) << "  residual = "
            << num(p.residual) << "  iterations = " << p.iterations << "\n  x = (";
  for (int i = 0; i < p.x.size(); ++i)
    std::cout << (i ? ", " : "") << num(p.x(i));
  std::cout << ")\n";
}

struct CommonOpts {
  std::string format = "human";
  zt::SolverOptions solver;
};

bool structured(const CommonOpts& o) { return o.format == "structured"; }

int classify(const zt::Error& e) {
  switch (e.code()) {
    case zt::Errc::ParseError:
    case zt::Errc::IoError:
    case zt::Errc::InvalidArgument:
    case zt::Errc::IndexOutOfRange:
    case zt::Errc::DuplicateEntry:
    case zt::Errc::DimensionMismatch:
    case zt::Errc::InvalidSubset:
    case zt::Errc::UnknownTheorem:
      return kExitInput;
    default:
      return kExitNumeric;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural and spectral analysis of Z-tensors and their absolute tensors"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  CommonOpts common;
  app.add_option("--format", common.format, "Output format: human or structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--tol", common.solver.tol, "Solver tolerance")->capture_default_str();
  app.add_option("--seed", common.solver.seed, "Random seed")->capture_default_str();
  app.add_option("--starts", common.solver.starts, "Newton oracle starts")
      ->capture_default_str();
  app.add_option("--max-iters", common.solver.max_iters, "Power iteration cap")
      ->capture_default_str();

  std::string path;
  double compare_tol = 1e-8;
  std::string kind = "odd";
  bool strict = false;
  std::size_t limit = 10;
  std::string method = "auto";
  std::string theorem_id;
  bool list_theorems = false;
  int trials = 100;
  std::vector<int> dims, orders;
  double density = 0.3;
  std::string report_dir = "reports";

  auto* inspect = app.add_subcommand("inspect", "Shape, symmetry, Z-form and irreducibility summary");
  inspect->add_option("file", path)->required();

  auto* bipartite = app.add_subcommand("bipartite", "Detect (weakly) odd/even bipartitions");
  bipartite->add_option("file", path)->required();
  bipartite->add_option("--kind", kind, "odd or even")
      ->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
  bipartite->add_flag("--strict", strict, "Require the strict (dense) property");
  bipartite->add_option("--limit", limit, "Maximum number of witnesses")->capture_default_str();

  auto* irreducible = app.add_subcommand("irreducible", "Exhaustive reducibility verdict");
  irreducible->add_option("file", path)->required();

  auto* eig = app.add_subcommand("eig", "Largest H-eigenvalue / eigenpair list");
  eig->add_option("file", path)->required();
  eig->add_option("--method", method, "auto, power or brute")
      ->check(CLI::IsMember({"auto", "power", "brute"}))->capture_default_str();

  auto* compare = app.add_subcommand("compare", "lambda(A) against lambda(|A|)");
  compare->add_option("file", path)->required();
  compare->add_option("--equality-tol", compare_tol, "Equality tolerance")->capture_default_str();

  auto* similar = app.add_subcommand("similar", "Sign diagonal similarity between A and |A|");
  similar->add_option("file", path)->required();

  auto* charpoly = app.add_subcommand("charpoly", "Dimension-2 characteristic polynomial");
  charpoly->add_option("file", path)->required();

  auto* verify = app.add_subcommand("verify", "Randomized theorem checks");
  verify->add_option("--theorem", theorem_id, "Registered check id");
  verify->add_flag("--list", list_theorems, "List registered checks");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--dims", dims, "Dimensions to draw from");
  verify->add_option("--orders", orders, "Orders to draw from");
  verify->add_option("--density", density)->capture_default_str();
  verify->add_option("--report-dir", report_dir)->capture_default_str();

  auto* regression = app.add_subcommand("regression", "The four fixed worked examples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inspect->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      bool sym = zt::is_symmetric(T);
      bool zform = true;
      std::string zreason;
      try {
        zt::z_decompose(T);
      } catch (const zt::Error& e) {
        zform = false;
        zreason = e.what();
      }
      bool weakly_irred = zt::is_weakly_irreducible(T);
      if (structured(common)) {
        std::cout << json{{"order", T.order()}, {"dim", T.dim()},
                          {"entries", T.entry_count()}, {"symmetric", sym},
                          {"z_tensor", zform},
                          {"weakly_irreducible", weakly_irred}}.dump(2)
                  << "\n";
      } else {
        std::cout << "order " << T.order() << ", dim " << T.dim() << ", "
                  << T.entry_count() << " stored entries\n"
                  << "symmetric:           " << (sym ? "yes" : "no") << "\n"
                  << "Z-tensor form:       " << (zform ? "yes" : "no (" + zreason + ")") << "\n"
                  << "weakly irreducible:  " << (weakly_irred ? "yes" : "no") << "\n";
      }
      return kExitTrue;
    }

    if (bipartite->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      zt::Parity parity = kind == "odd" ? zt::Parity::odd : zt::Parity::even;
      std::vector<zt::IndexSet> witnesses;
      if (strict) {
        auto w = zt::find_bipartition(T, parity);
        if (w) witnesses.push_back(*w);
      } else {
        witnesses = zt::find_weak_bipartitions(T, parity, limit);
      }
      if (structured(common)) {
        json out = json::array();
        for (const auto& V : witnesses) out.push_back(set_json(V));
        std::cout << json{{"kind", kind}, {"strict", strict}, {"witnesses", out}}.dump(2)
                  << "\n";
      } else if (witnesses.empty()) {
        std::cout << "none\n";
      } else {
        for (const auto& V : witnesses) std::cout << set_str(V) << "\n";
      }
      return witnesses.empty() ? kExitFalse : kExitTrue;
    }

    if (irreducible->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      auto witness = zt::find_reducing_subset(T);
      bool irred = T.dim() == 1 || !witness;
      if (structured(common)) {
        json out{{"irreducible", irred}};
        if (witness) out["reducing_subset"] = set_json(*witness);
        std::cout << out.dump(2) << "\n";
      } else if (irred) {
        std::cout << "irreducible\n";
      } else {
        std::cout << "reducible for V = " << set_str(*witness) << "\n";
      }
      return irred ? kExitTrue : kExitFalse;
    }

    if (eig->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      if (method == "power") {
        zt::EigenPair p = zt::power_iteration_rho(T, common.solver);
        if (structured(common))
          std::cout << json{{"method", "power-iteration"}, {"pair", pair_json(p)}}.dump(2) << "\n";
        else
          print_pair("rho (power iteration)", p);
        return kExitTrue;
      }
      if (method == "brute") {
        auto pairs = zt::brute_force_h_eigenpairs(T, common.solver);
        if (structured(common)) {
          json out = json::array();
          for (const auto& p : pairs) out.push_back(pair_json(p));
          std::cout << json{{"method", "brute-force"}, {"pairs", out}}.dump(2) << "\n";
        } else {
          std::cout << pairs.size() << " eigenpair(s) found\n";
          for (const auto& p : pairs) print_pair("pair", p);
        }
        if (pairs.empty()) throw zt::Error(zt::Errc::NoEigenpairFound, "no eigenpair found");
        return kExitTrue;
      }
      // auto: Z-form dispatch, then nonnegative power iteration, then oracle
      try {
        zt::z_decompose(T);
        zt::EigenPair p = zt::largest_h_eigenvalue_z(T, common.solver);
        if (structured(common))
          std::cout << json{{"method", "z-largest"}, {"pair", pair_json(p)}}.dump(2) << "\n";
        else
          print_pair("lambda(A)", p);
        return kExitTrue;
      } catch (const zt::Error& e) {
        if (e.code() != zt::Errc::PositiveOffDiagonal &&
            e.code() != zt::Errc::NegativeDiagonal)
          throw;
      }
      auto pairs = zt::brute_force_h_eigenpairs(T, common.solver);
      if (pairs.empty()) throw zt::Error(zt::Errc::NoEigenpairFound, "no eigenpair found");
      if (structured(common)) {
        json out = json::array();
        for (const auto& p : pairs) out.push_back(pair_json(p));
        std::cout << json{{"method", "brute-force"}, {"pairs", out}}.dump(2) << "\n";
      } else {
        for (const auto& p : pairs) print_pair("pair", p);
      }
      return kExitTrue;
    }

    if (compare->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      zt::ZComparison cmp = zt::compare_z(T, common.solver);
      double diff = std::abs(cmp.z_pair.lambda - cmp.abs_pair.lambda);
      bool equal = diff <= compare_tol;
      if (structured(common)) {
        json out{{"lambda_z", pair_json(cmp.z_pair)},
                 {"lambda_abs", pair_json(cmp.abs_pair)},
                 {"z_method", zt::solve_method_name(cmp.z_method)},
                 {"abs_method", zt::solve_method_name(cmp.abs_method)},
                 {"difference", diff},
                 {"equal", equal}};
        if (cmp.bipartition) out["bipartition"] = set_json(*cmp.bipartition);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "lambda(A)   = " << num(cmp.z_pair.lambda) << "  ["
                  << zt::solve_method_name(cmp.z_method)
                  << ", residual " << num(cmp.z_pair.residual) << "]\n";
        std::cout << "lambda(|A|) = " << num(cmp.abs_pair.lambda) << "  ["
                  << zt::solve_method_name(cmp.abs_method)
                  << ", residual " << num(cmp.abs_pair.residual) << "]\n";
        if (cmp.bipartition)
          std::cout << "bipartition witness V = " << set_str(*cmp.bipartition) << "\n";
        std::cout << (equal ? "equal" : "different")
                  << " (|difference| = " << num(diff) << ")\n";
      }
      return equal ? kExitTrue : kExitFalse;
    }

    if (similar->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      auto witness = zt::find_sign_similarity(T);
      if (structured(common)) {
        json out{{"similar", witness.has_value()}};
        if (witness)
          out["p"] = std::vector<double>(witness->p.data(),
                                         witness->p.data() + witness->p.size());
        std::cout << out.dump(2) << "\n";
      } else if (witness) {
        std::cout << "p = (";
        for (int i = 0; i < witness->p.size(); ++i)
          std::cout << (i ? ", " : "") << num(witness->p(i));
        std::cout << ")\n";
      } else {
        std::cout << "none\n";
      }
      return witness ? kExitTrue : kExitFalse;
    }

    if (charpoly->parsed()) {
      zt::Tensor T = zt::read_tensor_file(path);
      zt::CharPoly2 cp = zt::char_poly_dim2(T);
      auto roots = cp.roots();
      if (structured(common)) {
        json coeffs = json::array();
        for (const auto& c : cp.coeffs) coeffs.push_back(zt::to_string(c));
        json rootlist = json::array();
        for (const auto& [r, mult] : roots)
          rootlist.push_back({{"re", r.real()}, {"im", r.imag()}, {"multiplicity", mult}});
        std::cout << json{{"degree", static_cast<int>(cp.coeffs.size()) - 1},
                          {"degenerate", cp.degenerate},
                          {"coefficients", coeffs},
                          {"roots", rootlist}}.dump(2)
                  << "\n";
      } else {
        std::cout << "degree " << cp.coeffs.size() - 1
                  << (cp.degenerate ? " (leading coefficient vanished)" : "") << "\n";
        for (std::size_t i = 0; i < cp.coeffs.size(); ++i)
          std::cout << "  lambda^" << i << ": " << zt::to_string(cp.coeffs[i])
                    << " = " << num(cp.coeffs[i].get_d()) << "\n";
        for (const auto& [r, mult] : roots) {
          std::cout << "root " << num(r.real());
          if (r.imag() != 0) std::cout << (r.imag() > 0 ? " + " : " - ")
                                       << num(std::abs(r.imag())) << "i";
          std::cout << "  (multiplicity " << mult << ")\n";
        }
      }
      return kExitTrue;
    }

    if (verify->parsed()) {
      if (list_theorems) {
        for (const auto& id : zt::registered_theorems())
          std::cout << id << ": " << zt::theorem_summary(id) << "\n";
        return kExitTrue;
      }
      if (theorem_id.empty())
        throw zt::Error(zt::Errc::InvalidArgument, "verify needs --theorem or --list");
      zt::CheckConfig cfg;
      cfg.trials = trials;
      cfg.seed = common.solver.seed;
      cfg.orders = orders;
      cfg.dims = dims;
      cfg.density = density;
      cfg.report_dir = report_dir;
      cfg.solver = common.solver;
      zt::TheoremReport report = zt::check_theorem(theorem_id, cfg);
      if (structured(common))
        zt::write_reports_json(std::cout, {report});
      else
        std::cout << zt::report_to_text(report) << "\n";
      return report.failures.empty() ? kExitTrue : kExitFalse;
    }

    if (regression->parsed()) {
      auto reports = zt::regression_suite(common.solver);
      bool ok = true;
      if (structured(common)) {
        zt::write_reports_json(std::cout, reports);
        for (const auto& r : reports) ok = ok && r.failures.empty();
      } else {
        for (const auto& r : reports) {
          std::cout << zt::report_to_text(r) << "\n";
          ok = ok && r.failures.empty();
        }
      }
      return ok ? kExitTrue : kExitFalse;
    }
  } catch (const zt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInput;
}

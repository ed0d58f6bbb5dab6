#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <sstream>

#include "fockcalc/cli/app.hpp"
#include "fockcalc/errors.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/theorems.hpp"

namespace fockcalc::cli {

namespace {

struct SymbolFlags {
  std::string weight_scale = "1";
  std::string weight_rate = "0";
  std::string map_a = "1";
  std::string map_b = "0";
  std::string map_r = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("--weight-scale", weight_scale, "weight = scale * exp(rate z)");
    cmd->add_option("--weight-rate", weight_rate);
    cmd->add_option("--map-a", map_a, "map (a z + b) / (r z + 1)");
    cmd->add_option("--map-b", map_b);
    cmd->add_option("--map-r", map_r, "nonzero r makes the map linear fractional");
  }

  WcoSymbol symbol() const {
    if (parse_complex(map_r) != Complex{}) {
      throw PreconditionError("matrix: linear fractional maps have no finite section; use an affine map");
    }
    return {WcoWeight::exp_linear(parse_complex(weight_scale), parse_complex(weight_rate)),
            AffineMap(parse_complex(map_a), parse_complex(map_b))};
  }
};

RunConfig make_config(double alpha, const std::vector<int>& orders, std::optional<std::uint64_t> seed,
                      const std::string& format, const std::vector<std::string>& tols, const char* env_seed) {
  RunConfig cfg;
  cfg.alpha = alpha;
  if (!orders.empty()) cfg.orders = orders;
  cfg.seed = resolve_seed(seed, env_seed);
  cfg.output_format = parse_format(format);
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("--tol expects name=value, got '" + t + "'");
    const std::string name = t.substr(0, eq);
    if (!find_checker(name) && name != "oracle") throw PreconditionError("--tol names unknown check '" + name + "'");
    cfg.tolerance_overrides[name] = parse_real(t.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

CheckReport run_oracle(const RunConfig& cfg, int order, int up_to, int panels, int points, int angular,
                       const SymbolFlags& flags) {
  const FockParams params(cfg.alpha, order);
  if (up_to < 0) up_to = order;
  const QuadratureGrid grid(params, panels, points, angular);
  const double err = oracle_monomial_error(grid, up_to);
  const double refined = oracle_monomial_error(grid.refined(), up_to);

  const WcoSymbol sym = flags.symbol();
  const auto exact = assemble_matrix(sym, params);
  const int entries = std::min(up_to, 8);
  double entry_gap = 0.0;
  for (int n = 0; n <= entries; ++n) {
    for (int m = 0; m <= entries; ++m) {
      entry_gap = std::max(entry_gap, std::abs(quad_matrix_entry(sym, n, m, grid) - exact(m, n)));
    }
  }

  CheckReport report("oracle", {{"alpha", cfg.alpha},
                                {"order", order},
                                {"cutoff_radius", grid.cutoff_radius()},
                                {"radial_nodes", grid.radial_nodes().size()},
                                {"angular_count", grid.angular_count()},
                                {"up_to", up_to}});
  const double tol = cfg.tol("oracle", 1e-8);
  report.add_residual(order, err, "max |<e_n, e_m>_quad - delta_nm|", tol);
  report.add_residual(order, refined, "same, radial nodes doubled", tol, Bound::Measured);
  report.add_residual(order, entry_gap, "max |quad_matrix_entry - assemble_matrix|, n, m <= 8", tol);
  // Below ~1e-13 both rules sit at the rounding floor.
  report.add_condition("refinement does not increase the error", refined <= std::max(err, 1e-13));
  return report.finalize();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_seed) {
  CLI::App app{"Numerical checks for weighted composition operators on the Fock space"};
  app.name("fockcalc");
  app.require_subcommand(1);
  app.allow_extras();

  double alpha = kDefaultAlpha;
  std::vector<int> orders;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::vector<std::string> tols;
  app.add_option("--alpha", alpha, "Gaussian weight parameter (default 1)");
  app.add_option("--orders", orders, "truncation orders, comma separated (default 16,32,64)")->delimiter(',');
  app.add_option("--seed", seed, "sample seed (default FOCKCALC_SEED, else 42)");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", tols, "tolerance override name=value, repeatable");

  auto* check = app.add_subcommand("check", "run one checker; checker flags follow as --key value");
  std::string check_name;
  check->add_option("name", check_name, "checker name (see `list`)")->required();
  check->allow_extras()->fallthrough();

  auto* suite = app.add_subcommand("suite", "run every checker over its default grid")->fallthrough();
  auto* list = app.add_subcommand("list", "list checkers and their flags")->fallthrough();

  auto* matrix = app.add_subcommand("matrix", "dump the finite section as CSV")->fallthrough();
  SymbolFlags matrix_flags;
  matrix_flags.attach(matrix);
  std::optional<int> matrix_order;
  matrix->add_option("--order", matrix_order, "truncation order N, the matrix is (N+1)x(N+1)");

  auto* oracle = app.add_subcommand("oracle", "quadrature oracle against the exact inner product")->fallthrough();
  SymbolFlags oracle_flags;
  oracle_flags.weight_rate = "0.5";
  oracle_flags.map_a = "0.25";
  oracle_flags.map_b = "0.5";
  oracle_flags.attach(oracle);
  int oracle_order = 16;
  int up_to = -1;
  int panels = 32;
  int points = 16;
  int angular = 0;
  oracle->add_option("--order", oracle_order, "truncation order N (default 16)");
  oracle->add_option("--up-to", up_to, "largest monomial degree compared (default N)");
  oracle->add_option("--panels", panels, "radial panels (default 32)");
  oracle->add_option("--points", points, "Gauss-Legendre points per panel (default 16)");
  oracle->add_option("--angular", angular, "angular points M (default max(64, 2N + 2))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "fockcalc: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::vector<std::string> extras = app.remaining();
    if (!check->parsed() && !extras.empty()) throw PreconditionError("unexpected argument '" + extras.front() + "'");
    const RunConfig cfg = make_config(alpha, orders, seed, format, tols, env_seed);

    if (check->parsed()) {
      const Checker* checker = find_checker(check_name);
      if (!checker) throw PreconditionError("unknown checker '" + check_name + "' (see `fockcalc list`)");
      const CheckReport report = run_checker(*checker, ParamMap::from_args(extras), cfg);
      out << render(report, cfg.output_format);
      return exit_code(report.verdict());
    }
    if (suite->parsed()) {
      const SuiteResult result = run_suite(cfg);
      out << render(result, cfg, cfg.output_format);
      return exit_code(result.verdict);
    }
    if (list->parsed()) {
      for (const auto& c : registry()) {
        out << c.name << "  " << c.summary << "\n   ";
        for (const auto& k : c.keys) out << " --" << k;
        out << "\n";
      }
      return 0;
    }
    if (matrix->parsed()) {
      const WcoSymbol sym = matrix_flags.symbol();
      const FockParams params(cfg.alpha, matrix_order.value_or(cfg.orders.front()));
      if (boundedness_check(sym.affine_map()) == Boundedness::Unbounded) {
        err << "warning: Unbounded composition operator, the finite section does not converge\n";
      }
      assemble_matrix(sym, params).write_csv(out);
      return 0;
    }
    if (oracle->parsed()) {
      const CheckReport report = run_oracle(cfg, oracle_order, up_to, panels, points, angular, oracle_flags);
      out << render(report, cfg.output_format);
      return exit_code(report.verdict());
    }
  } catch (const std::invalid_argument& e) {
    err << "fockcalc: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "fockcalc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fockcalc::cli

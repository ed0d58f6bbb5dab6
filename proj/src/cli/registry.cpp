#include <algorithm>
#include <sstream>

#include "fockcalc/cli/app.hpp"
#include "fockcalc/errors.hpp"
#include "fockcalc/theorems.hpp"

namespace fockcalc::cli {

namespace {

ParamMap grid_entry(std::map<std::string, std::string> values) { return ParamMap(std::move(values)); }

const std::vector<std::string> kSymbolKeys{"c", "a0", "a1", "exponent-offset"};

std::vector<std::string> with_symbol_keys(std::vector<std::string> extra) {
  extra.insert(extra.begin(), kSymbolKeys.begin(), kSymbolKeys.end());
  return extra;
}

// Defaults are the worked example c = 1, a0 = 1/2, a1 = 1/4.
SelfAdjointSymbolParams symbol_params(const ParamMap& p, const RunConfig& cfg) {
  SelfAdjointSymbolParams s;
  s.c = p.complex("c", 1.0);
  s.a0 = p.complex("a0", 0.5);
  s.a1 = p.complex("a1", 0.25);
  s.exponent_offset = p.complex("exponent-offset", 0.0);
  s.alpha = cfg.alpha;
  return s;
}

AffineMap affine_params(const ParamMap& p, Complex a, Complex b) { return {p.complex("a", a), p.complex("b", b)}; }

WcoWeight weight_params(const ParamMap& p) {
  return WcoWeight::exp_linear(p.complex("weight-scale", 1.0), p.complex("weight-rate", 0.0));
}

double real_part_only(const ParamMap& p, const std::string& key, double fallback) {
  const Complex v = p.complex(key, fallback);
  if (v.imag() != 0.0) throw PreconditionError("flag --" + key + " must be real");
  return v.real();
}

std::vector<Checker> build_registry() {
  std::vector<Checker> r;

  r.push_back({"boundedness",
               "classify C_phi for phi(z) = a z + b",
               {"a", "b"},
               [](const ParamMap& p, const RunConfig&) { return check_boundedness(affine_params(p, 0.5, 0.3)); },
               {grid_entry({{"a", "0.5"}, {"b", "0.3"}}), grid_entry({{"a", "1"}, {"b", "0"}}),
                grid_entry({{"a", "1"}, {"b", "0.1"}}), grid_entry({{"a", "0.6+0.8i"}, {"b", "0"}}),
                grid_entry({{"a", "2"}, {"b", "0"}})}});

  r.push_back({"commutant-symbols",
               "generate (psi, g) from eta and the fixed point of phi, measure commutation",
               with_symbol_keys({"eta"}),
               [](const ParamMap& p, const RunConfig& cfg) {
                 return check_commutant_symbols(symbol_params(p, cfg), p.complex("eta", 2.0),
                                                default_samples(cfg.seed), cfg.tol("commutant-symbols", kIdentityTol));
               },
               {grid_entry({{"eta", "1"}}), grid_entry({{"eta", "2"}}), grid_entry({{"eta", "0.5+0.5i"}})}});

  r.push_back({"counterexample",
               "worked example phi(z) = 1/2 + z/4: compositions with psi against the printed tuples",
               {"eta"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 return reproduce_counterexample(p.complex("eta", 2.0), cfg.tol("counterexample", kIdentityTol));
               },
               {grid_entry({{"eta", "2"}})}});

  r.push_back({"cphi-adjoint",
               "C_phi* K_beta = K_b (K_beta o conj(a) z) for phi(z) = a z + b",
               {"a", "b"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 const auto samples = random_disk_points(20, 0.9, cfg.seed);
                 auto report = check_cphi_adjoint_factorization(affine_params(p, 0.5, 0.3), samples,
                                                                FockParams(cfg.alpha, cfg.orders.back()),
                                                                cfg.tol("cphi-adjoint", 1e-11));
                 report.params_mut()["seed"] = cfg.seed;
                 return report;
               },
               {grid_entry({{"a", "0.5"}, {"b", "0.3"}}), grid_entry({{"a", "0.6+0.8i"}, {"b", "0"}}),
                grid_entry({{"a", "-0.3i"}, {"b", "0.4-0.2i"}})}});

  r.push_back({"degenerate-commutant",
               "scalar commutant g = exp(-alpha |b|^2 / 2) with psi = identity",
               kSymbolKeys,
               [](const ParamMap& p, const RunConfig& cfg) {
                 const auto s = symbol_params(p, cfg);
                 return check_degenerate_commutant(fixed_point(s.map()), s, cfg.orders);
               },
               {grid_entry({})}});

  r.push_back({"disk-selfmap",
               "does a0 + a1 z map the unit disk into itself",
               {"a0", "a1"},
               [](const ParamMap& p, const RunConfig&) {
                 return check_disk_selfmap(p.complex("a0", 0.5), real_part_only(p, "a1", 0.25));
               },
               {grid_entry({{"a0", "0.5"}, {"a1", "0.25"}}), grid_entry({{"a0", "0.9"}, {"a1", "0.5"}})}});

  r.push_back({"eigen-identity",
               "f e_j(phi) = conj(f(b)) factor^j e_j and W K_b = conj(f(b)) K_b",
               with_symbol_keys({"j-max", "kernel-order"}),
               [](const ParamMap& p, const RunConfig& cfg) {
                 return check_eigen_identity(symbol_params(p, cfg), p.integer("j-max", 5), default_samples(cfg.seed),
                                             p.integer("kernel-order", 32), cfg.tol("eigen-identity", 1e-10));
               },
               {grid_entry({})}});

  r.push_back({"fixed-point",
               "fixed point b of phi(z) = a z + b0",
               {"a", "b"},
               [](const ParamMap& p, const RunConfig&) { return check_fixed_point(affine_params(p, 0.25, 0.5)); },
               {grid_entry({{"a", "0.25"}, {"b", "0.5"}})}});

  r.push_back({"fixed-point-transfer",
               "psi(b) = b when psi commutes with phi; psi is affine (psi-a, psi-b) or generated from eta",
               with_symbol_keys({"eta", "psi-a", "psi-b"}),
               [](const ParamMap& p, const RunConfig& cfg) {
                 const auto s = symbol_params(p, cfg);
                 const auto samples = default_samples(cfg.seed);
                 if (p.has("eta")) {
                   if (p.has("psi-a") || p.has("psi-b")) throw PreconditionError("give either --eta or --psi-a/--psi-b");
                   auto cs = commutant_symbols(p.complex("eta", 2.0), fixed_point(s.map()), samples, cfg.alpha);
                   return check_fixed_point_transfer(s, cs.psi, cs.g, samples, cfg.tol("fixed-point-transfer", 1e-10));
                 }
                 const AffineMap psi(p.complex("psi-a", s.a1), p.complex("psi-b", s.a0));
                 return check_fixed_point_transfer(s, psi, WcoWeight::one(), samples,
                                                   cfg.tol("fixed-point-transfer", 1e-10));
               },
               {grid_entry({}), grid_entry({{"eta", "2"}})}});

  r.push_back({"h-conjugation",
               "h(phi(z)) = factor(z) h(z) with h(z) = (z - b) / (conj(b) z - 1)",
               {"a", "b"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 return check_h_conjugation(affine_params(p, 0.25, 0.5), default_samples(cfg.seed),
                                            cfg.tol("h-conjugation", kIdentityTol));
               },
               {grid_entry({{"a", "0.25"}, {"b", "0.5"}}), grid_entry({{"a", "-0.5+0.2i"}, {"b", "0.1-0.3i"}})}});

  r.push_back({"moebius-conjugation",
               "h(psi(z)) = eta h(z) for the generated psi",
               {"eta", "b"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 const Complex eta = p.complex("eta", 2.0);
                 const Complex b = p.complex("b", 2.0 / 3.0);
                 const auto samples = default_samples(cfg.seed);
                 return check_moebius_conjugation(commutant_symbols(eta, b, samples, cfg.alpha).psi, b, eta, samples,
                                                  cfg.tol("moebius-conjugation", kIdentityTol));
               },
               {grid_entry({{"eta", "2"}, {"b", "0.6666666666666666"}}),
                grid_entry({{"eta", "0.5+0.5i"}, {"b", "0.3-0.4i"}})}});

  r.push_back({"normality",
               "a = 1 or b = 0 against the measured ||M^H M - M M^H||",
               {"a", "b", "weight-scale", "weight-rate"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 return check_normality(weight_params(p), affine_params(p, 0.5, 0.0), cfg.orders, cfg.alpha,
                                        cfg.tol("normality", 1e-9));
               },
               {grid_entry({{"a", "0.5"}, {"b", "0"}}), grid_entry({{"a", "-0.4+0.3i"}, {"b", "0"}}),
                grid_entry({{"a", "1"}, {"b", "0"}}), grid_entry({{"a", "0.5"}, {"b", "0.3"}}),
                grid_entry({{"a", "-0.4+0.3i"}, {"b", "0.2i"}}), grid_entry({{"a", "1"}, {"b", "0.1"}})}});

  r.push_back({"selfadjoint-forward",
               "finite sections of W_{f,phi} for the self-adjoint family are Hermitian",
               kSymbolKeys,
               [](const ParamMap& p, const RunConfig& cfg) {
                 return check_selfadjoint_forward(symbol_params(p, cfg), cfg.orders, cfg.seed,
                                                  cfg.tol("selfadjoint-forward", kIdentityTol));
               },
               {grid_entry({}), grid_entry({{"c", "2"}, {"a0", "0.3+0.2i"}, {"a1", "-0.4"}})}});

  r.push_back({"selfadjoint-reverse",
               "read c, a0, a1 off a symbol and test the self-adjoint form",
               {"weight-scale", "weight-rate", "map-a", "map-b"},
               [](const ParamMap& p, const RunConfig& cfg) {
                 const AffineMap map(p.complex("map-a", 0.25), p.complex("map-b", 0.5));
                 const auto weight = WcoWeight::exp_linear(p.complex("weight-scale", 1.0),
                                                           p.complex("weight-rate", cfg.alpha * std::conj(map.offset)));
                 return check_selfadjoint_reverse(weight, map, FockParams(cfg.alpha, cfg.orders.back()),
                                                  cfg.tol("selfadjoint-reverse", kIdentityTol));
               },
               {grid_entry({})}});

  std::sort(r.begin(), r.end(), [](const Checker& x, const Checker& y) { return x.name < y.name; });
  return r;
}

}  // namespace

const std::vector<Checker>& registry() {
  static const std::vector<Checker> r = build_registry();
  return r;
}

const Checker* find_checker(const std::string& name) {
  for (const auto& c : registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckReport run_checker(const Checker& checker, const ParamMap& params, const RunConfig& cfg) {
  for (const auto& [key, value] : params.values()) {
    if (std::find(checker.keys.begin(), checker.keys.end(), key) == checker.keys.end()) {
      throw PreconditionError("check " + checker.name + " does not take --" + key);
    }
  }
  cfg.validate();
  return checker.run(params, cfg);
}

nlohmann::ordered_json SuiteResult::to_json(const RunConfig& cfg) const {
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (const auto& r : reports) reps.push_back(r.to_json());
  return {{"tool_version", kToolVersion}, {"config", cfg.to_json()}, {"reports", reps}, {"verdict", to_string(verdict)}};
}

SuiteResult run_suite(const RunConfig& cfg) {
  cfg.validate();
  SuiteResult result;
  for (const auto& checker : registry()) {
    for (const auto& params : checker.suite_grid) {
      result.reports.push_back(run_checker(checker, params, cfg));
      if (result.reports.back().verdict() == Verdict::Fail) result.verdict = Verdict::Fail;
    }
  }
  return result;
}

std::string render(const CheckReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return report.to_json().dump(2) + "\n";
    case OutputFormat::Csv:
      return report.to_csv(true);
    case OutputFormat::Text:
      return report.to_text();
  }
  return {};
}

std::string render(const SuiteResult& suite, const RunConfig& cfg, OutputFormat format) {
  if (format == OutputFormat::Json) return suite.to_json(cfg).dump(2) + "\n";
  std::ostringstream out;
  for (std::size_t i = 0; i < suite.reports.size(); ++i) {
    if (format == OutputFormat::Csv) {
      out << suite.reports[i].to_csv(i == 0);
    } else {
      out << suite.reports[i].to_text() << "\n";
    }
  }
  if (format == OutputFormat::Text) out << "suite verdict: " << to_string(suite.verdict) << "\n";
  return out.str();
}

}  // namespace fockcalc::cli

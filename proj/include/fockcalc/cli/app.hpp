#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockcalc/report.hpp"
#include "fockcalc/series.hpp"

namespace fockcalc::cli {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& s);

struct RunConfig {
  double alpha = kDefaultAlpha;
  std::vector<int> orders{16, 32, 64};
  std::map<std::string, double> tolerance_overrides;
  std::uint64_t seed = 42;
  OutputFormat output_format = OutputFormat::Json;

  // Throws PreconditionError unless alpha > 0 and orders strictly increase within [1, 170].
  void validate() const;
  double tol(const std::string& check, double fallback) const;
  nlohmann::ordered_json to_json() const;
};

/// Seed precedence: an explicit --seed flag, then FOCKCALC_SEED, then 42.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

// "re" or "re+imi" (also "imi", "re-imi", "i"). Throws PreconditionError.
Complex parse_complex(const std::string& s);
double parse_real(const std::string& s);

/// Flag values of one `check` invocation, keyed without the leading dashes.
class ParamMap {
 public:
  ParamMap() = default;
  explicit ParamMap(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  /// Parses "--key value" and "--key=value" pairs. Throws PreconditionError
  /// on stray tokens or repeated keys.
  static ParamMap from_args(const std::vector<std::string>& args);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  Complex complex(const std::string& key, Complex fallback) const;
  double real(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct Checker {
  std::string name;
  std::string summary;
  std::vector<std::string> keys;
  std::function<CheckReport(const ParamMap&, const RunConfig&)> run;
  // Default parameter grid used by `suite`; every entry is one ParamMap.
  std::vector<ParamMap> suite_grid;
};

// Sorted by name.
const std::vector<Checker>& registry();
const Checker* find_checker(const std::string& name);

/// Runs one checker after rejecting keys it does not declare.
CheckReport run_checker(const Checker& checker, const ParamMap& params, const RunConfig& cfg);

struct SuiteResult {
  std::vector<CheckReport> reports;  // sorted by check name, grid order within a name
  Verdict verdict = Verdict::Pass;
  nlohmann::ordered_json to_json(const RunConfig& cfg) const;
};

SuiteResult run_suite(const RunConfig& cfg);

std::string render(const CheckReport& report, OutputFormat format);
std::string render(const SuiteResult& suite, const RunConfig& cfg, OutputFormat format);

// 0 for Pass or Informational, 1 for Fail.
int exit_code(Verdict v);

/// Full command line entry point; returns the process exit code.
/// `env_seed` stands in for getenv("FOCKCALC_SEED").
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const char* env_seed);

}  // namespace fockcalc::cli

#pragma once

#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

namespace fockcalc {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { Pass, Fail, Informational };

std::string to_string(Verdict v);

// How a residual is judged against its limit.
enum class Bound {
  AtMost,   // pass iff value <= limit
  AtLeast,  // pass iff value >= limit
  Measured  // recorded only
};

// N = 0 marks a pointwise quantity that does not depend on truncation.
struct Residual {
  int order = 0;
  double value = 0.0;
  std::string label;
  double limit = 0.0;
  Bound bound = Bound::AtMost;

  bool satisfied() const;
};

struct Condition {
  std::string label;
  bool ok = true;
};

/// Outcome of one theorem check.
class CheckReport {
 public:
  CheckReport(std::string check, nlohmann::ordered_json params);

  const std::string& check() const noexcept { return check_; }
  const nlohmann::ordered_json& params() const noexcept { return params_; }
  const std::vector<Residual>& residuals() const noexcept { return residuals_; }
  const std::vector<Condition>& conditions() const noexcept { return conditions_; }
  const std::string& notes() const noexcept { return notes_; }
  Verdict verdict() const noexcept { return verdict_; }

  CheckReport& add_residual(int order, double value, std::string label, double limit,
                            Bound bound = Bound::AtMost);
  CheckReport& add_condition(std::string label, bool ok);
  CheckReport& note(const std::string& text);
  nlohmann::ordered_json& params_mut() noexcept { return params_; }

  /// Fail if any bounded residual or condition is violated; otherwise Pass,
  /// or Informational when nothing was bounded or `informational` is set.
  /// A report without residuals is a programming error.
  CheckReport& finalize(bool informational = false);

  nlohmann::ordered_json to_json() const;
  // check,N,label,value,limit,bound
  std::string to_csv(bool header = true) const;
  std::string to_text() const;

 private:
  std::string check_;
  nlohmann::ordered_json params_;
  std::vector<Residual> residuals_;
  std::vector<Condition> conditions_;
  std::string notes_;
  Verdict verdict_ = Verdict::Informational;
};

nlohmann::ordered_json complex_to_json(std::complex<double> z);

}  // namespace fockcalc

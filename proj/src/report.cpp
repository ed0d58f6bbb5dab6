#include "fockcalc/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fockcalc {

namespace {

std::string bound_name(Bound b) {
  switch (b) {
    case Bound::AtMost: return "at_most";
    case Bound::AtLeast: return "at_least";
    case Bound::Measured: return "measured";
  }
  return "measured";
}

std::string fmt(double x, const char* spec = "%.17g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Informational: return "Informational";
  }
  return "Informational";
}

bool Residual::satisfied() const {
  if (!std::isfinite(value)) return bound == Bound::Measured;
  switch (bound) {
    case Bound::AtMost: return value <= limit;
    case Bound::AtLeast: return value >= limit;
    case Bound::Measured: return true;
  }
  return true;
}

CheckReport::CheckReport(std::string check, nlohmann::ordered_json params)
    : check_(std::move(check)), params_(std::move(params)) {}

CheckReport& CheckReport::add_residual(int order, double value, std::string label, double limit, Bound bound) {
  residuals_.push_back({order, value, std::move(label), limit, bound});
  return *this;
}

CheckReport& CheckReport::add_condition(std::string label, bool ok) {
  conditions_.push_back({std::move(label), ok});
  return *this;
}

CheckReport& CheckReport::note(const std::string& text) {
  if (!notes_.empty()) notes_ += "; ";
  notes_ += text;
  return *this;
}

CheckReport& CheckReport::finalize(bool informational) {
  if (residuals_.empty()) throw std::logic_error("CheckReport '" + check_ + "' has no residuals");
  bool any_bounded = !conditions_.empty();
  bool all_ok = true;
  for (const auto& r : residuals_) {
    if (r.bound != Bound::Measured) any_bounded = true;
    all_ok = all_ok && r.satisfied();
  }
  for (const auto& c : conditions_) all_ok = all_ok && c.ok;
  if (!all_ok) {
    verdict_ = Verdict::Fail;
  } else if (informational || !any_bounded) {
    verdict_ = Verdict::Informational;
  } else {
    verdict_ = Verdict::Pass;
  }
  return *this;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_;
  j["params"] = params_;
  auto& res = j["residuals"] = nlohmann::ordered_json::array();
  for (const auto& r : residuals_) {
    nlohmann::ordered_json e;
    e["N"] = r.order;
    e["value"] = r.value;
    e["label"] = r.label;
    e["limit"] = r.limit;
    e["bound"] = bound_name(r.bound);
    res.push_back(std::move(e));
  }
  auto& cond = j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& c : conditions_) cond.push_back({{"label", c.label}, {"ok", c.ok}});
  j["verdict"] = to_string(verdict_);
  j["notes"] = notes_;
  j["tool_version"] = kToolVersion;
  return j;
}

std::string CheckReport::to_csv(bool header) const {
  std::ostringstream os;
  if (header) os << "check,N,label,value,limit,bound\n";
  for (const auto& r : residuals_) {
    os << check_ << ',' << r.order << ",\"" << r.label << "\"," << fmt(r.value) << ',' << fmt(r.limit) << ','
       << bound_name(r.bound) << '\n';
  }
  return os.str();
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check_ << ": " << to_string(verdict_) << '\n';
  os << "  params: " << params_.dump() << '\n';
  for (const auto& r : residuals_) {
    os << "  [" << (r.satisfied() ? "ok" : "!!") << "] N=" << r.order << ' ' << r.label << " = " << fmt(r.value, "%.6g");
    if (r.bound != Bound::Measured) os << (r.bound == Bound::AtMost ? " <= " : " >= ") << fmt(r.limit, "%.3g");
    os << '\n';
  }
  for (const auto& c : conditions_) os << "  [" << (c.ok ? "ok" : "!!") << "] " << c.label << '\n';
  if (!notes_.empty()) os << "  notes: " << notes_ << '\n';
  return os.str();
}

nlohmann::ordered_json complex_to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace fockcalc

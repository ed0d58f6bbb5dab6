#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "fockcalc/cli/app.hpp"
#include "fockcalc/errors.hpp"

namespace fockcalc::cli {

namespace {

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size() || !std::isfinite(v)) return false;
  out = v;
  return true;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw PreconditionError("unknown output format '" + s + "' (json, csv, text)");
}

void RunConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw PreconditionError("alpha must be positive");
  if (orders.empty()) throw PreconditionError("orders must not be empty");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1 || orders[i] > kMaxOrder) throw PreconditionError("orders must lie in [1, 170]");
    if (i > 0 && orders[i] <= orders[i - 1]) throw PreconditionError("orders must be strictly increasing");
  }
  for (const auto& [name, value] : tolerance_overrides) {
    if (!(value > 0.0) || !std::isfinite(value)) throw PreconditionError("tolerance for " + name + " must be positive");
  }
}

double RunConfig::tol(const std::string& check, double fallback) const {
  const auto it = tolerance_overrides.find(check);
  return it == tolerance_overrides.end() ? fallback : it->second;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json tols = nlohmann::ordered_json::object();
  for (const auto& [name, value] : tolerance_overrides) tols[name] = value;
  return {{"alpha", alpha}, {"orders", orders}, {"seed", seed}, {"tolerance_overrides", tols}};
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value && *env_value) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env_value, &end, 10);
    if (errno != 0 || *end != '\0' || env_value[0] == '-') {
      throw PreconditionError(std::string("FOCKCALC_SEED is not a non-negative integer: ") + env_value);
    }
    return v;
  }
  return 42;
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw) {
    if (ch != ' ') s += ch;
  }
  double re = 0.0;
  if (parse_double(s, re)) return {re, 0.0};
  if (s.empty() || s.back() != 'i') throw PreconditionError("malformed complex value '" + raw + "'");
  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  double im = 0.0;
  if (!parse_double(im_part, im) || (!re_part.empty() && !parse_double(re_part, re))) {
    throw PreconditionError("malformed complex value '" + raw + "'");
  }
  return {re, im};
}

double parse_real(const std::string& s) {
  double v = 0.0;
  if (!parse_double(s, v)) throw PreconditionError("malformed real value '" + s + "'");
  return v;
}

ParamMap ParamMap::from_args(const std::vector<std::string>& args) {
  std::map<std::string, std::string> values;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.size() < 3 || tok.compare(0, 2, "--") != 0) throw PreconditionError("unexpected argument '" + tok + "'");
    std::string key = tok.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (i + 1 >= args.size()) throw PreconditionError("flag --" + key + " needs a value");
      value = args[++i];
    }
    if (!values.emplace(key, value).second) throw PreconditionError("flag --" + key + " given twice");
  }
  return ParamMap(std::move(values));
}

Complex ParamMap::complex(const std::string& key, Complex fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_complex(it->second);
}

double ParamMap::real(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_real(it->second);
}

int ParamMap::integer(const std::string& key, int fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const double v = parse_real(it->second);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw PreconditionError("flag --" + key + " must be an integer");
  return static_cast<int>(v);
}

int exit_code(Verdict v) { return v == Verdict::Fail ? 1 : 0; }

}  // namespace fockcalc::cli

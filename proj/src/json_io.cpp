#include "fockcalc/json_io.hpp"

#include "fockcalc/report.hpp"

namespace fockcalc {

nlohmann::ordered_json to_json(const AffineMap& map) {
  return {{"kind", "affine"}, {"slope", complex_to_json(map.slope)}, {"offset", complex_to_json(map.offset)}};
}

nlohmann::ordered_json to_json(const LinearFractionalMap& map) {
  return {{"kind", "linear_fractional"},
          {"p", complex_to_json(map.p())},
          {"q", complex_to_json(map.q())},
          {"r", complex_to_json(map.r())},
          {"s", complex_to_json(map.s())}};
}

nlohmann::ordered_json to_json(const CompositionMap& map) {
  return std::visit([](const auto& m) { return to_json(m); }, map);
}

nlohmann::ordered_json to_json(const WcoWeight& weight) {
  if (const auto* w = std::get_if<ExpLinearWeight>(&weight.form())) {
    return {{"kind", "exp_linear"}, {"scale", complex_to_json(w->scale)}, {"rate", complex_to_json(w->rate)}};
  }
  if (const auto* w = std::get_if<ExpMoebiusWeight>(&weight.form())) {
    return {{"kind", "exp_moebius"},
            {"scale", complex_to_json(w->scale)},
            {"rate", complex_to_json(w->rate)},
            {"map", to_json(w->map)}};
  }
  const auto& s = std::get<TruncatedSeries>(weight.form());
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Complex& c : s.coeffs()) coeffs.push_back(complex_to_json(c));
  return {{"kind", "series"}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::ordered_json to_json(const OperatorMatrix& m) {
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    nlohmann::ordered_json rr = nlohmann::ordered_json::array();
    nlohmann::ordered_json ri = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"alpha", m.params().alpha()}, {"order", m.params().order()}, {"dim", m.dim()}, {"re", re}, {"im", im}};
}

}  // namespace fockcalc

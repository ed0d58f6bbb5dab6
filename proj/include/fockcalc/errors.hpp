#pragma once

#include <stdexcept>
#include <string>

namespace fockcalc {

// Two operands carry different (alpha, order) tags.
class ParamsMismatch : public std::invalid_argument {
 public:
  explicit ParamsMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A value that must stay finite became NaN or infinite.
class NonFiniteValue : public std::domain_error {
 public:
  explicit NonFiniteValue(const std::string& what) : std::domain_error(what) {}
};

// Evaluation point too close to a pole of a map or of an auxiliary rational factor.
class PoleProximity : public std::domain_error {
 public:
  explicit PoleProximity(const std::string& what) : std::domain_error(what) {}
};

// An operation was called outside its stated domain (bad index, degenerate map,
// a hypothesis of the identity violated, unsupported symbol kind, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fockcalc

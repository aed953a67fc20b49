#pragma once

#include <stdexcept>
#include <string>

namespace qgf {

/// Mixing values from incompatible ring instances or presentations.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter limit does not exist; carries the offending term's rendering.
struct divergent_limit_error : std::runtime_error {
  explicit divergent_limit_error(const std::string& term)
      : std::runtime_error("divergent limit, surviving negative power in: " + term),
        offending_term(term) {}
  std::string offending_term;
};

/// Requested operation falls outside what the engine supports
/// (nonlinear substitution, non-splitting spectrum, ...).
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgf

#pragma once

#include <stdexcept>
#include <string>

namespace wnear {

/// Library error. `module` names the component that raised it and `code` is a
/// short machine-readable tag ("invalid_argument", "no_convergence", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string code, const std::string& message)
      : std::runtime_error(message), module_(std::move(module)), code_(std::move(code)) {}

  const std::string& module() const noexcept { return module_; }
  const std::string& code() const noexcept { return code_; }

 private:
  std::string module_;
  std::string code_;
};

/// Raised when an iterative procedure exhausts its budget. `best` carries the
/// best value reached (e.g. the smallest achieved truncation error).
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::string module, const std::string& message, double best)
      : Error(std::move(module), "no_convergence", message), best_(best) {}
  double best() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace wnear

#ifndef POSTLIE_ERRORS_HPP
#define POSTLIE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

/// Invalid input data (bad tables, bad JSON, unknown names). CLI maps these
/// to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AntisymmetryViolation : ValidationError {
  int i, j;
  AntisymmetryViolation(int i_, int j_, const std::string& msg)
      : ValidationError(msg), i(i_), j(j_) {}
};

struct JacobiViolation : ValidationError {
  int i, j, k;
  Vec residual;
  JacobiViolation(int i_, int j_, int k_, Vec res, const std::string& msg)
      : ValidationError(msg), i(i_), j(j_), k(k_), residual(std::move(res)) {}
};

struct GradingIncompatible : ValidationError {
  int i, j;
  int stray_basis_index;
  GradingIncompatible(int i_, int j_, int stray, const std::string& msg)
      : ValidationError(msg), i(i_), j(j_), stray_basis_index(stray) {}
};

struct InvalidGrading : ValidationError {
  using ValidationError::ValidationError;
};

struct NotADerivation : ValidationError {
  using ValidationError::ValidationError;
};

struct NotACocycle : ValidationError {
  using ValidationError::ValidationError;
};

struct UnknownFamily : ValidationError {
  using ValidationError::ValidationError;
};

/// A window too small to constrain some unknown degree component; vanishing
/// claims would be vacuous there, so this is an error, never a warning.
struct WindowTooSmall : std::runtime_error {
  std::vector<long> unconstrained_degrees;
  WindowTooSmall(std::vector<long> degs, const std::string& msg)
      : std::runtime_error(msg), unconstrained_degrees(std::move(degs)) {}
};

struct HypothesisViolated : std::runtime_error {
  std::string hypothesis;
  HypothesisViolated(std::string which, const std::string& msg)
      : std::runtime_error(msg), hypothesis(std::move(which)) {}
};

/// Solver budget exhausted. Carries progress statistics; distinct from an
/// inconclusive verdict. CLI maps this to exit code 3.
struct ResourceLimit : std::runtime_error {
  unsigned long long reductions = 0;
  unsigned long long terms = 0;
  size_t basis_size = 0;
  ResourceLimit(unsigned long long red, unsigned long long trm, size_t bs,
                const std::string& msg)
      : std::runtime_error(msg), reductions(red), terms(trm), basis_size(bs) {}
};

}  // namespace postlie

#endif

#ifndef POSTLIE_VERIFY_HPP
#define POSTLIE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "postlie/groebner.hpp"

namespace postlie {

struct SubCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteResult {
  std::string id;
  std::vector<SubCheck> checks;
  bool pass = true;
  double seconds = 0.0;
};

/// Verification suites runnable from the CLI, keyed by id:
///   th2     loop-window CPA triviality, untwisted and twisted
///   witt    Witt-window degree analysis and vanishing
///   prop1   current-algebra dimension identity for D
///   prop2   current-algebra dimension identity for D_comm
///   lemma1  vanishing on the semidirect extension by the Euler derivation
///   lemma2  solution space of the central extension vs the prediction
///   th22    the Kac-Moody window solution space and its spanning map
///   prop-p  loop correspondence gates (condition C machinery)
///   prop33  graded decomposition round trips
SuiteResult run_verify_suite(const std::string& id, const GroebnerBudget& budget,
                             uint64_t seed);

std::vector<std::string> verify_suite_ids();

}  // namespace postlie

#endif

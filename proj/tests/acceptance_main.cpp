// Acceptance suite: runs every top-level requirement with its runtime
// budget and prints one PASS/FAIL line per criterion. Exit code 0 iff all
// pass. argv[1] must point at the postlie CLI binary.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpa_oracle.hpp"
#include "postlie/constructions.hpp"
#include "postlie/cpa.hpp"
#include "postlie/invariants.hpp"
#include "postlie/json_io.hpp"
#include "postlie/recheck.hpp"
#include "postlie/verify.hpp"

using namespace postlie;

namespace {

std::string g_cli;
int g_failures = 0;

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_seconds <= 0 || secs < limit_seconds;
  bool pass = ok && in_time;
  if (!pass) ++g_failures;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << " criterion-" << number << " " << label << " ["
       << secs << "s";
  if (limit_seconds > 0) line << " < " << limit_seconds << "s";
  line << "]";
  if (!detail.empty()) line << " " << detail;
  std::cout << line.str() << "\n";
}

bool suite_passes(const std::string& id, std::string& detail) {
  GroebnerBudget budget;
  budget.max_spair_reductions = 300000;
  SuiteResult res = run_verify_suite(id, budget, 20240501);
  if (!res.pass) {
    for (const SubCheck& c : res.checks)
      if (!c.pass)
        detail += "[" + c.name + ": expected " + c.expected + ", computed " + c.computed + "]";
  }
  return res.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-postlie-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "sl2 triviality via the CLI", 1.0, [](std::string& detail) {
    CliResult r = run_cli("cpa solve sl2 --json -");
    if (r.exit_code != 0) {
      detail = "exit code " + std::to_string(r.exit_code);
      return false;
    }
    auto pos = r.out.find('{');
    if (pos == std::string::npos) {
      detail = "no JSON in output";
      return false;
    }
    Json j = Json::parse(r.out.substr(pos));
    bool ok = j["verdict"] == "ZeroOnly" && j["dcomm_dim"] == 0;
    if (!ok) detail = "verdict " + j["verdict"].get<std::string>();
    return ok;
  });

  criterion(2, "condition (C) machinery on sl2 and sl3", 10.0, [](std::string& detail) {
    bool ok = true;
    for (const char* name : {"sl2", "sl3"}) {
      LieAlgebra L = builtin(name).algebra;
      if (center(L).dim() != 0) ok = false;
      if (derivation_space(L).size() != inner_derivation_space(L).size()) ok = false;
      if (!skew_invariance_kernel(L).empty()) ok = false;
      auto c = check_condition_C(L);
      if (c.verdict != ConditionC::HoldsByCorollary) {
        detail += std::string(name) + ": " + condition_c_name(c.verdict);
        ok = false;
      }
    }
    return ok;
  });

  criterion(3, "loop windows at N=3 solve to zero in degree 0 only", 60.0,
            [](std::string& detail) { return suite_passes("th2", detail); });

  criterion(4, "Witt windows at N=4: no nonzero-degree components survive", 120.0,
            [](std::string& detail) { return suite_passes("witt", detail); });

  criterion(5, "current-algebra dimension identity for D", 60.0,
            [](std::string& detail) { return suite_passes("prop1", detail); });

  criterion(6, "current-algebra dimension identity for Dcomm", 0,
            [](std::string& detail) { return suite_passes("prop2", detail); });

  criterion(7, "semidirect Euler extension solves to zero at dim 10", 300.0,
            [](std::string& detail) { return suite_passes("lemma1", detail); });

  criterion(8, "central extension solution space matches the prediction", 0,
            [](std::string& detail) { return suite_passes("lemma2", detail); });

  criterion(9, "Kac-Moody window carries exactly the (d,d) -> z line", 300.0,
            [](std::string& detail) { return suite_passes("th22", detail); });

  criterion(10, "property suites: decomposition, recheck, oracle agreement", 0,
            [](std::string& detail) {
              bool ok = suite_passes("prop33", detail);

              // post-hoc identity checker over solver outputs
              for (const char* name : {"sl2", "sl3", "heisenberg", "r2", "abelian3"}) {
                LieAlgebra L = builtin(name).algebra;
                if (!recheck::space_ok(L, d_space(L)) ||
                    !recheck::space_ok(L, dcomm_space(L)) ||
                    !recheck::space_ok(L, c_space(L))) {
                  detail += std::string("[recheck failed on ") + name + "]";
                  ok = false;
                }
              }
              std::vector<AlgebraWindow> windows;
              windows.push_back(witt_window(4, false));
              windows.push_back(witt_window(4, true));
              {
                BuiltinAlgebra g1 = builtin("sl2_z1");
                windows.push_back(
                    kac_moody_window(GradedLieAlgebra{g1.algebra, *g1.grading}, 3));
              }
              for (const AlgebraWindow& w : windows) {
                WindowedDcomm wd = windowed_dcomm_space(w, w.bound());
                for (const BilinearMap& m : wd.basis)
                  if (!m.is_symmetric() ||
                      !recheck::windowed_derivation_identity(w, m).ok) {
                    detail += "[windowed recheck failed]";
                    ok = false;
                  }
              }

              // brute-force oracle agreement on a seeded random sample
              GroebnerBudget budget;
              budget.max_spair_reductions = 500000;
              std::mt19937_64 rng(20250811);
              int mismatches = 0;
              for (int trial = 0; trial < 10; ++trial) {
                LieAlgebra L = oracle::random_small_algebra(rng);
                CpaReport structured = cpa_solve(L, budget);
                oracle::OracleReport direct = oracle::unstructured_cpa(L, budget);
                bool agree = structured.verdict == direct.verdict &&
                             (structured.verdict != CpaVerdict::LinearSpace ||
                              structured.solution_dim() == direct.solution_dim);
                if (!agree) {
                  ++mismatches;
                  detail += "[oracle mismatch at trial " + std::to_string(trial) + "]";
                }
              }
              if (mismatches != 0) ok = false;
              return ok;
            });

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}

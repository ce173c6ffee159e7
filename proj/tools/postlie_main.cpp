#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "postlie/cpa.hpp"
#include "postlie/invariants.hpp"
#include "postlie/json_io.hpp"
#include "postlie/verify.hpp"

using namespace postlie;

namespace {

// exit codes: 0 definite result, 1 verification mismatch, 2 invalid input,
// 3 inconclusive or out of budget
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

struct CommonOpts {
  long window = 0;  // 0 = command default
  long degree_bound = -1;
  unsigned long long budget = 100000;
  unsigned long long seed = 20240501;
  std::string json_out;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--window", opts.window, "window bound N for degree-truncated algebras");
  cmd->add_option("--degree-bound", opts.degree_bound,
                  "degree bound B for windowed unknowns (default: N, max 2N)");
  cmd->add_option("--budget", opts.budget, "Groebner S-pair reduction budget");
  cmd->add_option("--seed", opts.seed, "seed for randomized property checks");
  cmd->add_option("--json", opts.json_out, "write the JSON report to this path ('-' = stdout)");
  cmd->add_flag("--timing", opts.timing, "include timing metadata in JSON output");
}

GroebnerBudget to_budget(const CommonOpts& o) {
  GroebnerBudget b;
  b.max_spair_reductions = o.budget;
  return b;
}

void emit_json(const CommonOpts& opts, const Json& j) {
  if (opts.json_out.empty()) return;
  if (opts.json_out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(opts.json_out);
  out << j.dump(2) << "\n";
}

Json manifest(const std::string& command, const std::string& input, const CommonOpts& o) {
  Json m;
  m["command"] = command;
  m["input"] = input;
  if (o.window > 0) m["window"] = o.window;
  if (o.degree_bound >= 0) m["degree_bound"] = o.degree_bound;
  m["budget"] = o.budget;
  m["seed"] = o.seed;
  m["output"] = o.json_out.empty() ? "stdout" : o.json_out;
  return m;
}

struct WindowSpec {
  std::string loop_name;
  std::string km_name;
  long witt_n = 0;
  bool one_sided = false;

  bool any() const { return !loop_name.empty() || !km_name.empty() || witt_n > 0; }
};

AlgebraWindow build_window(const WindowSpec& spec, long n) {
  if (!spec.loop_name.empty()) {
    BuiltinAlgebra b = load_algebra(spec.loop_name);
    if (!b.grading) throw InvalidGrading("loop windows need a graded algebra");
    return loop_window(GradedLieAlgebra{b.algebra, *b.grading}, static_cast<int>(n));
  }
  if (!spec.km_name.empty()) {
    BuiltinAlgebra b = load_algebra(spec.km_name);
    if (!b.grading) throw InvalidGrading("kac-moody windows need a graded algebra");
    return kac_moody_window(GradedLieAlgebra{b.algebra, *b.grading}, static_cast<int>(n));
  }
  return witt_window(static_cast<int>(spec.witt_n), spec.one_sided);
}

void print_report(const CpaReport& rep) {
  std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
  std::cout << "dcomm dimension: " << rep.dcomm_dim << "\n";
  if (rep.verdict == CpaVerdict::LinearSpace)
    std::cout << "solution space dimension: " << rep.solution_dim() << "\n";
  if (rep.windowed) {
    std::cout << "per-degree dcomm dimensions:";
    for (const auto& [g, d] : rep.per_degree_dcomm)
      if (d) std::cout << " " << g << ":" << d;
    std::cout << "\nper-degree solution dimensions:";
    for (const auto& [g, d] : rep.per_degree_solution)
      if (d) std::cout << " " << g << ":" << d;
    std::cout << "\n";
  }
  if (!rep.certificate.empty()) {
    std::cout << "certificate (reduced basis, " << rep.certificate.size() << " elements)\n";
    for (const std::string& s : rep.certificate) std::cout << "  " << s << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for commutative post-Lie structures on current, "
               "loop, Witt and Kac-Moody-type Lie algebras"};
  app.require_subcommand(1);

  // algebra check
  auto* algebra = app.add_subcommand("algebra", "algebra inspection");
  algebra->require_subcommand(1);
  auto* check = algebra->add_subcommand("check", "validate an algebra and print invariants");
  std::string check_input;
  CommonOpts check_opts;
  check->add_option("input", check_input, "builtin name or JSON file")->required();
  add_common(check, check_opts);

  // cpa dcomm | solve | verify
  auto* cpa = app.add_subcommand("cpa", "commutative post-Lie structure computations");
  cpa->require_subcommand(1);

  auto* dcomm = cpa->add_subcommand("dcomm", "compute the symmetric derivation-pair space");
  std::string dcomm_input;
  CommonOpts dcomm_opts;
  dcomm->add_option("input", dcomm_input, "builtin name or JSON file")->required();
  add_common(dcomm, dcomm_opts);

  auto* solve = cpa->add_subcommand("solve", "solve for all structures with certification");
  std::string solve_input;
  CommonOpts solve_opts;
  WindowSpec solve_spec;
  solve->add_option("input", solve_input, "builtin name or JSON file (full algebra)");
  solve->add_option("--loop", solve_spec.loop_name, "solve on the loop window of this algebra");
  solve->add_option("--kac-moody", solve_spec.km_name,
                    "solve on the kac-moody window of this algebra");
  solve->add_option("--witt", solve_spec.witt_n, "solve on the Witt window with this bound");
  solve->add_flag("--one-sided", solve_spec.one_sided, "one-sided Witt window");
  add_common(solve, solve_opts);

  auto* verify_map = cpa->add_subcommand("verify", "verify a candidate structure");
  std::string verify_input, verify_map_path;
  CommonOpts verify_opts;
  WindowSpec verify_spec;
  verify_map->add_option("input", verify_input, "builtin name or JSON file (full algebra)");
  verify_map->add_option("--map", verify_map_path, "candidate map JSON file")->required();
  verify_map->add_option("--loop", verify_spec.loop_name, "verify on this loop window");
  verify_map->add_option("--kac-moody", verify_spec.km_name, "verify on this kac-moody window");
  verify_map->add_option("--witt", verify_spec.witt_n, "verify on this Witt window");
  verify_map->add_flag("--one-sided", verify_spec.one_sided, "one-sided Witt window");
  add_common(verify_map, verify_opts);

  // cohomology h2
  auto* cohomology = app.add_subcommand("cohomology", "Lie algebra cohomology");
  cohomology->require_subcommand(1);
  auto* h2 = cohomology->add_subcommand("h2", "second cohomology with trivial coefficients");
  std::string h2_input;
  CommonOpts h2_opts;
  h2->add_option("input", h2_input, "builtin name or JSON file")->required();
  add_common(h2, h2_opts);

  // construct
  auto* construct = app.add_subcommand("construct", "emit algebras and windows as JSON");
  construct->require_subcommand(1);
  auto* c_loop = construct->add_subcommand("loop", "loop window of a graded algebra");
  std::string c_loop_name;
  CommonOpts c_loop_opts;
  c_loop->add_option("input", c_loop_name, "graded builtin or JSON file")->required();
  add_common(c_loop, c_loop_opts);
  auto* c_witt = construct->add_subcommand("witt", "Witt window");
  CommonOpts c_witt_opts;
  bool c_witt_one = false;
  c_witt->add_flag("--one-sided", c_witt_one, "one-sided window");
  add_common(c_witt, c_witt_opts);
  auto* c_km = construct->add_subcommand("kac-moody", "kac-moody window");
  std::string c_km_name;
  CommonOpts c_km_opts;
  c_km->add_option("input", c_km_name, "graded builtin or JSON file")->required();
  add_common(c_km, c_km_opts);
  auto* c_semi = construct->add_subcommand(
      "semidirect", "current algebra extended by its Euler derivation");
  std::string c_semi_base = "sl2";
  long c_semi_trunc = 3;
  bool c_semi_pinched = false;
  CommonOpts c_semi_opts;
  c_semi->add_option("--current", c_semi_base, "base builtin for the current algebra");
  c_semi->add_option("--trunc", c_semi_trunc, "truncation order of Q[t]/(t^n)");
  c_semi->add_flag("--pinched", c_semi_pinched, "use the pinched-Laurent coefficients");
  add_common(c_semi, c_semi_opts);
  auto* c_cext = construct->add_subcommand(
      "central-ext", "central extension of the semidirect model by a nontrivial cocycle");
  std::string c_cext_base = "sl2";
  long c_cext_trunc = 3;
  bool c_cext_pinched = false;
  CommonOpts c_cext_opts;
  c_cext->add_option("--current", c_cext_base, "base builtin for the current algebra");
  c_cext->add_option("--trunc", c_cext_trunc, "truncation order of Q[t]/(t^n)");
  c_cext->add_flag("--pinched", c_cext_pinched, "use the pinched-Laurent coefficients");
  add_common(c_cext, c_cext_opts);

  // verify <suite-id>
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string verify_id;
  CommonOpts verify_suite_opts;
  verify->add_option("id", verify_id, "suite id or 'all'")->required();
  add_common(verify, verify_suite_opts);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    BuiltinAlgebra b = load_algebra(check_input);
    const LieAlgebra& L = b.algebra;
    std::cout << "valid Lie algebra, dim " << L.dim() << "\n";
    std::cout << "center dimension: " << center(L).dim() << "\n";
    std::cout << "derived subalgebra dimension: " << derived_subalgebra(L).dim() << "\n";
    std::cout << "perfect: " << (is_perfect(L) ? "yes" : "no") << "\n";
    std::cout << "centerless: " << (is_centerless(L) ? "yes" : "no") << "\n";
    if (b.grading) std::cout << "grading: validated\n";
    Json j = algebra_to_json(L, b.grading);
    j["center_dim"] = center(L).dim();
    j["derived_dim"] = derived_subalgebra(L).dim();
    j["perfect"] = is_perfect(L);
    j["centerless"] = is_centerless(L);
    emit_json(check_opts, j);
    return kExitOk;
  }
  if (dcomm->parsed()) {
    BuiltinAlgebra b = load_algebra(dcomm_input);
    BilinearMapSpace space = dcomm_space(b.algebra);
    std::cout << "dcomm dimension: " << space.dim() << "\n";
    Json j;
    j["manifest"] = manifest("cpa dcomm", dcomm_input, dcomm_opts);
    j["space"] = space_to_json(space, b.grading);
    emit_json(dcomm_opts, j);
    return kExitOk;
  }
  if (solve->parsed()) {
    CpaReport rep;
    std::string input_desc;
    if (solve_spec.any()) {
      long n = solve_opts.window > 0 ? solve_opts.window
                                     : (solve_spec.witt_n > 0 ? solve_spec.witt_n : 3);
      AlgebraWindow w = build_window(solve_spec, n);
      long B = solve_opts.degree_bound >= 0 ? solve_opts.degree_bound : n;
      rep = cpa_solve(w, B, to_budget(solve_opts));
      input_desc = !solve_spec.loop_name.empty()
                       ? "loop:" + solve_spec.loop_name
                       : (!solve_spec.km_name.empty() ? "kac-moody:" + solve_spec.km_name
                                                      : "witt:" + std::to_string(n));
    } else {
      if (solve_input.empty()) throw ValidationError("cpa solve needs an input or a window flag");
      BuiltinAlgebra b = load_algebra(solve_input);
      rep = cpa_solve(b.algebra, to_budget(solve_opts));
      input_desc = solve_input;
    }
    print_report(rep);
    emit_json(solve_opts, report_to_json(rep, manifest("cpa solve", input_desc, solve_opts),
                                         solve_opts.timing));
    return rep.verdict == CpaVerdict::Inconclusive ? kExitInconclusive : kExitOk;
  }
  if (verify_map->parsed()) {
    std::ifstream in(verify_map_path);
    if (!in) throw ValidationError("cannot open map file '" + verify_map_path + "'");
    Json mj;
    in >> mj;
    BilinearMap phi = map_from_json(mj);
    CpaCheck result;
    if (verify_spec.any()) {
      long n = verify_opts.window > 0 ? verify_opts.window
                                      : (verify_spec.witt_n > 0 ? verify_spec.witt_n : 3);
      result = verify_cpa(build_window(verify_spec, n), phi);
    } else {
      if (verify_input.empty())
        throw ValidationError("cpa verify needs an input or a window flag");
      result = verify_cpa(load_algebra(verify_input).algebra, phi);
    }
    if (result.ok) {
      std::cout << "the map satisfies all structure identities\n";
      return kExitOk;
    }
    std::cout << "violation of " << result.identity << " at triple (" << result.i << ", "
              << result.j << ", " << result.k << ")\n";
    return kExitMismatch;
  }
  if (h2->parsed()) {
    BuiltinAlgebra b = load_algebra(h2_input);
    const LieAlgebra& L = b.algebra;
    int zc = static_cast<int>(two_cocycles(L).size());
    int cb = static_cast<int>(coboundaries(L).size());
    std::cout << "cocycle space dimension: " << zc << "\n";
    std::cout << "coboundary space dimension: " << cb << "\n";
    std::cout << "h2 dimension: " << zc - cb << "\n";
    Json j;
    j["manifest"] = manifest("cohomology h2", h2_input, h2_opts);
    j["cocycles"] = zc;
    j["coboundaries"] = cb;
    j["h2"] = zc - cb;
    auto pick = pick_nontrivial_cocycle(L);
    if (pick) {
      Json rows = Json::array();
      for (int i = 0; i < L.dim(); ++i)
        for (int jx = i + 1; jx < L.dim(); ++jx)
          if (!is_zero(pick->coefficients.at(i, jx)))
            rows.push_back(Json::array({i, jx, rat_str(pick->coefficients.at(i, jx))}));
      j["nontrivial_cocycle"] = rows;
    }
    emit_json(h2_opts, j);
    return kExitOk;
  }
  if (c_loop->parsed() || c_km->parsed() || c_witt->parsed()) {
    CommonOpts& opts = c_loop->parsed() ? c_loop_opts : (c_km->parsed() ? c_km_opts : c_witt_opts);
    WindowSpec spec;
    long n = opts.window > 0 ? opts.window : (c_witt->parsed() ? 4 : 3);
    if (c_loop->parsed()) spec.loop_name = c_loop_name;
    if (c_km->parsed()) spec.km_name = c_km_name;
    if (c_witt->parsed()) {
      spec.witt_n = n;
      spec.one_sided = c_witt_one;
    }
    AlgebraWindow w = build_window(spec, n);
    Json j = window_to_json(w);
    if (opts.json_out.empty()) std::cout << j.dump(2) << "\n";
    emit_json(opts, j);
    return kExitOk;
  }
  if (c_semi->parsed() || c_cext->parsed()) {
    bool extend = c_cext->parsed();
    CommonOpts& opts = extend ? c_cext_opts : c_semi_opts;
    std::string base_name = extend ? c_cext_base : c_semi_base;
    long trunc = extend ? c_cext_trunc : c_semi_trunc;
    bool pinched = extend ? c_cext_pinched : c_semi_pinched;
    BuiltinAlgebra base = load_algebra(base_name);
    CommutativeAlgebra A =
        pinched ? pinched_laurent_algebra() : truncated_polynomial_algebra(static_cast<int>(trunc));
    LieAlgebra cur = current_algebra(base.algebra, A);
    auto ext = semidirect_by_derivation(cur, euler_derivation(base.algebra, A));
    if (!extend) {
      Json j = algebra_to_json(ext.algebra, std::nullopt);
      j["euler_outer"] = ext.outer;
      if (opts.json_out.empty()) std::cout << j.dump(2) << "\n";
      emit_json(opts, j);
      return kExitOk;
    }
    auto xi = pick_nontrivial_cocycle(ext.algebra);
    if (!xi)
      throw ValidationError("the semidirect model has no nontrivial 2-cocycle (h2 = 0); "
                            "try --pinched");
    auto cext = central_extension(ext.algebra, *xi);
    Json j = algebra_to_json(cext.algebra, std::nullopt);
    j["nontrivial"] = cext.nontrivial;
    if (opts.json_out.empty()) std::cout << j.dump(2) << "\n";
    emit_json(opts, j);
    return kExitOk;
  }
  if (verify->parsed()) {
    std::vector<std::string> ids =
        verify_id == "all" ? verify_suite_ids() : std::vector<std::string>{verify_id};
    bool all_pass = true;
    Json suites = Json::array();
    for (const std::string& id : ids) {
      SuiteResult res =
          run_verify_suite(id, to_budget(verify_suite_opts), verify_suite_opts.seed);
      all_pass = all_pass && res.pass;
      std::cout << "suite " << id << (res.pass ? " PASS" : " FAIL") << "\n";
      Json checks = Json::array();
      for (const SubCheck& c : res.checks) {
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": expected "
                  << c.expected << ", computed " << c.computed << "\n";
        checks.push_back(Json{{"name", c.name},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"pass", c.pass}});
      }
      Json sj;
      sj["id"] = id;
      sj["pass"] = res.pass;
      sj["checks"] = checks;
      if (verify_suite_opts.timing) sj["seconds"] = res.seconds;
      suites.push_back(sj);
    }
    Json j;
    j["manifest"] = manifest("verify", verify_id, verify_suite_opts);
    j["suites"] = suites;
    emit_json(verify_suite_opts, j);
    return all_pass ? kExitOk : kExitMismatch;
  }
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << " (reductions " << e.reductions
              << ", basis " << e.basis_size << ")\n";
    return kExitInconclusive;
  } catch (const WindowTooSmall& e) {
    std::cerr << "window too small: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

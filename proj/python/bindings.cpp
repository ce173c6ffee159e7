#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "postlie/constructions.hpp"
#include "postlie/cpa.hpp"
#include "postlie/invariants.hpp"
#include "postlie/json_io.hpp"
#include "postlie/verify.hpp"

namespace py = pybind11;
using namespace postlie;

namespace {

struct PyAlgebra {
  LieAlgebra algebra;
  std::optional<Grading> grading;
};

struct PyWindow {
  AlgebraWindow window;
};

GroebnerBudget budget_of(unsigned long long steps) {
  GroebnerBudget b;
  b.max_spair_reductions = steps;
  return b;
}

Json report_json(const CpaReport& rep) {
  Json manifest;
  manifest["command"] = "python cpa_solve";
  return report_to_json(rep, manifest, true);
}

PyAlgebra make_model(const std::string& base, int trunc, bool pinched, bool extend_central) {
  BuiltinAlgebra b = builtin(base);
  CommutativeAlgebra A =
      pinched ? pinched_laurent_algebra() : truncated_polynomial_algebra(trunc);
  LieAlgebra cur = current_algebra(b.algebra, A);
  auto ext = semidirect_by_derivation(cur, euler_derivation(b.algebra, A));
  if (!extend_central) return {std::move(ext.algebra), std::nullopt};
  auto xi = pick_nontrivial_cocycle(ext.algebra);
  if (!xi)
    throw ValidationError("the semidirect model has no nontrivial 2-cocycle (h2 = 0)");
  auto cext = central_extension(ext.algebra, *xi);
  return {std::move(cext.algebra), std::nullopt};
}

GradedLieAlgebra as_graded(const PyAlgebra& a) {
  if (!a.grading) throw InvalidGrading("this construction needs a graded algebra");
  return GradedLieAlgebra{a.algebra, *a.grading};
}

}  // namespace

PYBIND11_MODULE(_postlie, m) {
  m.doc() = "exact-arithmetic engine for commutative post-Lie structures";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<WindowTooSmall>(m, "WindowTooSmallError");
  py::register_exception<ResourceLimit>(m, "ResourceLimitError");
  py::register_exception<HypothesisViolated>(m, "HypothesisViolatedError");

  py::class_<PyAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.algebra.dim(); })
      .def_property_readonly("labels",
                             [](const PyAlgebra& a) { return a.algebra.labels(); })
      .def_property_readonly("graded", [](const PyAlgebra& a) { return a.grading.has_value(); })
      .def("to_json",
           [](const PyAlgebra& a) { return algebra_to_json(a.algebra, a.grading).dump(2); })
      .def("bracket",
           [](const PyAlgebra& a, int i, int j) {
             if (i < 0 || j < 0 || i >= a.algebra.dim() || j >= a.algebra.dim())
               throw py::index_error("basis index out of range");
             std::vector<std::pair<int, std::string>> out;
             for (const auto& [k, v] : a.algebra.bracket(i, j))
               out.emplace_back(k, rat_str(v));
             return out;
           })
      .def("center_dim", [](const PyAlgebra& a) { return center(a.algebra).dim(); })
      .def("derived_dim",
           [](const PyAlgebra& a) { return derived_subalgebra(a.algebra).dim(); })
      .def("is_perfect", [](const PyAlgebra& a) { return is_perfect(a.algebra); })
      .def("is_centerless", [](const PyAlgebra& a) { return is_centerless(a.algebra); })
      .def("derivation_dim",
           [](const PyAlgebra& a) { return static_cast<int>(derivation_space(a.algebra).size()); })
      .def("inner_derivation_dim",
           [](const PyAlgebra& a) {
             return static_cast<int>(inner_derivation_space(a.algebra).size());
           })
      .def("centroid_dim",
           [](const PyAlgebra& a) { return static_cast<int>(centroid(a.algebra).size()); })
      .def("is_central", [](const PyAlgebra& a) { return is_central(a.algebra); })
      .def("skew_invariance_dim",
           [](const PyAlgebra& a) {
             return static_cast<int>(skew_invariance_kernel(a.algebra).size());
           })
      .def("h2_dim", [](const PyAlgebra& a) { return h2_dim(a.algebra); })
      .def("killing",
           [](const PyAlgebra& a) {
             Matrix k = killing_form(a.algebra);
             std::vector<std::vector<std::string>> rows;
             for (int i = 0; i < k.rows(); ++i) {
               std::vector<std::string> row;
               for (int j = 0; j < k.cols(); ++j) row.push_back(rat_str(k.at(i, j)));
               rows.push_back(std::move(row));
             }
             return rows;
           })
      .def("d_dim", [](const PyAlgebra& a) { return d_space(a.algebra).dim(); })
      .def("dcomm_dim", [](const PyAlgebra& a) { return dcomm_space(a.algebra).dim(); })
      .def("c_dim", [](const PyAlgebra& a) { return c_space(a.algebra).dim(); })
      .def(
          "cpa_solve_json",
          [](const PyAlgebra& a, unsigned long long budget) {
            return report_json(cpa_solve(a.algebra, budget_of(budget))).dump();
          },
          py::arg("budget") = 100000ull)
      .def("check_condition_c",
           [](const PyAlgebra& a) {
             return condition_c_name(check_condition_C(a.algebra).verdict);
           })
      .def("verify_cpa",
           [](const PyAlgebra& a,
              const std::vector<std::tuple<int, int, int, std::string>>& entries) {
             int n = a.algebra.dim();
             BilinearMap phi(n);
             for (const auto& [i, j, k, v] : entries) {
               if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
                 throw py::index_error("map entry index out of range");
               phi.at(i, j, k) = rat_parse(v);
             }
             CpaCheck c = verify_cpa(a.algebra, phi);
             return py::make_tuple(c.ok, c.identity);
           })
      .def("__repr__", [](const PyAlgebra& a) {
        return "<LieAlgebra dim=" + std::to_string(a.algebra.dim()) + ">";
      });

  py::class_<PyWindow>(m, "AlgebraWindow")
      .def_property_readonly("dim", [](const PyWindow& w) { return w.window.dim(); })
      .def_property_readonly("labels",
                             [](const PyWindow& w) {
                               std::vector<std::string> out;
                               for (const auto& e : w.window.elements()) out.push_back(e.label);
                               return out;
                             })
      .def_property_readonly("degrees",
                             [](const PyWindow& w) {
                               std::vector<long> out;
                               for (const auto& e : w.window.elements())
                                 out.push_back(e.degree);
                               return out;
                             })
      .def("to_json", [](const PyWindow& w) { return window_to_json(w.window).dump(2); })
      .def(
          "cpa_solve_json",
          [](const PyWindow& w, long degree_bound, unsigned long long budget) {
            long B = degree_bound >= 0 ? degree_bound : w.window.bound();
            return report_json(cpa_solve(w.window, B, budget_of(budget))).dump();
          },
          py::arg("degree_bound") = -1, py::arg("budget") = 100000ull)
      .def("verify_cpa",
           [](const PyWindow& w,
              const std::vector<std::tuple<int, int, int, std::string>>& entries) {
             int n = w.window.dim();
             BilinearMap phi(n);
             for (const auto& [i, j, k, v] : entries) {
               if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
                 throw py::index_error("map entry index out of range");
               phi.at(i, j, k) = rat_parse(v);
             }
             CpaCheck c = verify_cpa(w.window, phi);
             return py::make_tuple(c.ok, c.identity);
           })
      .def("__repr__", [](const PyWindow& w) {
        return "<AlgebraWindow dim=" + std::to_string(w.window.dim()) + ">";
      });

  m.def("builtin", [](const std::string& name) {
    BuiltinAlgebra b = builtin(name);
    return PyAlgebra{std::move(b.algebra), std::move(b.grading)};
  });
  m.def("builtin_names", &builtin_names);
  m.def("from_json", [](const std::string& text) {
    BuiltinAlgebra b = algebra_from_json(Json::parse(text));
    return PyAlgebra{std::move(b.algebra), std::move(b.grading)};
  });
  m.def(
      "semidirect_model",
      [](const std::string& base, int trunc, bool pinched) {
        return make_model(base, trunc, pinched, false);
      },
      py::arg("base") = "sl2", py::arg("trunc") = 3, py::arg("pinched") = false);
  m.def(
      "central_extension_model",
      [](const std::string& base, int trunc, bool pinched) {
        return make_model(base, trunc, pinched, true);
      },
      py::arg("base") = "sl2", py::arg("trunc") = 3, py::arg("pinched") = true);
  m.def("loop_window", [](const std::string& name, int N) {
    BuiltinAlgebra b = builtin(name);
    return PyWindow{loop_window(as_graded({b.algebra, b.grading}), N)};
  });
  m.def(
      "witt_window",
      [](int N, bool one_sided) { return PyWindow{witt_window(N, one_sided)}; },
      py::arg("N"), py::arg("one_sided") = false);
  m.def("kac_moody_window", [](const std::string& name, int N) {
    BuiltinAlgebra b = builtin(name);
    return PyWindow{kac_moody_window(as_graded({b.algebra, b.grading}), N)};
  });
  m.def(
      "verify_suite_json",
      [](const std::string& id, unsigned long long budget, unsigned long long seed) {
        SuiteResult res = run_verify_suite(id, budget_of(budget), seed);
        Json j;
        j["id"] = res.id;
        j["pass"] = res.pass;
        Json checks = Json::array();
        for (const SubCheck& c : res.checks)
          checks.push_back(Json{{"name", c.name},
                                {"expected", c.expected},
                                {"computed", c.computed},
                                {"pass", c.pass}});
        j["checks"] = checks;
        j["seconds"] = res.seconds;
        return j.dump();
      },
      py::arg("id"), py::arg("budget") = 100000ull, py::arg("seed") = 20240501ull);
  m.def("verify_suite_ids", &verify_suite_ids);
}

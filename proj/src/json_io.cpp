#include "postlie/json_io.hpp"

#include <fstream>

namespace postlie {

Json grading_to_json(const Grading& g) {
  Json j;
  if (g.group.kind == GradeGroup::Kind::Integers)
    j["group"] = "Z";
  else
    j["group"] = Json{{"Zmod", g.group.modulus}};
  j["degrees"] = g.degrees;
  return j;
}

Grading grading_from_json(const Json& j, int dim) {
  Grading g;
  if (!j.contains("group") || !j.contains("degrees"))
    throw ValidationError("grading JSON needs 'group' and 'degrees'");
  if (j["group"].is_string() && j["group"] == "Z") {
    g.group = GradeGroup::integers();
  } else if (j["group"].is_object() && j["group"].contains("Zmod")) {
    g.group = GradeGroup::mod(j["group"]["Zmod"].get<long>());
  } else {
    throw ValidationError("grading group must be \"Z\" or {\"Zmod\": n}");
  }
  for (const auto& d : j["degrees"]) g.degrees.push_back(d.get<long>());
  if (static_cast<int>(g.degrees.size()) != dim)
    throw ValidationError("grading degree list length does not match dim");
  return g;
}

Json algebra_to_json(const LieAlgebra& L, const std::optional<Grading>& grading) {
  Json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  Json brackets = Json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int jx = i + 1; jx < L.dim(); ++jx) {
      const auto& row = L.bracket(i, jx);
      if (row.empty()) continue;
      Json entry = Json::array();
      entry.push_back(i);
      entry.push_back(jx);
      Json terms = Json::array();
      for (const auto& [k, v] : row) terms.push_back(Json::array({k, rat_str(v)}));
      entry.push_back(terms);
      brackets.push_back(entry);
    }
  j["brackets"] = brackets;
  if (grading) j["grading"] = grading_to_json(*grading);
  return j;
}

BuiltinAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("dim")) throw ValidationError("algebra JSON needs 'dim'");
  int dim = j["dim"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& s : j["labels"]) labels.push_back(s.get<std::string>());
  std::vector<BracketEntry> table;
  if (j.contains("brackets"))
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw ValidationError("bracket entry must be [i, j, [[k, coeff], ...]]");
      BracketEntry e;
      e.i = entry[0].get<int>();
      e.j = entry[1].get<int>();
      for (const auto& term : entry[2])
        e.value.emplace_back(term[0].get<int>(), rat_parse(term[1].get<std::string>()));
      table.push_back(std::move(e));
    }
  LieAlgebra L = LieAlgebra::from_structure_constants(dim, std::move(labels), table);
  std::optional<Grading> grading;
  if (j.contains("grading")) {
    GradedLieAlgebra g = attach_grading(L, grading_from_json(j["grading"], dim));
    grading = g.grading;
  }
  return {std::move(L), std::move(grading)};
}

Json map_to_json(const BilinearMap& m) {
  Json j;
  j["dim"] = m.dim();
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int jx = 0; jx < m.dim(); ++jx)
      for (int k = 0; k < m.dim(); ++k)
        if (!is_zero(m.at(i, jx, k)))
          entries.push_back(Json::array({i, jx, k, rat_str(m.at(i, jx, k))}));
  j["entries"] = entries;
  return j;
}

BilinearMap map_from_json(const Json& j) {
  if (!j.contains("dim")) throw ValidationError("map JSON needs 'dim'");
  int dim = j["dim"].get<int>();
  if (dim < 0) throw ValidationError("map dimension must be nonnegative");
  BilinearMap m(dim);
  if (j.contains("entries"))
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 4)
        throw ValidationError("map entry must be [i, j, k, coeff]");
      int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
      if (a < 0 || b < 0 || c < 0 || a >= dim || b >= dim || c >= dim)
        throw ValidationError("map entry index out of range");
      m.at(a, b, c) = rat_parse(e[3].get<std::string>());
    }
  return m;
}

namespace {

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::D: return "D";
    case SpaceKind::Dcomm: return "Dcomm";
    case SpaceKind::C: return "C";
    case SpaceKind::Custom: return "Custom";
  }
  return "?";
}

}  // namespace

Json space_to_json(const BilinearMapSpace& space, const std::optional<Grading>& grading) {
  Json j;
  j["kind"] = kind_name(space.kind);
  j["ambient_dim"] = space.ambient;
  j["dim"] = space.dim();
  Json basis = Json::array();
  for (const BilinearMap& m : space.basis) {
    Json jm = map_to_json(m);
    if (grading) {
      auto deg = degree_of(m, *grading);
      if (deg) jm["degree"] = *deg;
    }
    basis.push_back(jm);
  }
  j["basis"] = basis;
  return j;
}

Json window_to_json(const AlgebraWindow& w) {
  Json j;
  switch (w.kind()) {
    case AlgebraWindow::Kind::Loop: j["kind"] = "loop"; break;
    case AlgebraWindow::Kind::Witt: j["kind"] = "witt"; break;
    case AlgebraWindow::Kind::KacMoody: j["kind"] = "kac_moody"; break;
  }
  j["bound"] = w.bound();
  j["one_sided"] = w.one_sided();
  j["dim"] = w.dim();
  Json basis = Json::array();
  for (const WindowElement& e : w.elements())
    basis.push_back(Json{{"label", e.label}, {"degree", e.degree}, {"base_index", e.base_index}});
  j["basis"] = basis;
  Json brackets = Json::array();
  Json undefined = Json::array();
  for (int a = 0; a < w.dim(); ++a)
    for (int b = a + 1; b < w.dim(); ++b) {
      if (!w.defined(a, b)) {
        undefined.push_back(Json::array({a, b}));
        continue;
      }
      if (w.bracket(a, b).empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, v] : w.bracket(a, b)) terms.push_back(Json::array({k, rat_str(v)}));
      brackets.push_back(Json::array({a, b, terms}));
    }
  j["brackets"] = brackets;
  j["undefined"] = undefined;
  return j;
}

Json report_to_json(const CpaReport& report, const Json& manifest, bool include_timing) {
  Json j;
  j["manifest"] = manifest;
  j["verdict"] = verdict_name(report.verdict);
  j["dcomm_dim"] = report.dcomm_dim;
  j["solution_dim"] = report.solution_dim();
  Json basis = Json::array();
  for (const BilinearMap& m : report.solution_basis) basis.push_back(map_to_json(m));
  j["solution_basis"] = basis;
  Json witnesses = Json::array();
  for (const BilinearMap& m : report.witnesses) witnesses.push_back(map_to_json(m));
  j["witnesses"] = witnesses;
  j["ideal_generators"] = report.ideal_generators;
  j["certificate"] = report.certificate;
  if (report.windowed) {
    Json dd = Json::array();
    for (const auto& [g, d] : report.per_degree_dcomm) dd.push_back(Json::array({g, d}));
    j["per_degree_dcomm"] = dd;
    Json ds = Json::array();
    for (const auto& [g, d] : report.per_degree_solution) ds.push_back(Json::array({g, d}));
    j["per_degree_solution"] = ds;
  }
  if (include_timing) j["timing"] = Json{{"seconds", report.seconds}};
  return j;
}

BuiltinAlgebra load_algebra(const std::string& input) {
  try {
    return builtin(input);
  } catch (const UnknownFamily&) {
    // fall through to file loading
  }
  std::ifstream in(input);
  if (!in) throw ValidationError("cannot open algebra file '" + input + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("bad JSON in '" + input + "': " + e.what());
  }
  return algebra_from_json(j);
}

}  // namespace postlie

#ifndef POSTLIE_JSON_IO_HPP
#define POSTLIE_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "postlie/bilinear.hpp"
#include "postlie/constructions.hpp"
#include "postlie/cpa.hpp"
#include "postlie/grading.hpp"
#include "postlie/lie_algebra.hpp"
#include "postlie/window.hpp"

namespace postlie {

// insertion-ordered JSON keeps reports byte-identical across runs
using Json = nlohmann::ordered_json;

Json algebra_to_json(const LieAlgebra& L, const std::optional<Grading>& grading);
BuiltinAlgebra algebra_from_json(const Json& j);

Json grading_to_json(const Grading& g);
Grading grading_from_json(const Json& j, int dim);

Json map_to_json(const BilinearMap& m);
BilinearMap map_from_json(const Json& j);

Json space_to_json(const BilinearMapSpace& space, const std::optional<Grading>& grading);

Json window_to_json(const AlgebraWindow& w);

/// Report serialization; timing is attached only when include_timing is set
/// so that default reports are byte-identical for identical manifests.
Json report_to_json(const CpaReport& report, const Json& manifest, bool include_timing);

/// Resolves a CLI input: a builtin name, or a path to an algebra JSON file.
BuiltinAlgebra load_algebra(const std::string& input);

}  // namespace postlie

#endif

#include "postlie/grading.hpp"

namespace postlie {

GradeGroup GradeGroup::mod(long n) {
  if (n < 1) throw InvalidGrading("modulus must be >= 1");
  return {Kind::Mod, n};
}

long GradeGroup::normalize(long g) const {
  if (kind == Kind::Integers) return g;
  long r = g % modulus;
  return r < 0 ? r + modulus : r;
}

std::map<long, std::vector<int>> Grading::components() const {
  std::map<long, std::vector<int>> comps;
  for (size_t i = 0; i < degrees.size(); ++i)
    comps[group.normalize(degrees[i])].push_back(static_cast<int>(i));
  return comps;
}

GradedLieAlgebra attach_grading(const LieAlgebra& L, Grading grading) {
  if (static_cast<int>(grading.degrees.size()) != L.dim())
    throw InvalidGrading("degree list length does not match dimension");
  for (long& d : grading.degrees) d = grading.group.normalize(d);
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      long target = grading.group.add(grading.degrees[i], grading.degrees[j]);
      for (const auto& [k, v] : L.bracket(i, j)) {
        if (grading.group.normalize(grading.degrees[k]) != target)
          throw GradingIncompatible(
              i, j, k,
              "bracket [" + L.labels()[i] + ", " + L.labels()[j] +
                  "] has a component on " + L.labels()[k] + " outside degree " +
                  std::to_string(target));
      }
    }
  return GradedLieAlgebra{L, std::move(grading)};
}

}  // namespace postlie

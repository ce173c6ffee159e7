#ifndef POSTLIE_POLYNOMIAL_HPP
#define POSTLIE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "postlie/rational.hpp"

namespace postlie {

/// Exponent vector over a fixed variable set c1..cm.
struct Monomial {
  std::vector<unsigned> e;

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;
  /// Nonzero exponent on exactly one variable: returns it, else -1.
  int pure_power_var() const;
  bool operator==(const Monomial&) const = default;
};

/// Degree-lexicographic order, c1 > c2 > ... on ties.
struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q with terms kept in canonical
/// degree-lexicographic order and no zero coefficients.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial variable(int nvars, int var);
  static Polynomial constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  unsigned degree() const;
  bool is_constant() const;

  void add_term(const Monomial& m, const Rational& c);
  const std::map<Monomial, Rational, DegLexLess>& terms() const { return terms_; }

  /// Leading (largest) term under deg-lex.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial term_multiple(const Monomial& m, const Rational& c) const;

  /// Divides by the gcd of the coefficients and makes the leading
  /// coefficient positive.
  Polynomial content_stripped() const;
  Polynomial monic() const;

  /// Substitutes each variable by a polynomial (used for linear
  /// parameterizations); subs must have nvars() entries.
  Polynomial substitute(const std::vector<Polynomial>& subs) const;

  Rational evaluate(const Vec& point) const;

  std::string str() const;
  static Polynomial parse(int nvars, const std::string& text);

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator<(const Polynomial& o) const;  // for canonical sorting

 private:
  int nvars_;
  std::map<Monomial, Rational, DegLexLess> terms_;
};

}  // namespace postlie

#endif

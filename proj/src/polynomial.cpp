#include "postlie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace postlie {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool Monomial::is_one() const { return degree() == 0; }

bool Monomial::divides(const Monomial& other) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) {
    if (other.e[i] > e[i]) throw std::invalid_argument("monomial division underflow");
    r.e[i] -= other.e[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && other.e[i] > 0) return false;
  return true;
}

int Monomial::pure_power_var() const {
  int var = -1;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) {
      if (var >= 0) return -1;
      var = static_cast<int>(i);
    }
  return var;
}

bool DegLexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // lex with c1 biggest: a < b iff at the first differing variable a has
  // the smaller exponent
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

Polynomial Polynomial::variable(int nvars, int var) {
  Polynomial p(nvars);
  Monomial m{std::vector<unsigned>(nvars, 0)};
  m.e[var] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (!postlie::is_zero(c)) p.terms_.emplace(Monomial{std::vector<unsigned>(nvars, 0)}, c);
  return p;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (postlie::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (postlie::is_zero(it->second)) terms_.erase(it);
  }
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(nvars_);
  if (postlie::is_zero(c)) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::term_multiple(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (postlie::is_zero(c)) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
  return r;
}

Polynomial Polynomial::content_stripped() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(leading_coeff()) < 0) content = -content;
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / content);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading_coeff());
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("substitute: wrong substitution count");
  int out_vars = subs.empty() ? 0 : subs[0].nvars();
  Polynomial r(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(out_vars, c);
    for (int v = 0; v < nvars_; ++v)
      for (unsigned k = 0; k < m.e[v]; ++k) t = t * subs[v];
    r = r + t;
  }
  return r;
}

Rational Polynomial::evaluate(const Vec& point) const {
  Rational r(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nvars_; ++v)
      for (unsigned k = 0; k < m.e[v]; ++k) t *= point[v];
    r += t;
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    first = false;
    bool coeff_one = (c == 1);
    bool has_vars = !it->first.is_one();
    if (!coeff_one || !has_vars) os << rat_str(c);
    if (has_vars) {
      bool star = !coeff_one || false;
      bool first_var = true;
      for (int v = 0; v < nvars_; ++v) {
        unsigned e = it->first.e[v];
        if (e == 0) continue;
        if (!first_var || star) os << "*";
        os << "c" << (v + 1);
        if (e > 1) os << "^" << e;
        first_var = false;
      }
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(int nvars, const std::string& text) {
  Polynomial p(nvars);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return p;
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+') {
      sign = 1;
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {
      sign = -1;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("polynomial parse: missing operator");
    skip_ws();
    Rational coeff(1);
    Monomial mono{std::vector<unsigned>(nvars, 0)};
    bool saw_coeff = false;
    if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
        ++j;
      coeff = rat_parse(text.substr(i, j - i));
      i = j;
      saw_coeff = true;
    }
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i >= text.size() || text[i] != 'c') break;
      ++i;
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("polynomial parse: bad variable");
      int var = std::stoi(text.substr(i, j - i)) - 1;
      if (var < 0 || var >= nvars)
        throw std::invalid_argument("polynomial parse: variable out of range");
      i = j;
      unsigned exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t k = i;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == i) throw std::invalid_argument("polynomial parse: bad exponent");
        exp = static_cast<unsigned>(std::stoul(text.substr(i, k - i)));
        i = k;
      }
      mono.e[var] += exp;
      saw_coeff = true;
    }
    if (!saw_coeff) throw std::invalid_argument("polynomial parse: empty term");
    p.add_term(mono, sign * coeff);
    sign = 1;
    expect_term = false;
  }
  return p;
}

bool Polynomial::operator<(const Polynomial& o) const {
  // compare term lists from the leading end
  auto it = terms_.rbegin();
  auto jt = o.terms_.rbegin();
  DegLexLess less;
  for (; it != terms_.rend() && jt != o.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return less(it->first, jt->first);
    if (it->second != jt->second) return it->second < jt->second;
  }
  return terms_.size() < o.terms_.size();
}

}  // namespace postlie

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitgraph/errors.hpp"
#include "splitgraph/multigraph.hpp"

namespace splitgraph {

using Integer = mpz_class;

// Product of variables with positive exponents, variables in natural order.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(const std::string& var, unsigned exp = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  unsigned degree() const;
  unsigned degree_in(const std::string& var) const;
  Monomial without(const std::string& var) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial operator/(const Monomial& o) const;  // exact, throws otherwise
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;  // "1" for the empty monomial

  bool operator==(const Monomial& o) const { return f_ == o.f_; }
  bool operator!=(const Monomial& o) const { return f_ != o.f_; }

 private:
  std::vector<Factor> f_;
};

// Graded lexicographic order, variables ranked by natural order (e1 > e2).
// True when a comes strictly before b in descending order.
struct TermOrderDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, TermOrderDesc>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& c);
  explicit Polynomial(const Monomial& m, const Integer& c = 1);
  static Polynomial var(const std::string& name);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer constant_value() const;  // coefficient of 1
  std::pair<Monomial, Integer> leading_term() const;

  std::vector<std::string> variables() const;  // natural order
  unsigned degree_in(const std::string& v) const;
  unsigned total_degree() const;
  bool is_linear_in_every_variable() const;

  // Coefficients of v^0, v^1, ...
  std::vector<Polynomial> coefficients_in(const std::string& v) const;

  Integer evaluate(const std::map<std::string, Integer>& assignment) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial operator*(const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text, e.g. "- 2*e1*e3^2 + e2"; zero prints as "0".
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

struct Slices {
  Polynomial a, b, c;  // p = a*v^2 + b*v + c
};
Slices coefficient_slices(const Polynomial& p, const std::string& v);

// GCD monomial of all terms, and the cofactor.
std::pair<Monomial, Polynomial> monomial_content(const Polynomial& p);

// Exact quotient p / d when d divides p over the integers.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

// r with r*r == p, leading coefficient positive; none if p is not a square.
std::optional<Polynomial> perfect_square_root(const Polynomial& p);

// p with its leading coefficient made positive.
Polynomial normalize_sign(const Polynomial& p);

}  // namespace splitgraph

#ifndef UMBRAL_POLY_HPP
#define UMBRAL_POLY_HPP

#include <umbral/rational.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umbral {

// Named indeterminates live in one process-wide interner so that "t" means
// the same thing in every module. Creating a variable twice is a lookup.
class Variable {
public:
  Variable() : id_(0) {}
  std::uint32_t id() const { return id_; }
  friend bool operator==(Variable a, Variable b) { return a.id_ == b.id_; }
  friend auto operator<=>(Variable a, Variable b) { return a.id_ <=> b.id_; }

private:
  explicit Variable(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
  friend Variable variable(std::string_view);
  friend const std::string& variable_name(Variable);
};

Variable variable(std::string_view name);
const std::string& variable_name(Variable v);

// Power product with integer exponents. Negative exponents are allowed so
// that parameters like p admit exact reciprocals (Laurent monomials).
class Monomial {
public:
  Monomial() = default;

  static Monomial of(Variable v, int exp = 1);

  bool empty() const { return factors_.empty(); }
  int exponent(Variable v) const;
  int total_degree() const;
  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

private:
  // sorted by variable id, exponents nonzero
  std::vector<std::pair<Variable, int>> factors_;
  friend class Poly;
};

// Sparse multivariate (Laurent) polynomial over Rational.
class Poly {
public:
  Poly() = default;
  Poly(const Rational& c);
  Poly(long n);
  Poly(int n) : Poly(static_cast<long>(n)) {}

  static Poly var(std::string_view name, int exp = 1);
  static Poly var(Variable v, int exp = 1);
  static Poly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // constant term (coefficient of the empty monomial)
  Rational constant() const;
  // requires is_constant()
  Rational as_rational() const;

  // single nonzero term c * prod v^e; such polynomials have exact inverses
  bool is_term() const { return terms_.size() == 1; }
  Poly inverse() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o);
  Poly operator*(const Rational& c) const;
  Poly& operator*=(const Rational& c);
  Poly pow(int e) const; // e < 0 requires is_term()

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  bool depends_on(Variable v) const;
  std::vector<Variable> variables() const;
  int degree(Variable v) const;     // max exponent, 0 if absent
  int min_degree(Variable v) const; // min exponent, 0 if absent

  Poly substitute(Variable v, const Poly& value) const;
  Poly substitute(const std::map<Variable, Poly>& values) const;
  // coefficient polynomials per power of v (v itself removed)
  std::map<int, Poly> collect(Variable v) const;
  Poly coefficient(Variable v, int power) const;
  Poly derivative(Variable v) const;

  // total evaluation; every variable of the poly must be bound
  Rational eval(const std::map<Variable, Rational>& values) const;
  double eval_double(const std::map<Variable, double>& values) const;

  // canonical human-readable form: terms by total degree descending, then
  // lexicographically by variable name
  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
  friend struct PolyRender;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// rows of terms in canonical display order: (coefficient, [(name, exp)...])
struct PolyRender {
  struct Term {
    Rational coeff;
    std::vector<std::pair<std::string, int>> powers;
  };
  static std::vector<Term> canonical_terms(const Poly& p);
};

} // namespace umbral

#endif

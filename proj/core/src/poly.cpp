#include <umbral/poly.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace umbral {

namespace {

struct Interner {
  std::mutex mu;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::string> names;
};

Interner& interner()
{
  static Interner* in = [] {
    auto* i = new Interner;
    i->names.emplace_back("1"); // id 0 reserved
    return i;
  }();
  return *in;
}

} // namespace

Variable variable(std::string_view name)
{
  if (name.empty())
    throw std::invalid_argument("variable: empty name");
  auto& in = interner();
  std::lock_guard lock(in.mu);
  auto it = in.ids.find(std::string(name));
  if (it != in.ids.end())
    return Variable(it->second);
  auto id = static_cast<std::uint32_t>(in.names.size());
  in.names.emplace_back(name);
  in.ids.emplace(std::string(name), id);
  return Variable(id);
}

const std::string& variable_name(Variable v)
{
  auto& in = interner();
  std::lock_guard lock(in.mu);
  return in.names.at(v.id());
}

Monomial Monomial::of(Variable v, int exp)
{
  Monomial m;
  if (exp != 0)
    m.factors_.emplace_back(v, exp);
  return m;
}

int Monomial::exponent(Variable v) const
{
  for (const auto& [var, e] : factors_)
    if (var == v)
      return e;
  return 0;
}

int Monomial::total_degree() const
{
  int d = 0;
  for (const auto& [var, e] : factors_)
    d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const
{
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), ae = factors_.end();
  auto b = o.factors_.begin(), be = o.factors_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0)
        r.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, ae);
  r.factors_.insert(r.factors_.end(), b, be);
  return r;
}

Monomial Monomial::pow(int e) const
{
  Monomial r;
  if (e == 0)
    return r;
  r.factors_ = factors_;
  for (auto& [var, ex] : r.factors_)
    ex *= e;
  return r;
}

Poly::Poly(const Rational& c)
{
  if (c != 0)
    terms_.emplace(Monomial(), c);
}

Poly::Poly(long n)
{
  if (n != 0)
    terms_.emplace(Monomial(), Rational(n));
}

Poly Poly::var(std::string_view name, int exp)
{
  return var(variable(name), exp);
}

Poly Poly::var(Variable v, int exp)
{
  Poly p;
  p.terms_.emplace(Monomial::of(v, exp), Rational(1));
  return p;
}

Poly Poly::term(const Rational& c, const Monomial& m)
{
  Poly p;
  if (c != 0)
    p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const
{
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant() const
{
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::as_rational() const
{
  if (!is_constant())
    throw std::domain_error("Poly::as_rational: polynomial is not constant: " + str());
  return constant();
}

Poly Poly::inverse() const
{
  if (!is_term())
    throw std::domain_error("Poly::inverse: not an invertible term: " + str());
  const auto& [m, c] = *terms_.begin();
  return term(Rational(1) / c, m.pow(-1));
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o)
{
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const
{
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const
{
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const
{
  Poly r = *this;
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const
{
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& o)
{
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Rational& c) const
{
  Poly r = *this;
  r *= c;
  return r;
}

Poly& Poly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_)
    coeff *= c;
  return *this;
}

Poly Poly::pow(int e) const
{
  if (e == 0)
    return Poly(1L);
  if (e < 0)
    return inverse().pow(-e);
  Poly base = *this;
  Poly r(1L);
  int n = e;
  while (n > 0) {
    if (n & 1)
      r *= base;
    n >>= 1;
    if (n > 0)
      base *= base;
  }
  return r;
}

bool Poly::depends_on(Variable v) const
{
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0)
      return true;
  return false;
}

std::vector<Variable> Poly::variables() const
{
  std::vector<Variable> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m.factors())
      if (std::find(vs.begin(), vs.end(), var) == vs.end())
        vs.push_back(var);
  std::sort(vs.begin(), vs.end());
  return vs;
}

int Poly::degree(Variable v) const
{
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, m.exponent(v));
  return d;
}

int Poly::min_degree(Variable v) const
{
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::min(d, m.exponent(v));
  return d;
}

Poly Poly::substitute(Variable v, const Poly& value) const
{
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    Monomial rest;
    for (const auto& [var, ex] : m.factors())
      if (!(var == v))
        rest = rest * Monomial::of(var, ex);
    r += Poly::term(c, rest) * value.pow(e);
  }
  return r;
}

Poly Poly::substitute(const std::map<Variable, Poly>& values) const
{
  Poly r = *this;
  for (const auto& [v, val] : values)
    r = r.substitute(v, val);
  return r;
}

std::map<int, Poly> Poly::collect(Variable v) const
{
  std::map<int, Poly> r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    Monomial rest;
    for (const auto& [var, ex] : m.factors())
      if (!(var == v))
        rest = rest * Monomial::of(var, ex);
    r[e].add_term(rest, c);
  }
  return r;
}

Poly Poly::coefficient(Variable v, int power) const
{
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != power)
      continue;
    Monomial rest;
    for (const auto& [var, ex] : m.factors())
      if (!(var == v))
        rest = rest * Monomial::of(var, ex);
    r.add_term(rest, c);
  }
  return r;
}

Poly Poly::derivative(Variable v) const
{
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0)
      continue;
    Monomial rest;
    for (const auto& [var, ex] : m.factors())
      if (!(var == v))
        rest = rest * Monomial::of(var, ex);
    r.add_term(rest * Monomial::of(v, e - 1), c * Rational(e));
  }
  return r;
}

Rational Poly::eval(const std::map<Variable, Rational>& values) const
{
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [var, e] : m.factors()) {
      auto it = values.find(var);
      if (it == values.end())
        throw std::invalid_argument("Poly::eval: unbound variable " + variable_name(var));
      if (e >= 0) {
        t *= umbral::pow(it->second, static_cast<unsigned>(e));
      } else {
        if (it->second == 0)
          throw std::domain_error("Poly::eval: zero raised to negative power");
        t /= umbral::pow(it->second, static_cast<unsigned>(-e));
      }
    }
    total += t;
  }
  return total;
}

double Poly::eval_double(const std::map<Variable, double>& values) const
{
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (const auto& [var, e] : m.factors()) {
      auto it = values.find(var);
      if (it == values.end())
        throw std::invalid_argument("Poly::eval_double: unbound variable " + variable_name(var));
      double b = it->second;
      double f = 1.0;
      int n = e >= 0 ? e : -e;
      for (int i = 0; i < n; ++i)
        f *= b;
      t *= e >= 0 ? f : 1.0 / f;
    }
    total += t;
  }
  return total;
}

std::vector<PolyRender::Term> PolyRender::canonical_terms(const Poly& p)
{
  std::vector<Term> out;
  out.reserve(p.terms_.size());
  for (const auto& [m, c] : p.terms_) {
    Term t;
    t.coeff = c;
    for (const auto& [var, e] : m.factors())
      t.powers.emplace_back(variable_name(var), e);
    std::sort(t.powers.begin(), t.powers.end());
    out.push_back(std::move(t));
  }
  auto degree = [](const Term& t) {
    int d = 0;
    for (const auto& [n, e] : t.powers)
      d += e;
    return d;
  };
  // total degree descending, then exponents ascending over the name-ordered
  // union of variables (absent variable = exponent 0)
  auto exp_less = [](const Term& a, const Term& b) {
    auto ia = a.powers.begin(), ib = b.powers.begin();
    while (ia != a.powers.end() || ib != b.powers.end()) {
      if (ia == a.powers.end())
        return 0 < ib->second;
      if (ib == b.powers.end())
        return ia->second < 0;
      if (ia->first != ib->first) {
        if (ia->first < ib->first)
          return ia->second < 0;
        return 0 < ib->second;
      }
      if (ia->second != ib->second)
        return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    return false;
  };
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    int da = degree(a), db = degree(b);
    if (da != db)
      return da > db;
    return exp_less(a, b);
  });
  return out;
}

std::string Poly::str() const
{
  if (terms_.empty())
    return "0";
  auto rows = PolyRender::canonical_terms(*this);
  std::ostringstream os;
  bool first = true;
  for (const auto& t : rows) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0)
        c = -c;
    }
    first = false;
    bool has_vars = !t.powers.empty();
    if (!has_vars || c != 1)
      os << to_string(c);
    bool lead = !has_vars || c != 1;
    for (const auto& [name, e] : t.powers) {
      if (lead)
        os << "*";
      lead = true;
      os << name;
      if (e != 1)
        os << "^" << e;
    }
  }
  return os.str();
}

} // namespace umbral

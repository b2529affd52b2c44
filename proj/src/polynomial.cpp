#include "qhahn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qhahn {

namespace {
constexpr std::string_view kVarNames = "xyuvts";
}

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  if (name.size() != 1)
    return std::nullopt;
  const auto pos = kVarNames.find(name[0]);
  if (pos == std::string_view::npos)
    return std::nullopt;
  return static_cast<Var>(pos);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned power) { return Monomial{}.with(v, power); }

Monomial Monomial::of(std::initializer_list<std::pair<Var, unsigned>> powers) {
  Monomial m;
  for (const auto &[v, p] : powers)
    m.exp_[static_cast<std::size_t>(v)] += static_cast<Exponent>(p);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp_)
    d += e;
  return d;
}

bool Monomial::divides(const Monomial &other) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (exp_[i] > other.exp_[i])
      return false;
  return true;
}

Monomial Monomial::with(Var v, unsigned power) const {
  Monomial m = *this;
  m.exp_[static_cast<std::size_t>(v)] = static_cast<Exponent>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i)
    m.exp_[i] = static_cast<Exponent>(exp_[i] + o.exp_[i]);
  return m;
}

Monomial Monomial::operator/(const Monomial &o) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i)
    m.exp_[i] = static_cast<Exponent>(exp_[i] - o.exp_[i]);
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += kVarNames[i];
    if (exp_[i] > 1)
      out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexLess::operator()(const Monomial &a, const Monomial &b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db)
    return da < db;
  return a.exponents() < b.exponents();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational &c) {
  if (!c.is_zero())
    terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Rational &c, const Monomial &m) {
  if (!c.is_zero())
    terms_.emplace(m, c);
}

Polynomial Polynomial::variable(Var v, const Rational &c, unsigned power) {
  return Polynomial(c, Monomial::of(v, power));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::degree_in(Var v) const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, static_cast<int>(m[v]));
  return d;
}

int Polynomial::degree_in_xy() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, static_cast<int>(m[Var::x] + m[Var::y]));
  return d;
}

const std::pair<const Monomial, Rational> &Polynomial::leading_term() const {
  return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) {
  *this = *this * o;
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coef] : terms_)
    coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  return mul_truncated(a, b, -1, -1);
}

namespace {

void append_term(std::string &out, const Monomial &m, const Rational &c, bool first) {
  const bool negative = c.sign() < 0;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational mag = c.abs();
  if (m.is_one()) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += m.to_string();
  } else {
    out += mag.to_string();
    out += '*';
    out += m.to_string();
  }
}

} // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, it->first, it->second, first);
    first = false;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p) { return os << p.to_string(); }

// ----------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    result += term(negative);
    for (;;) {
      skip_ws();
      if (at_end())
        break;
      const char op = get();
      if (op != '+' && op != '-')
        fail("expected '+' or '-'");
      skip_ws();
      result += term(op == '-');
    }
    return result;
  }

private:
  Polynomial term(bool negative) {
    Rational coeff = negative ? -1 : 1;
    Monomial mono;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (auto v = parse_var(text_.substr(pos_, 1))) {
        ++pos_;
        unsigned power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = static_cast<unsigned>(digits());
        }
        mono = mono * Monomial::of(*v, power);
      } else {
        fail("expected a number or a variable");
      }
      skip_ws();
      if (peek() != '*')
        break;
      ++pos_;
    }
    return Polynomial(coeff, mono);
  }

  Rational number() {
    const std::size_t start = pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  unsigned long digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      fail("expected digits");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

// -------------------------------------------------------------- operations

Polynomial mul_truncated(const Polynomial &a, const Polynomial &b, int cap_t, int cap_s) {
  Polynomial result;
  if (a.is_zero() || b.is_zero())
    return result;
  const bool limit_t = cap_t >= 0, limit_s = cap_s >= 0;
  Rational prod;
  for (const auto &[ma, ca] : a.terms()) {
    const int ta = static_cast<int>(ma[Var::t]), sa = static_cast<int>(ma[Var::s]);
    if ((limit_t && ta > cap_t) || (limit_s && sa > cap_s))
      continue;
    for (const auto &[mb, cb] : b.terms()) {
      if (limit_t && ta + static_cast<int>(mb[Var::t]) > cap_t)
        continue;
      if (limit_s && sa + static_cast<int>(mb[Var::s]) > cap_s)
        continue;
      prod = ca;
      prod *= cb;
      result.add_term(ma * mb, prod);
    }
  }
  return result;
}

Polynomial truncate(const Polynomial &p, int cap_t, int cap_s) {
  Polynomial r;
  for (const auto &[m, c] : p.terms())
    if (static_cast<int>(m[Var::t]) <= cap_t && static_cast<int>(m[Var::s]) <= cap_s)
      r.add_term(m, c);
  return r;
}

Polynomial pow(const Polynomial &p, unsigned n) {
  Polynomial r = 1;
  for (unsigned i = 0; i < n; ++i)
    r *= p;
  return r;
}

Polynomial substitute_scale(const Polynomial &p, Var var, const Rational &c) {
  Polynomial r;
  for (const auto &[m, coef] : p.terms())
    r.add_term(m, coef * c.pow(m[var]));
  return r;
}

Polynomial substitute(const Polynomial &p, Var var, const Polynomial &replacement) {
  Polynomial r;
  for (const auto &[m, coef] : p.terms()) {
    const Polynomial rest(coef, m.with(var, 0));
    r += rest * pow(replacement, m[var]);
  }
  return r;
}

Polynomial divide_exact(const Polynomial &p, const Polynomial &d) {
  if (d.is_zero())
    throw DivisionByZero("divide_exact by the zero polynomial");
  const auto &[lead_mono, lead_coeff] = d.leading_term();
  Polynomial rem = p, quotient, remainder;
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading_term();
    if (lead_mono.divides(m)) {
      const Polynomial step(c / lead_coeff, m / lead_mono);
      quotient += step;
      rem -= step * d;
    } else {
      remainder.add_term(m, c);
      rem.add_term(m, -c);
    }
  }
  if (!remainder.is_zero())
    throw NotDivisible("no exact quotient; remainder " + remainder.to_string(), remainder);
  return quotient;
}

Rational eval(const Polynomial &p, const Assignment &assignment) {
  Rational total = 0;
  for (const auto &[m, c] : p.terms()) {
    Rational term = c;
    for (Var v : kAllVars) {
      if (m[v] == 0)
        continue;
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw MissingAssignment(std::string("no value for variable ") + var_name(v));
      term *= it->second.pow(m[v]);
    }
    total += term;
  }
  return total;
}

Polynomial partial_eval(const Polynomial &p, const Assignment &assignment) {
  Polynomial r;
  for (const auto &[m, c] : p.terms()) {
    Rational coef = c;
    Monomial rest = m;
    for (const auto &[v, value] : assignment) {
      coef *= value.pow(m[v]);
      rest = rest.with(v, 0);
    }
    r.add_term(rest, coef);
  }
  return r;
}

} // namespace qhahn

#include "ddcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ddcalc {

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
  trim_trailing_zeros(exps_);
}

Monomial Monomial::var(int index, int exponent) {
  if (index < 1) throw std::invalid_argument("variable index must be >= 1");
  if (exponent == 0) return Monomial();
  std::vector<int> e(static_cast<std::size_t>(index), 0);
  e[static_cast<std::size_t>(index - 1)] = exponent;
  return Monomial(std::move(e));
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > support_bound()) return 0;
  return exps_[static_cast<std::size_t>(index - 1)];
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
  for (std::size_t i = 0; i < o.exps_.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.exps_.size() > exps_.size()) return false;
  for (std::size_t i = 0; i < o.exps_.size(); ++i) {
    if (exps_[i] < o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  if (!divisible_by(o)) throw NotDivisible("monomial quotient does not exist");
  std::vector<int> e = exps_;
  for (std::size_t i = 0; i < o.exps_.size(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << (i + 1);
    if (exps_[i] > 1) out << "^" << exps_[i];
    first = false;
  }
  return out.str();
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial::Polynomial(Int c) {
  if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
}

Polynomial Polynomial::monomial(Monomial m, Int coeff) {
  Polynomial f;
  if (coeff != 0) f.terms_.emplace(std::move(m), std::move(coeff));
  return f;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int Polynomial::support_bound() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.support_bound());
  return n;
}

Int Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Int(0) : it->second;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::exact_divide(const Polynomial& g) const {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial q;
  Polynomial rem = *this;
  const auto& [glm, glc] = *g.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [flm, flc] = *rem.terms_.begin();
    if (!flm.divisible_by(glm) || flc % glc != 0) {
      throw NotDivisible("polynomial is not divisible: leading term " + flm.str());
    }
    Polynomial t = Polynomial::monomial(flm.divide_by(glm), flc / glc);
    q += t;
    rem -= t * g;
  }
  return q;
}

Polynomial Polynomial::substitute(const std::function<int(int)>& slot_map) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<int> e;
    bool killed = false;
    for (int i = 1; i <= m.support_bound(); ++i) {
      int exp = m.exponent(i);
      if (exp == 0) continue;
      int target = slot_map(i);
      if (target == 0) {
        killed = true;
        break;
      }
      if (target < 0) throw std::invalid_argument("slot_map returned negative index");
      if (static_cast<std::size_t>(target) > e.size()) e.resize(static_cast<std::size_t>(target), 0);
      e[static_cast<std::size_t>(target - 1)] += exp;
    }
    if (!killed) r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.terms_.emplace(m, c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m == Monomial::one()) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << m.str();
    }
    first = false;
  }
  return out.str();
}

namespace {

// Recursive-descent parser for the grammar in the module interface:
//   poly := ['-'] term (('+'|'-') term)*
//   term := integer ['*' factors] | factors
//   factors := factor ('*' factor)*
//   factor := 'x' index ['^' exponent]
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    bool negative = accept('-');
    result += parse_term(negative);
    skip_ws();
    while (!done()) {
      if (accept('+')) {
        result += parse_term(false);
      } else if (accept('-')) {
        result += parse_term(true);
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
      skip_ws();
    }
    return result;
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_small_integer(const char* what, int min_value) {
    Int v = parse_integer();
    if (v < min_value || v > 1000000) throw ParseError(std::string(what) + " out of range", pos_);
    return static_cast<int>(v);
  }

  // factor := 'x' index ['^' exponent]
  Monomial parse_factor() {
    skip_ws();
    if (peek() != 'x') throw ParseError("expected variable", pos_);
    ++pos_;
    int index = parse_small_integer("variable index", 1);
    int exponent = 1;
    if (accept('^')) exponent = parse_small_integer("exponent", 1);
    return Monomial::var(index, exponent);
  }

  Polynomial parse_term(bool negative) {
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      saw_coeff = true;
    }
    if (negative) coeff = -coeff;
    Monomial m = Monomial::one();
    bool saw_factor = false;
    if (!saw_coeff) {
      m = m * parse_factor();
      saw_factor = true;
    }
    while (true) {
      std::size_t save = pos_;
      if (accept('*')) {
        m = m * parse_factor();
        saw_factor = true;
        continue;
      }
      skip_ws();
      if (peek() == 'x') {
        // juxtaposition after a bare coefficient, e.g. "3 x1", is rejected;
        // the grammar requires '*' between coefficient and factors unless the
        // coefficient is implicit.
        if (saw_coeff && !saw_factor) {
          m = m * parse_factor();
          saw_factor = true;
          continue;
        }
        throw ParseError("expected '*' between factors", pos_);
      }
      pos_ = save;
      break;
    }
    return Polynomial::monomial(std::move(m), std::move(coeff));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace ddcalc

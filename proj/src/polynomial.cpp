#include "contractions/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace contractions::gb {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (unsigned x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out(*this);
  for (size_t i = 0; i < e.size(); ++i) out.e[i] += o.e[i];
  return out;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial out(*this);
  for (size_t i = 0; i < e.size(); ++i) {
    if (o.e[i] > e[i]) throw std::invalid_argument("monomial division is not exact");
    out.e[i] -= o.e[i];
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
  return out;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  if (name == "grevlex") return grevlex();
  throw std::invalid_argument("unknown monomial order: " + name);
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex:
      return "lex";
    case Kind::GrLex:
      return "grlex";
    case Kind::GRevLex:
      return "grevlex";
  }
  return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const size_t n = a.e.size();
  auto at = [&](const Monomial& m, size_t pos) {
    size_t idx = priority.empty() ? pos : priority[pos];
    return m.e[idx];
  };
  if (kind != Kind::Lex) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind == Kind::GRevLex) {
    // rightmost nonzero difference, negated
    for (size_t pos = n; pos-- > 0;) {
      unsigned xa = at(a, pos), xb = at(b, pos);
      if (xa != xb) return xa > xb ? -1 : 1;
    }
    return 0;
  }
  for (size_t pos = 0; pos < n; ++pos) {
    unsigned xa = at(a, pos), xb = at(b, pos);
    if (xa != xb) return xa < xb ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(const Rat& c, size_t nvars) {
  if (c == 0) return {};
  Polynomial p;
  p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.m < a.m; });
  Polynomial p;
  for (auto& t : terms) {
    if (t.c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
  return terms_[best];
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_[0].m.total_degree();
  for (const auto& t : terms_)
    if (t.m.total_degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negate(); }

Polynomial Polynomial::negate() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial Polynomial::mul_term(const Term& t) const {
  if (t.c == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& s : terms_) p.terms_.push_back({s.m * t.m, s.c * t.c});
  // multiplying by a monomial preserves the container ordering
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(all));
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  Rat lc = leading(ord).c;
  Polynomial p(*this);
  for (auto& t : p.terms_) t.c /= lc;
  return p;
}

Polynomial Polynomial::substitute_one(size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(std::vector<unsigned>{});
    m.e.reserve(t.m.e.size() - 1);
    for (size_t i = 0; i < t.m.e.size(); ++i)
      if (i != var) m.e.push_back(t.m.e[i]);
    out.push_back({std::move(m), t.c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::insert_var(size_t at) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(std::vector<unsigned>{});
    m.e.reserve(t.m.e.size() + 1);
    for (size_t i = 0; i <= t.m.e.size(); ++i) {
      if (i == at) m.e.push_back(0);
      if (i < t.m.e.size()) m.e.push_back(t.m.e[i]);
    }
    out.push_back({std::move(m), t.c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::homogenize(size_t h) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree() - t.m.e[h]);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Term s = t;
    s.m.e[h] = d - (t.m.total_degree() - t.m.e[h]);
    out.push_back(std::move(s));
  }
  return from_terms(std::move(out));
}

Rat Polynomial::eval_coordinate_point(size_t var) const {
  // only the pure power of `var` survives
  for (const auto& t : terms_) {
    bool pure = true;
    for (size_t i = 0; i < t.m.e.size() && pure; ++i)
      if (i != var && t.m.e[i] != 0) pure = false;
    if (pure) return t.c;
  }
  return 0;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    bool needs_coeff = c != 1 || t.m.is_one();
    if (needs_coeff) os << c;
    bool printed = false;
    for (size_t i = 0; i < t.m.e.size(); ++i) {
      if (!t.m.e[i]) continue;
      if (needs_coeff || printed) os << "*";
      os << vars[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

Int parse_integer(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
  if (lx.pos == start) throw ParseError("expected an integer", lx.pos);
  return Int(lx.s.substr(start, lx.pos - start));
}

// longest variable-name match at the current position
long match_variable(Lexer& lx, const std::vector<std::string>& vars) {
  lx.skip_ws();
  long best = -1;
  size_t best_len = 0;
  for (size_t v = 0; v < vars.size(); ++v) {
    const auto& name = vars[v];
    if (name.size() > best_len && lx.s.compare(lx.pos, name.size(), name) == 0) {
      best = static_cast<long>(v);
      best_len = name.size();
    }
  }
  if (best >= 0) lx.pos += best_len;
  return best;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first_term = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++lx.pos;
    } else if (!first_term) {
      throw ParseError("expected '+' or '-' between terms", lx.pos);
    }
    first_term = false;

    Rat coeff = sign;
    Monomial mono(vars.size());
    bool any_factor = false;
    bool at_term_start = true;
    while (true) {
      char p = lx.peek();
      if (p == '\0' || p == '+' || p == '-') break;
      bool explicit_mul = false;
      if (p == '*') {
        ++lx.pos;
        explicit_mul = true;
        p = lx.peek();
      }
      if (std::isdigit(static_cast<unsigned char>(p))) {
        if (!at_term_start && !explicit_mul)
          throw ParseError("unexpected digit; use '*' or '^'", lx.pos);
        Int num = parse_integer(lx);
        if (lx.peek() == '/') {
          ++lx.pos;
          Int den = parse_integer(lx);
          if (den == 0) throw ParseError("zero denominator", lx.pos);
          coeff *= Rat(num) / Rat(den);
        } else {
          coeff *= Rat(num);
        }
        any_factor = true;
        at_term_start = false;
        continue;
      }
      long v = match_variable(lx, vars);
      if (v < 0) throw ParseError("unknown variable", lx.pos);
      unsigned exp = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        Int e = parse_integer(lx);
        if (e < 0) throw ParseError("malformed exponent", lx.pos);
        exp = static_cast<unsigned>(e.get_ui());
      }
      mono.e[static_cast<size_t>(v)] += exp;
      any_factor = true;
      at_term_start = false;
    }
    if (!any_factor) throw ParseError("empty term", lx.pos);
    terms.push_back({std::move(mono), coeff});
  }
  if (terms.empty()) throw ParseError("empty polynomial", 0);
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace contractions::gb

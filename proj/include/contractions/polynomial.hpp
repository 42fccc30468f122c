#pragma once

#include <map>
#include <string>
#include <vector>

#include "contractions/rational.hpp"

namespace contractions::gb {

struct Monomial {
  std::vector<unsigned> e;

  explicit Monomial(size_t nvars = 0) : e(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

  size_t nvars() const { return e.size(); }
  unsigned total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // requires o | *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // container order only
};

struct MonomialOrder {
  enum class Kind { Lex, GrLex, GRevLex };
  Kind kind = Kind::GRevLex;
  // variable indices from most to least significant; empty means identity
  std::vector<size_t> priority;

  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder grlex() { return {Kind::GrLex, {}}; }
  static MonomialOrder grevlex() { return {Kind::GRevLex, {}}; }
  static MonomialOrder parse(const std::string& name);
  std::string name() const;

  int compare(const Monomial& a, const Monomial& b) const;  // <0, 0, >0
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

struct Term {
  Monomial m;
  Rat c;
};

/// Exact multivariate polynomial over Q. Terms are kept in a fixed
/// order-independent container ordering; leading terms are found against an
/// explicit MonomialOrder.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(const Rat& c, size_t nvars);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading(const MonomialOrder& ord) const;
  unsigned total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Term& t) const;
  Polynomial negate() const;
  Polynomial monic(const MonomialOrder& ord) const;

  /// Substitute 1 for the given variable (dehomogenize); drops the slot.
  Polynomial substitute_one(size_t var) const;
  /// Insert a fresh zero-exponent slot at the given position.
  Polynomial insert_var(size_t at) const;
  /// Homogenize with respect to the slot `h` (already present, all zero).
  Polynomial homogenize(size_t h) const;
  /// Evaluate at a coordinate point e_i (all vars 0 except var = 1).
  Rat eval_coordinate_point(size_t var) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string str(const std::vector<std::string>& vars) const;

 private:
  // sorted descending by plain exponent-vector comparison; no zero coefficients
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses juxtaposition-style input such as "txy-x^2y-txz+x^2z-t^2u".
/// Variable names are matched longest-first, '*' is optional, '^' takes a
/// nonnegative integer, coefficients may be integers or a/b fractions.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

}  // namespace contractions::gb

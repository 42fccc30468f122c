#pragma once

#include <vector>

#include "contractions/groebner.hpp"

namespace contractions::gb {

/// Minimal generators of the initial monomial ideal of a Groebner basis.
std::vector<Monomial> initial_ideal(const IdealBasis& groebner_basis);

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of the quotient by a
/// monomial ideal, by the variable-splitting recursion with memoization.
std::vector<Int> hilbert_numerator(std::vector<Monomial> min_gens, size_t nvars);

/// Dense polynomial in one variable with rational coefficients (index = power).
using RatPoly = std::vector<Rat>;

Rat eval_poly(const RatPoly& p, long k);

struct HilbertData {
  long proj_dim = -1;   // dimension of the projective scheme, -1 when empty
  Int degree = 0;       // leading coefficient of the Hilbert polynomial times dim!
  RatPoly hilbert_polynomial;   // in the grading variable k
  std::vector<Int> numerator;   // reduced numerator Q with Q(1) != 0
  size_t nvars = 0;
};

/// Hilbert data of the quotient ring by a homogeneous ideal. Computes a
/// Groebner basis when the flag is not set; throws on non-homogeneous input.
HilbertData hilbert_data(const IdealBasis& basis);

std::pair<long, Int> hilbert_dim_degree(const IdealBasis& basis);

/// Exact Hilbert function of the quotient in degree k (valid for every k).
Int hilbert_function(const IdealBasis& basis, long k);

/// chi(O_S(k)) of the surface cut out by a sheaf with resolution
///   0 -> O(-s-2) -> O(-s-1)^(s+2) -> O(-s)^(s+2) -> I_S -> 0
/// on P^4, as a polynomial in k.
RatPoly resolution_chi(long s);

struct ResolutionCheck {
  long s = 0;
  long dim = 0;
  Int degree = 0;
  bool pass = false;
  std::string detail;
};

/// Verifies dim = 2 and degree = {2, 5, 9} for s = {2, 3, 4}.
ResolutionCheck resolution_hilbert_check(long s);

}  // namespace contractions::gb

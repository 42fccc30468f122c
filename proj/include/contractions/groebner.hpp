#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contractions/polynomial.hpp"

namespace contractions::gb {

struct IdealBasis {
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  bool groebner = false;

  static IdealBasis make(std::vector<std::string> vars, MonomialOrder order,
                         const std::vector<std::string>& generator_text);
  std::string str() const;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full normal form of f against the generators (top and lower terms).
Polynomial normal_form(const Polynomial& f, const IdealBasis& basis);

/// Reduced Groebner basis for the same ideal and order: deterministic normal
/// pair selection (degree of the lcm, then generator indices), both
/// Buchberger criteria, then minimalization and inter-reduction.
IdealBasis buchberger(const IdealBasis& basis, size_t max_reductions = 200000);

bool ideal_member(const Polynomial& f, const IdealBasis& groebner_basis);

/// Same ideal test via mutual membership; both sides are brought to a
/// Groebner basis first if needed.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Radical membership via the Rabinowitsch trick in one extra variable.
bool radical_member(const Polynomial& f, const IdealBasis& basis);

/// (I : var^inf) for a homogeneous ideal: reverse-lex basis elements divided
/// by their var powers, iterated to a fixed point.
IdealBasis saturate_by_variable(const IdealBasis& basis, size_t var);

/// Certifies that the support of the projective scheme is the coordinate
/// subspace {x_i = 0 : i in S}: every x_i with i in S lies in the radical and
/// every generator lies in (x_i : i in S). Returns the indices, or nothing if
/// the support is not such a subspace.
std::optional<std::vector<size_t>> linear_coordinate_support(const IdealBasis& basis);

}  // namespace contractions::gb

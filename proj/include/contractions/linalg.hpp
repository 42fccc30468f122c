#pragma once

#include <vector>

#include "contractions/rational.hpp"

namespace contractions::linalg {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

// Determinant of a square integer matrix (fraction-free Bareiss).
Int det(IntMat m);

// Rank over Q.
int rank(const IntMat& m);

// gcd of all k x k minors where k = number of rows (rows <= cols required).
// Returns 0 when every maximal minor vanishes.
Int maximal_minor_gcd(const IntMat& m);

// Basis of the rational kernel {x : m x = 0}, cleared to primitive integer
// vectors. Row convention: m has dimensions rows x cols, kernel lives in Q^cols.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

// Divide by the gcd of the entries; sign untouched. Zero vector stays zero.
std::vector<Int> primitive(std::vector<Int> v);

bool is_zero(const std::vector<Int>& v);

// a == lambda * b for some lambda > 0 (both nonzero).
bool positively_proportional(const std::vector<Int>& a, const std::vector<Int>& b);

// a == lambda * b for some lambda != 0.
bool proportional(const std::vector<Int>& a, const std::vector<Int>& b);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace contractions::linalg

#pragma once

#include "contractions/groebner.hpp"

namespace contractions::gb {

/// Ideal of lowest-degree forms at the origin of affine space, by the
/// homogenization method: homogenize, saturate by the new variable, recompute
/// a Groebner basis under a graded order that ranks the homogenizing variable
/// first, and read off the top homogenizing powers.
IdealBasis tangent_cone_origin(const IdealBasis& affine_ideal);

/// Tangent cone of a projective scheme at the coordinate point with the given
/// variable set to 1. Checks that the point lies on the scheme, dehomogenizes
/// into the chart, and reduces to the origin case. The result lives in the
/// chart variables (the chosen variable is dropped).
IdealBasis tangent_cone_at_point(const IdealBasis& basis, size_t var);

}  // namespace contractions::gb

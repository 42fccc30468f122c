#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contractions/linalg.hpp"
#include "contractions/rational.hpp"

namespace contractions::toric {

/// Primitive lattice point used as a ray generator.
struct LatticeVector {
  std::vector<Int> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<long> c) {
    for (long x : c) coords.emplace_back(x);
  }

  size_t dim() const { return coords.size(); }
  bool operator==(const LatticeVector& o) const { return coords == o.coords; }
  bool operator<(const LatticeVector& o) const { return coords < o.coords; }
  std::string str() const;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);

/// Rational point of the ambient space (used for membership sampling).
using RatPoint = std::vector<Rat>;

/// Facet inequalities and span equations cutting out a cone.
/// x in cone  <=>  eq . x == 0 for all equations and n . x >= 0 for all normals.
struct HalfspaceRep {
  std::vector<std::vector<Int>> equations;  // span of the cone
  std::vector<std::vector<Int>> normals;    // facet inequalities, primitive
};

class Cone {
 public:
  Cone(std::vector<LatticeVector> rays, size_t ambient_dim);

  /// Convenience: rays given as integer initializer lists.
  static Cone make(size_t ambient_dim, std::vector<std::vector<long>> rays);

  const std::vector<LatticeVector>& rays() const { return rays_; }
  size_t ambient_dim() const { return ambient_dim_; }
  bool is_zero_cone() const { return rays_.empty(); }
  /// Dimension of the linear span of the rays.
  int dim() const;
  /// True when construction had to rescale some input ray to primitive form.
  bool rescaled_on_construction() const { return rescaled_; }

  const HalfspaceRep& halfspaces() const;

  bool contains(const LatticeVector& v) const;
  bool contains(const RatPoint& p) const;
  bool contains_in_relint(const LatticeVector& v) const;
  bool contains_in_relint(const RatPoint& p) const;
  bool contains_cone(const Cone& other) const;

  /// No line through the origin inside the cone.
  bool is_strongly_convex() const;

  /// Interior lattice point: sum of the ray generators.
  LatticeVector generic_point() const;

  /// Equality as sets of points.
  bool same_cone(const Cone& other) const;

  /// All faces (including the cone itself and the zero cone), each as a Cone
  /// spanned by the subset of rays lying on the corresponding facet set.
  std::vector<Cone> faces() const;

  /// The smallest face containing all the given points (each must lie in the cone).
  Cone smallest_face_containing(const std::vector<LatticeVector>& pts) const;

  bool is_face_of(const Cone& bigger) const;

  std::string str() const;

 private:
  std::vector<LatticeVector> rays_;
  size_t ambient_dim_ = 0;
  bool rescaled_ = false;
  mutable std::optional<HalfspaceRep> hrep_;
};

/// Facet normals of c within its span (primitive, inequalities >= 0).
std::vector<LatticeVector> facets(const Cone& c);

/// Unimodularity test: rays linearly independent and the gcd of the maximal
/// minors of the ray matrix is 1. Non-simplicial cones return false.
/// Cones store primitive ray generators, so this decides smoothness of the
/// associated affine toric variety.
bool is_smooth_cone(const Cone& c);

/// Same test on a raw ray matrix, without primitivization: detects generator
/// lists spanning a proper sublattice (e.g. {e1, 2*e2} has index 2).
bool unimodular_rays(const linalg::IntMat& rays);

class Fan {
 public:
  Fan(std::vector<Cone> maximal_cones, size_t ambient_dim);
  static Fan make(size_t ambient_dim, std::vector<std::vector<std::vector<long>>> cones);

  const std::vector<Cone>& maximal_cones() const { return cones_; }
  size_t ambient_dim() const { return ambient_dim_; }

  bool contains_point(const RatPoint& p) const;
  bool contains_point(const LatticeVector& v) const;

  /// All faces of all maximal cones, deduplicated up to cone equality.
  std::vector<Cone> all_cones() const;

  std::string str() const;

 private:
  std::vector<Cone> cones_;
  size_t ambient_dim_;
};

/// Pairwise intersections are common faces. Malformed input yields false with
/// a diagnostic instead of throwing.
bool is_fan(const Fan& f, std::string* diagnostic = nullptr);

/// Star subdivision at a ray r lying in the support of f: every cone containing
/// r is replaced by the cones spanned by r together with its facets missing r.
Fan star_subdivision(const Fan& f, const LatticeVector& r);

struct FanMap {
  linalg::IntMat matrix;  // target_dim x source_dim
  Fan source;
  Fan target;

  LatticeVector apply(const LatticeVector& v) const;
};

/// Every source cone maps into some target cone.
bool check_fan_map(const FanMap& m);

struct FiberComponent {
  Cone cone;           // minimal source cone with relint mapping into relint(tau)
  int orbit_dim = 0;   // ambient_dim - dim(cone)
};

/// Minimal source cones whose relative interior maps into the relative interior
/// of tau, each with the dimension of its orbit closure.
std::vector<FiberComponent> fiber_components(const FanMap& m, const Cone& tau);

/// Smallest cone of the fan containing all given cones' rays, if any.
std::optional<Cone> smallest_common_cone(const Fan& f, const std::vector<Cone>& cones);

/// JSON schema: {"ambient_dim": n, "cones": [[[..ray..], ...], ...]} for fans;
/// {"matrix": [[..]], "source": <fan>, "target": <fan>} for fan maps.
Fan fan_from_json(const std::string& json_text);
FanMap fan_map_from_json(const std::string& json_text);
std::string fan_to_json(const Fan& f);

}  // namespace contractions::toric

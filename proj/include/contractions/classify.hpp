#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contractions/surfaces.hpp"

namespace contractions::classify {

/// Hilbert-scheme dimension lower bound -K_X.C + (n-3) chi(O_C).
long deformation_lower_bound(long minus_kc, long n, long chi);

enum class BoundKind { Birational, FiberType };

/// Upper bound on the ambient dimension from a curve family inside a fiber
/// component that cannot move out: birational contractions see curves of
/// degree >= 2, conic fibrations need degree >= 3 except for the incidence
/// rule at degree 2.
std::optional<long> max_ambient_dim(long hilb_dim, long lc, BoundKind kind);

enum class Prov { Derived, Source };
std::string prov_name(Prov p);

/// A family of curves inside a polarized component used as deformation input.
struct CurveFamily {
  std::string desc;
  long lc = 0;
  long hilb = 0;
  Prov hilb_prov = Prov::Derived;
  std::string cite;
};

struct ClassificationRecord {
  std::string id;
  std::string pair_text;   // "(F_2, C0+3f)"
  std::string curve_text;  // "C in |C0+2f|"
  long lc = 0;
  long hilb = 0;
  Prov lc_prov = Prov::Derived;
  Prov hilb_prov = Prov::Derived;
  std::string printed_lc;    // what the reference table prints
  std::string printed_hilb;  // may be a bound like "<= 2"
  bool parametric = false;   // rows (3a)/(3b) range over r
  std::string cite;
};

/// The eleven rows of the curve/deformation table. Parametric rows carry the
/// generic formulas; per-r values come from the row3*() evaluators.
std::vector<ClassificationRecord> table2_rows();

long table2_row3a_lc(int r, int k);   // L.C for C = C0 + f on (F_r, C0 + kf)
long table2_row3a_hilb(int r);        // dim |C0 + f| on F_r
long table2_row3b_lc(int r);          // L.C for C in |C0+2f| on (F_r, C0+(r+1)f)
long table2_row3b_hilb(int r);        // dim |C0 + 2f| on F_r

/// One bound cell: n is possible iff lower <= n <= upper.
struct BoundCell {
  bool excluded = false;
  long upper = 0;
  long lower = 3;

  bool allows(long n) const { return !excluded && lower <= n && n <= upper; }
  std::string str() const;
};

struct Table3Row {
  std::string id;
  std::string component;  // "(P2, O(1))"
  surf::SurfaceModel surface;
  surf::DivisorClass polarization;
  BoundCell birational;
  BoundCell fiber;
  std::vector<CurveFamily> curves;  // inputs the two cells were derived from
  long vertex_embdim = 0;           // r+1 for the cones, 0 otherwise
};

/// Derives the eight component rows: minimum of the curve bounds intersected
/// with the cone-vertex constraint n >= r + 1.
std::vector<Table3Row> table3_derive();

struct Table4Row {
  char id;  // 'A', 'B', 'C'
  std::string s1_and_line;
  std::string curve;
  bool depends_on_r = false;
  long d2 = 1;
  long lc(long r = 0) const;
  long hilb(long r = 0) const;
  std::string lc_formula;
};

/// Reducible-fiber deformation inputs: rows (A), (B), (C) for a second
/// component of polarization degree d2.
std::vector<Table4Row> table4_rows(long d2);

/// One side of a reducible 3-fold fiber: a component together with the class
/// of the intersection curve R and the value K.R.
struct AdjunctionSide {
  std::string desc;  // "P2 along a line", "F_1 along C0", "F_r along f"
  int r = -1;        // -1 means the row holds for every r
  long k_dot_r = 0;  // K_{F_i}.R
};

/// All unordered pairs of component types with K_1.R + K_2.R = -3.
std::vector<std::pair<AdjunctionSide, AdjunctionSide>> threefold_reducible_enumeration();

/// Brute-force instantiation used to confirm the enumeration is exhaustive.
std::vector<std::pair<std::string, std::string>> threefold_reducible_bruteforce(int r_max);

enum class IntersectionKind { Line, Point };

struct ConfigComponent {
  surf::SurfaceModel surface;
  surf::DivisorClass polarization;
};

struct ConfigIntersection {
  int i = 0, j = 0;
  IntersectionKind kind = IntersectionKind::Line;
  std::optional<surf::DivisorClass> class_on_i;
  std::optional<surf::DivisorClass> class_on_j;
};

struct FiberConfiguration {
  std::string name;  // canonical, e.g. "P2 u_f (F0)_C0 u P2"
  std::vector<ConfigComponent> components;
  std::vector<ConfigIntersection> intersections;

  bool reducible() const { return components.size() > 1; }
};

/// Isolated two-dimensional fibers of a good contraction of a smooth 4-fold.
std::vector<FiberConfiguration> fourfold_fiber_lists(BoundKind kind);

/// Isolated two-dimensional fibers in dimension 3 (fibers are divisors; the
/// adjunction class O_F(F) separates the birational and conic cases).
std::vector<FiberConfiguration> threefold_fiber_lists(BoundKind kind);

/// How a divisorial fiber can sit in a smooth 3-fold.
enum class DivisorVerdict { BirationalOnly, FiberTypeOnly, Impossible };

/// Evaluates O_F(F) = K + L (+ the intersection curves for reducible fibers)
/// against the extremal curve classes of each component.
DivisorVerdict threefold_divisor_verdict(const std::vector<ConfigComponent>& comps,
                                         const std::vector<ConfigIntersection>& inters);

std::vector<std::string> config_names(const std::vector<FiberConfiguration>& v);

/// The component bound table as printed in the source classification.
struct Table3Printed {
  std::string id;
  std::string birational;
  std::string fiber;
};
const std::vector<Table3Printed>& table3_printed();

/// Does a derived cell reproduce a printed entry ("--------", "n = B", "n <= B")?
bool cell_matches_printed(const BoundCell& cell, const std::string& printed);

/// The fiber lists as printed, for cross-checking the derivation.
std::vector<std::string> expected_fiber_list(int dim, BoundKind kind);

}  // namespace contractions::classify

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "contractions/rational.hpp"

namespace contractions::surf {

enum class Kind { ProjPlane, Hirzebruch, ConeS };

/// Polarized model surfaces: P^2, the Hirzebruch surfaces F_r, and the cones
/// S_r (handled through the resolution F_r; O(1) pulls back to C0 + r f).
struct SurfaceModel {
  Kind kind = Kind::ProjPlane;
  int r = 0;

  static SurfaceModel P2() { return {Kind::ProjPlane, 0}; }
  static SurfaceModel F(int r) {
    if (r < 0) throw std::invalid_argument("Hirzebruch surface needs r >= 0");
    return {Kind::Hirzebruch, r};
  }
  static SurfaceModel S(int r) {
    if (r < 2) throw std::invalid_argument("cone S_r needs r >= 2");
    return {Kind::ConeS, r};
  }

  int picard_rank() const { return kind == Kind::Hirzebruch ? 2 : 1; }
  bool operator==(const SurfaceModel& o) const { return kind == o.kind && r == o.r; }
  std::string str() const;
};

/// Integer combination in the Picard basis: {h} on P^2, {C0, f} on F_r,
/// {O(1)} on S_r.
struct DivisorClass {
  SurfaceModel surface;
  std::vector<long> coeff;

  std::string str() const;
  bool operator==(const DivisorClass& o) const {
    return surface == o.surface && coeff == o.coeff;
  }
};

DivisorClass O_P2(long degree);
DivisorClass on_F(int r, long a, long b);  // a C0 + b f
DivisorClass O_S(int r, long m);           // m O(1) on the cone S_r

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(long n, const DivisorClass& a);

long intersect(const DivisorClass& d1, const DivisorClass& d2);

DivisorClass canonical_class(const SurfaceModel& s);

/// Dimension of the space of global sections. On Hirzebruch surfaces the fixed
/// component C0 is stripped while D.C0 < 0, then Riemann-Roch applies; the cone
/// is computed on its resolution. Throws when the class is not effective.
long h0(const SurfaceModel& s, const DivisorClass& d);

bool is_ample(const SurfaceModel& s, const DivisorClass& d);
bool is_effective(const SurfaceModel& s, const DivisorClass& d);

/// dim(S) + L^2 - h^0(L) for ample L.
long delta_genus(const SurfaceModel& s, const DivisorClass& l);

/// Arithmetic genus of a section of |L|: 2g - 2 = (K + L).L.
long sectional_genus(const SurfaceModel& s, const DivisorClass& l);

/// Parses "P2 O(2)", "F(2) C0+3f", "S(3) O(1)".
std::pair<SurfaceModel, DivisorClass> parse_polarized_surface(const std::string& text);

}  // namespace contractions::surf

#include "contractions/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace contractions::classify {

using surf::DivisorClass;
using surf::Kind;
using surf::SurfaceModel;

long deformation_lower_bound(long minus_kc, long n, long chi) {
  return minus_kc + (n - 3) * chi;
}

std::optional<long> max_ambient_dim(long hilb_dim, long lc, BoundKind kind) {
  if (lc < 1) throw std::invalid_argument("max_ambient_dim: L.C >= 1 required");
  if (kind == BoundKind::Birational) {
    if (lc >= 2) return hilb_dim + 3 - lc;
    return std::nullopt;
  }
  if (lc >= 3) return hilb_dim + 3 - lc;
  if (lc == 2) return hilb_dim + 2;
  return std::nullopt;
}

std::string prov_name(Prov p) { return p == Prov::Derived ? "derived" : "source"; }

namespace {

long dim_linear_system(const SurfaceModel& s, const DivisorClass& d) {
  return surf::h0(s, d) - 1;
}

}  // namespace

long table2_row3a_lc(int r, int k) {
  return surf::intersect(surf::on_F(r, 1, k), surf::on_F(r, 1, 1));
}
long table2_row3a_hilb(int r) { return dim_linear_system(SurfaceModel::F(r), surf::on_F(r, 1, 1)); }
long table2_row3b_lc(int r) {
  return surf::intersect(surf::on_F(r, 1, r + 1), surf::on_F(r, 1, 2));
}
long table2_row3b_hilb(int r) { return dim_linear_system(SurfaceModel::F(r), surf::on_F(r, 1, 2)); }

std::vector<ClassificationRecord> table2_rows() {
  std::vector<ClassificationRecord> rows;
  auto full_system = [&](std::string id, const SurfaceModel& s, const DivisorClass& L,
                         const DivisorClass& C, std::string pair_text, std::string curve_text,
                         std::string cite) {
    ClassificationRecord rec;
    rec.id = std::move(id);
    rec.pair_text = std::move(pair_text);
    rec.curve_text = std::move(curve_text);
    rec.lc = surf::intersect(L, C);
    rec.hilb = dim_linear_system(s, C);
    rec.printed_lc = std::to_string(rec.lc);
    rec.printed_hilb = std::to_string(rec.hilb);
    rec.cite = std::move(cite);
    return rec;
  };

  // (1) lines in the plane of a degree-2 polarization: the dual plane
  {
    ClassificationRecord r;
    r.id = "1";
    r.pair_text = "(P2, O(2))";
    r.curve_text = "line";
    r.lc = surf::intersect(surf::O_P2(2), surf::O_P2(1));
    r.hilb = dim_linear_system(SurfaceModel::P2(), surf::O_P2(1));
    r.printed_lc = "2";
    r.printed_hilb = "2";
    r.cite = "Table II (1)";
    rows.push_back(r);
  }
  // (2) pairs of rulings through the vertex of S_3: 1 + 1
  {
    ClassificationRecord r;
    r.id = "2";
    r.pair_text = "(S3, O(1))";
    r.curve_text = "two lines";
    r.lc = 2 * surf::intersect(surf::on_F(3, 1, 3), surf::on_F(3, 0, 1));  // two ruling lines
    r.hilb = 2 * dim_linear_system(SurfaceModel::F(3), surf::on_F(3, 0, 1));
    r.printed_lc = "2";
    r.printed_hilb = "2";
    r.cite = "Table II (2)";
    rows.push_back(r);
  }
  // (3a)/(3b): parametric in r
  {
    ClassificationRecord r;
    r.id = "3a";
    r.pair_text = "(F_r, C0+kf), r>=1, k>r";
    r.curve_text = "C0+f";
    r.lc = 0;
    r.hilb = 0;
    r.parametric = true;
    r.printed_lc = "k-r+1";
    r.printed_hilb = "<= 2";
    r.cite = "Table II (3a)";
    rows.push_back(r);
    ClassificationRecord r2;
    r2.id = "3b";
    r2.pair_text = "(F_r, C0+(r+1)f), r>=3";
    r2.curve_text = "C0+2f";
    r2.lc = 3;
    r2.hilb = 2;
    r2.parametric = true;
    r2.printed_lc = "3";
    r2.printed_hilb = "2";
    r2.cite = "Table II (3b)";
    rows.push_back(r2);
  }
  rows.push_back(full_system("4", SurfaceModel::F(2), surf::on_F(2, 1, 3), surf::on_F(2, 1, 2),
                             "(F2, C0+3f)", "C in |C0+2f|", "Table II (4)"));
  rows.push_back(full_system("5a", SurfaceModel::F(1), surf::on_F(1, 1, 2), surf::on_F(1, 1, 1),
                             "(F1, C0+2f)", "C in |C0+f|", "Table II (5a)"));
  rows.push_back(full_system("5b", SurfaceModel::F(1), surf::on_F(1, 1, 2), surf::on_F(1, 1, 2),
                             "(F1, C0+2f)", "C in |C0+2f|", "Table II (5b)"));
  // (6a) the section C0 on F_0 moves in the pencil |C0|
  rows.push_back(full_system("6a", SurfaceModel::F(0), surf::on_F(0, 1, 2), surf::on_F(0, 1, 0),
                             "(F0, C0+2f)", "C0", "Table II (6a)"));
  rows.push_back(full_system("6b", SurfaceModel::F(0), surf::on_F(0, 1, 2), surf::on_F(0, 1, 1),
                             "(F0, C0+2f)", "C in |C0+f|", "Table II (6b)"));
  rows.push_back(full_system("7a", SurfaceModel::F(0), surf::on_F(0, 1, 1), surf::on_F(0, 1, 1),
                             "(F0, C0+f)", "C in |C0+f|", "Table II (7a)"));
  rows.push_back(full_system("7b", SurfaceModel::F(0), surf::on_F(0, 1, 1), surf::on_F(0, 1, 2),
                             "(F0, C0+f)", "C in |C0+2f|", "Table II (7b)"));
  return rows;
}

namespace {

BoundCell derive_cell(const std::vector<CurveFamily>& curves, long lower, BoundKind kind) {
  BoundCell cell;
  cell.lower = lower;
  long best = std::numeric_limits<long>::max();
  for (const auto& c : curves) {
    auto b = max_ambient_dim(c.hilb, c.lc, kind);
    if (b) best = std::min(best, *b);
  }
  if (best == std::numeric_limits<long>::max()) {
    cell.excluded = false;  // no constraint
    cell.upper = std::numeric_limits<long>::max();
    return cell;
  }
  cell.upper = best;
  cell.excluded = best < lower;
  return cell;
}

}  // namespace

std::string BoundCell::str() const {
  if (excluded) return "--------";
  std::ostringstream os;
  if (upper == std::numeric_limits<long>::max()) return "no constraint";
  if (lower == upper)
    os << "n = " << upper;
  else
    os << "n <= " << upper;
  return os.str();
}

std::vector<Table3Row> table3_derive() {
  std::vector<Table3Row> rows;
  auto mk = [&](std::string id, std::string comp, SurfaceModel s, DivisorClass L,
                std::vector<CurveFamily> curves, long vertex) {
    Table3Row r;
    r.id = std::move(id);
    r.component = std::move(comp);
    r.surface = s;
    r.polarization = std::move(L);
    r.curves = std::move(curves);
    r.vertex_embdim = vertex;
    long lower = std::max<long>(3, vertex);
    r.birational = derive_cell(r.curves, lower, BoundKind::Birational);
    r.fiber = derive_cell(r.curves, lower, BoundKind::FiberType);
    rows.push_back(std::move(r));
  };

  const SurfaceModel p2 = SurfaceModel::P2();

  // (0): conics in the plane
  mk("0", "(P2, O(1))", p2, surf::O_P2(1),
     {{"conic", surf::intersect(surf::O_P2(1), surf::O_P2(2)),
       dim_linear_system(p2, surf::O_P2(2)), Prov::Derived, "proof of (4.5)"}},
     0);
  // (1): lines against O(2)
  mk("1", "(P2, O(2))", p2, surf::O_P2(2),
     {{"line", surf::intersect(surf::O_P2(2), surf::O_P2(1)),
       dim_linear_system(p2, surf::O_P2(1)), Prov::Derived, "Table II (1)"}},
     0);
  // (2): S_3 with a pair of rulings through the vertex; vertex needs n >= 4
  mk("2", "(S3, O(1))", SurfaceModel::S(3), surf::O_S(3, 1),
     {{"two lines", 2, 2 * dim_linear_system(SurfaceModel::F(3), surf::on_F(3, 0, 1)),
       Prov::Derived, "Table II (2)"}},
     4);
  // (3): S_2 with conics and with conic-plus-ruling; vertex needs n >= 3
  mk("3", "(S2, O(1))", SurfaceModel::S(2), surf::O_S(2, 1),
     {{"conic", surf::intersect(surf::O_S(2, 1), surf::O_S(2, 1)),
       dim_linear_system(SurfaceModel::S(2), surf::O_S(2, 1)), Prov::Derived, "proof of (4.5)"},
      {"conic + line", surf::intersect(surf::O_S(2, 1), surf::O_S(2, 1)) + 1,
       dim_linear_system(SurfaceModel::S(2), surf::O_S(2, 1)) +
           dim_linear_system(SurfaceModel::F(2), surf::on_F(2, 0, 1)),
       Prov::Derived, "proof of (4.7)"}},
     3);
  // (4): F_2 with the full system |C0+2f|; the curve C0+f contains the
  // section C0, which may lie in a neighbouring component, so it gives no
  // bound for this row
  mk("4", "(F2, C0+3f)", SurfaceModel::F(2), surf::on_F(2, 1, 3),
     {{"C in |C0+2f|", surf::intersect(surf::on_F(2, 1, 3), surf::on_F(2, 1, 2)),
       dim_linear_system(SurfaceModel::F(2), surf::on_F(2, 1, 2)), Prov::Derived,
       "Table II (4)"}},
     0);
  // (5): F_1 rows (5a)/(5b)
  mk("5", "(F1, C0+2f)", SurfaceModel::F(1), surf::on_F(1, 1, 2),
     {{"C in |C0+f|", surf::intersect(surf::on_F(1, 1, 2), surf::on_F(1, 1, 1)),
       dim_linear_system(SurfaceModel::F(1), surf::on_F(1, 1, 1)), Prov::Derived,
       "Table II (5a)"},
      {"C in |C0+2f|", surf::intersect(surf::on_F(1, 1, 2), surf::on_F(1, 1, 2)),
       dim_linear_system(SurfaceModel::F(1), surf::on_F(1, 1, 2)), Prov::Derived,
       "Table II (5b)"}},
     0);
  // (6): F_0 with C0+2f
  mk("6", "(F0, C0+2f)", SurfaceModel::F(0), surf::on_F(0, 1, 2),
     {{"C0", surf::intersect(surf::on_F(0, 1, 2), surf::on_F(0, 1, 0)),
       dim_linear_system(SurfaceModel::F(0), surf::on_F(0, 1, 0)), Prov::Derived,
       "Table II (6a)"},
      {"C in |C0+f|", surf::intersect(surf::on_F(0, 1, 2), surf::on_F(0, 1, 1)),
       dim_linear_system(SurfaceModel::F(0), surf::on_F(0, 1, 1)), Prov::Derived,
       "Table II (6b)"}},
     0);
  // (7): F_0 with C0+f
  mk("7", "(F0, C0+f)", SurfaceModel::F(0), surf::on_F(0, 1, 1),
     {{"C in |C0+f|", surf::intersect(surf::on_F(0, 1, 1), surf::on_F(0, 1, 1)),
       dim_linear_system(SurfaceModel::F(0), surf::on_F(0, 1, 1)), Prov::Derived,
       "Table II (7a)"},
      {"C in |C0+2f|", surf::intersect(surf::on_F(0, 1, 1), surf::on_F(0, 1, 2)),
       dim_linear_system(SurfaceModel::F(0), surf::on_F(0, 1, 2)), Prov::Derived,
       "Table II (7b)"}},
     0);
  return rows;
}

long Table4Row::lc(long r) const {
  switch (id) {
    case 'A':
    case 'B':
      return 1 + d2;
    case 'C':
      return r + 1 + d2;
  }
  throw std::logic_error("unknown table IV row");
}

long Table4Row::hilb(long r) const { return lc(r); }

std::vector<Table4Row> table4_rows(long d2) {
  if (d2 < 1) throw std::invalid_argument("table4_rows: d2 >= 1 required");
  std::vector<Table4Row> rows;
  rows.push_back({'A', "S2, l = line", "line", false, d2, "1+d2"});
  rows.push_back({'B', "F_r (r>=0), l = C0", "f", false, d2, "1+d2"});
  rows.push_back({'C', "F_r (r>=0), l = f", "C1 in |rf+C0|", true, d2, "r+1+d2"});
  return rows;
}

namespace {

long k_dot_line(const std::string& type, int r) {
  if (type == "P2/line") return -3;
  if (type == "Fr/C0") return r - 2;
  if (type == "Fr/f") return -2;
  throw std::logic_error("unknown component/curve type");
}

}  // namespace

std::vector<std::pair<AdjunctionSide, AdjunctionSide>> threefold_reducible_enumeration() {
  // component/curve types with K.R: P2 along a line (-3); F_r along C0 (r-2),
  // r >= 1 since both rulings of F_0 are fibers; F_r along f (-2).
  std::vector<std::pair<AdjunctionSide, AdjunctionSide>> out;
  // (P2, F_r along C0): -3 + (r-2) = -3 forces r = 2
  out.push_back({{"P2 along a line", -1, -3}, {"F2 along C0", 2, 0}});
  // (F_r along C0, F_s along f): (r-2) + (-2) = -3 forces r = 1, s arbitrary
  out.push_back({{"F1 along C0", 1, -1}, {"F_r along f", -1, -2}});
  return out;
}

std::vector<std::pair<std::string, std::string>> threefold_reducible_bruteforce(int r_max) {
  struct T {
    std::string name;
    long k;
  };
  std::vector<T> types;
  types.push_back({"P2 along a line", k_dot_line("P2/line", 0)});
  for (int r = 1; r <= r_max; ++r)
    types.push_back({"F" + std::to_string(r) + " along C0", k_dot_line("Fr/C0", r)});
  for (int r = 0; r <= r_max; ++r)
    types.push_back({"F" + std::to_string(r) + " along f", k_dot_line("Fr/f", r)});
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < types.size(); ++i)
    for (size_t j = i; j < types.size(); ++j)
      if (types[i].k + types[j].k == -3) out.push_back({types[i].name, types[j].name});
  return out;
}

namespace {

struct ComponentPool {
  std::string id;
  std::string name;
  SurfaceModel s;
  DivisorClass L;
  std::vector<DivisorClass> line_classes;  // classes of L-degree 1
};

std::vector<ComponentPool> component_pool() {
  std::vector<ComponentPool> pool;
  pool.push_back({"0", "P2", SurfaceModel::P2(), surf::O_P2(1), {surf::O_P2(1)}});
  pool.push_back({"1", "P2(2)", SurfaceModel::P2(), surf::O_P2(2), {}});  // no degree-1 class
  pool.push_back({"2", "S3", SurfaceModel::S(3), surf::O_S(3, 1), {surf::on_F(3, 0, 1)}});
  pool.push_back({"3", "S2", SurfaceModel::S(2), surf::O_S(2, 1), {surf::on_F(2, 0, 1)}});
  pool.push_back({"4", "F2", SurfaceModel::F(2), surf::on_F(2, 1, 3),
                  {surf::on_F(2, 1, 0), surf::on_F(2, 0, 1)}});
  // the meeting line of an F_1 component is always the section C0
  pool.push_back({"5", "F1", SurfaceModel::F(1), surf::on_F(1, 1, 2), {surf::on_F(1, 1, 0)}});
  pool.push_back({"6", "F0(2)", SurfaceModel::F(0), surf::on_F(0, 1, 2), {surf::on_F(0, 0, 1)}});
  pool.push_back({"7", "F0", SurfaceModel::F(0), surf::on_F(0, 1, 1),
                  {surf::on_F(0, 1, 0), surf::on_F(0, 0, 1)}});
  return pool;
}

std::string polar_name(const ComponentPool& c) {
  return "(" + c.s.str() + ", " + c.L.str() + ")";
}

const Table3Row& table3_row(const std::vector<Table3Row>& rows, const std::string& id) {
  for (const auto& r : rows)
    if (r.id == id) return r;
  throw std::logic_error("missing component row " + id);
}

bool is_p2_o1(const ComponentPool& c) { return c.id == "0"; }

FiberConfiguration irreducible_config(const ComponentPool& c) {
  FiberConfiguration f;
  f.name = polar_name(c);
  f.components.push_back({c.s, c.L});
  return f;
}

std::string line_subscript(const ComponentPool& c, const DivisorClass& cls) {
  if (c.s.kind == Kind::Hirzebruch && c.s.r > 0) {
    if (cls == surf::on_F(c.s.r, 1, 0)) return "C0";
    if (cls == surf::on_F(c.s.r, 0, 1)) return "f";
  }
  return "";
}

}  // namespace

std::vector<FiberConfiguration> fourfold_fiber_lists(BoundKind kind) {
  auto rows = table3_derive();
  auto pool = component_pool();
  const long n = 4;

  std::vector<const ComponentPool*> eligible;
  for (const auto& c : pool) {
    const auto& row = table3_row(rows, c.id);
    const BoundCell& cell = kind == BoundKind::Birational ? row.birational : row.fiber;
    if (cell.allows(n)) eligible.push_back(&c);
  }

  std::vector<FiberConfiguration> out;
  for (const auto* c : eligible) out.push_back(irreducible_config(*c));

  // pairs along a line: at least one plane, both planes when birational;
  // S_3 never sits in a reducible fiber and a plane with O(2) has no line
  auto pair_ok = [&](const ComponentPool& a, const ComponentPool& b) {
    if (a.id == "2" || b.id == "2") return false;
    if (a.line_classes.empty() || b.line_classes.empty()) return false;
    if (kind == BoundKind::Birational) return is_p2_o1(a) && is_p2_o1(b);
    return is_p2_o1(a) || is_p2_o1(b);
  };
  for (size_t i = 0; i < eligible.size(); ++i)
    for (size_t j = i; j < eligible.size(); ++j) {
      const auto& a = *eligible[i];
      const auto& b = *eligible[j];
      if (!pair_ok(a, b)) continue;
      // canonical order: the plane first
      const auto& first = is_p2_o1(a) ? a : b;
      const auto& second = is_p2_o1(a) ? b : a;
      FiberConfiguration f;
      DivisorClass ca = first.line_classes[0];
      // meeting line on the non-plane side: the distinguished class
      DivisorClass cb = second.line_classes[0];
      std::string sub = line_subscript(second, cb);
      f.name = first.s.str() + " u" + (sub.empty() ? "" : "_" + sub) + " " + second.s.str();
      f.components.push_back({first.s, first.L});
      f.components.push_back({second.s, second.L});
      f.intersections.push_back({0, 1, IntersectionKind::Line, ca, cb});
      out.push_back(std::move(f));
    }

  // the exceptional pair of planes meeting at a single point (conic fibrations)
  if (kind == BoundKind::FiberType) {
    FiberConfiguration f;
    f.name = "P2 . P2";
    f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
    f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
    f.intersections.push_back({0, 1, IntersectionKind::Point, std::nullopt, std::nullopt});
    out.push_back(std::move(f));
  }

  // chains of three components (conic fibrations only: the two outer
  // components share the meeting point of the middle lines, and a pair through
  // an isolated point forces a fiber-type contraction with two planes)
  if (kind == BoundKind::FiberType) {
    for (const auto* mid : eligible) {
      if (mid->id == "0") {
        // two distinct lines in the middle plane always intersect
        FiberConfiguration f;
        f.name = "P2 u P2 u P2";
        for (int t = 0; t < 3; ++t) f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
        f.intersections.push_back({0, 1, IntersectionKind::Line, surf::O_P2(1), surf::O_P2(1)});
        f.intersections.push_back({1, 2, IntersectionKind::Line, surf::O_P2(1), surf::O_P2(1)});
        f.intersections.push_back({2, 0, IntersectionKind::Point, std::nullopt, std::nullopt});
        out.push_back(std::move(f));
      }
      if (mid->id == "7") {
        // middle quadric: rulings from the two different pencils intersect;
        // two rulings from one pencil are disjoint and the three-line chain
        // C = l + m + l' then bounds n <= dim Hilb + 3 - L.C = 3 < 4
        long chain_hilb = 1 + 1 + 1;
        long chain_lc = 3;
        auto bound = max_ambient_dim(chain_hilb, chain_lc, BoundKind::FiberType);
        if (bound && *bound < n) {
          // only the mixed-ruling middle survives
          FiberConfiguration f;
          f.name = "P2 u_f (F0)_C0 u P2";
          f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
          f.components.push_back({SurfaceModel::F(0), surf::on_F(0, 1, 1)});
          f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
          f.intersections.push_back(
              {0, 1, IntersectionKind::Line, surf::O_P2(1), surf::on_F(0, 0, 1)});
          f.intersections.push_back(
              {1, 2, IntersectionKind::Line, surf::on_F(0, 1, 0), surf::O_P2(1)});
          f.intersections.push_back({2, 0, IntersectionKind::Point, std::nullopt, std::nullopt});
          out.push_back(std::move(f));
        }
      }
      // F_1 meets only along its unique section C0, so it cannot be a middle
      // component; S_2 meets at most one other component; S_3 never appears
    }
  }
  return out;
}

namespace {

struct ExtremalClass {
  DivisorClass cls;
  bool moving;  // the class sweeps the component
};

std::vector<ExtremalClass> extremal_classes(const SurfaceModel& s) {
  switch (s.kind) {
    case Kind::ProjPlane:
      return {{surf::O_P2(1), true}};
    case Kind::Hirzebruch:
      return {{surf::on_F(s.r, 1, 0), s.r == 0}, {surf::on_F(s.r, 0, 1), true}};
    case Kind::ConeS:
      // work on the resolution; the only curve class downstairs is the ruling
      return {{surf::on_F(s.r, 0, 1), true}};
  }
  return {};
}

// O_F(F) restricted to one component: K + L plus the intersection curves
DivisorClass adjunction_class(const ConfigComponent& comp,
                              const std::vector<ConfigIntersection>& inters, int index) {
  SurfaceModel model = comp.surface;
  DivisorClass L = comp.polarization;
  if (model.kind == Kind::ConeS) {
    // resolve: O(1) pulls back to C0 + r f
    L = surf::on_F(model.r, L.coeff[0], L.coeff[0] * model.r);
    model = SurfaceModel::F(model.r);
  }
  DivisorClass d = surf::canonical_class(model) + L;
  for (const auto& in : inters) {
    if (in.kind != IntersectionKind::Line) continue;
    if (in.i == index && in.class_on_i) d = d + *in.class_on_i;
    if (in.j == index && in.class_on_j) d = d + *in.class_on_j;
  }
  return d;
}

}  // namespace

DivisorVerdict threefold_divisor_verdict(const std::vector<ConfigComponent>& comps,
                                         const std::vector<ConfigIntersection>& inters) {
  bool all_swept = true;
  for (int idx = 0; idx < static_cast<int>(comps.size()); ++idx) {
    DivisorClass d = adjunction_class(comps[static_cast<size_t>(idx)], inters, idx);
    bool swept_by_zero = false;
    for (const auto& ec : extremal_classes(comps[static_cast<size_t>(idx)].surface)) {
      long v = surf::intersect(d, ec.cls);
      if (v > 0) return DivisorVerdict::Impossible;  // F.C > 0 for a contracted curve
      if (v == 0 && ec.moving) swept_by_zero = true;
    }
    all_swept = all_swept && swept_by_zero;
  }
  return all_swept ? DivisorVerdict::FiberTypeOnly : DivisorVerdict::BirationalOnly;
}

std::vector<FiberConfiguration> threefold_fiber_lists(BoundKind kind) {
  auto rows = table3_derive();
  auto pool = component_pool();
  const long n = 3;

  std::vector<FiberConfiguration> out;
  for (const auto& c : pool) {
    const auto& row = table3_row(rows, c.id);
    const BoundCell& cell = kind == BoundKind::Birational ? row.birational : row.fiber;
    if (!cell.allows(n)) continue;
    FiberConfiguration f = irreducible_config(c);
    DivisorVerdict v = threefold_divisor_verdict(f.components, f.intersections);
    if (v == DivisorVerdict::Impossible) continue;
    if (kind == BoundKind::Birational && v != DivisorVerdict::BirationalOnly) continue;
    if (kind == BoundKind::FiberType && v != DivisorVerdict::FiberTypeOnly) continue;
    out.push_back(std::move(f));
  }

  // reducible fibers from the adjunction enumeration K_1.R + K_2.R = -3
  // pair (i): P2 u_C0 F2 with L_{F2} = C0 + 3f
  {
    FiberConfiguration f;
    f.name = "P2 u_C0 F2";
    f.components.push_back({SurfaceModel::P2(), surf::O_P2(1)});
    f.components.push_back({SurfaceModel::F(2), surf::on_F(2, 1, 3)});
    f.intersections.push_back({0, 1, IntersectionKind::Line, surf::O_P2(1), surf::on_F(2, 1, 0)});
    DivisorVerdict v = threefold_divisor_verdict(f.components, f.intersections);
    bool want = kind == BoundKind::Birational ? v == DivisorVerdict::BirationalOnly
                                              : v == DivisorVerdict::FiberTypeOnly;
    if (want) out.push_back(std::move(f));
  }
  // pair (ii): F1 u F_r where R = C0 on the F1 and a ruling on the F_r;
  // moving the degree-3 chain f + (C0+f) kills every r except 0
  for (int r = 0; r <= 10; ++r) {
    long chain_hilb = 1 + (surf::h0(SurfaceModel::F(r), surf::on_F(r, 1, 1)) - 1 - 1);
    long chain_lc = 3;
    auto bound = max_ambient_dim(chain_hilb, chain_lc, BoundKind::FiberType);
    if (bound && *bound < n) continue;
    FiberConfiguration f;
    f.name = r == 0 ? "F0 u_C0 F1" : "F1 u_C0 F" + std::to_string(r);
    // L_{F1} = C0+2f, L_{F_r} = C0+(r+1)f; the meeting curve is C0 on the F1
    // side and a ruling on the F_r side
    f.components.push_back({SurfaceModel::F(0), surf::on_F(0, 1, 1)});
    f.components.push_back({SurfaceModel::F(1), surf::on_F(1, 1, 2)});
    if (r != 0) {
      f.components[0] = {SurfaceModel::F(r), surf::on_F(r, 1, r + 1)};
    }
    f.intersections.push_back(
        {0, 1, IntersectionKind::Line, surf::on_F(f.components[0].surface.r, 0, 1),
         surf::on_F(1, 1, 0)});
    DivisorVerdict v = threefold_divisor_verdict(f.components, f.intersections);
    bool want = kind == BoundKind::Birational ? v == DivisorVerdict::BirationalOnly
                                              : v == DivisorVerdict::FiberTypeOnly;
    if (want) out.push_back(std::move(f));
  }
  // three components would need two disjoint F_1 wings over one quadric:
  // the degree-3 chain C0 + f + f moves in a 1-dimensional family only,
  // bounding n by 1
  return out;
}

std::vector<std::string> config_names(const std::vector<FiberConfiguration>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.name);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Table3Printed>& table3_printed() {
  static const std::vector<Table3Printed> rows = {
      {"0", "n <= 6", "n <= 7"}, {"1", "n <= 3", "n <= 4"}, {"2", "--------", "n = 4"},
      {"3", "n <= 4", "n <= 4"}, {"4", "n = 3", "n = 3"},   {"5", "n = 3", "n <= 4"},
      {"6", "--------", "n = 3"}, {"7", "n <= 4", "n <= 5"},
  };
  return rows;
}

bool cell_matches_printed(const BoundCell& cell, const std::string& printed) {
  if (printed == "--------") return cell.excluded;
  if (cell.excluded) return false;
  // "n = B" and "n <= B" both pin the upper bound; the lower bound is the
  // blanket n >= 3 (or the vertex constraint), so only B is compared
  auto pos = printed.find_last_of(' ');
  if (pos == std::string::npos) return false;
  long b = std::stol(printed.substr(pos + 1));
  if (cell.upper != b) return false;
  if (printed.find('=') != std::string::npos && printed.find("<=") == std::string::npos)
    return cell.lower == b;  // an exact cell
  return true;
}

std::vector<std::string> expected_fiber_list(int dim, BoundKind kind) {
  if (dim == 4 && kind == BoundKind::Birational)
    return {"(F0, C0+f)", "(P2, O(1))", "(S2, O(1))", "P2 u P2"};
  if (dim == 4 && kind == BoundKind::FiberType)
    return {"(F0, C0+f)", "(F1, C0+2f)", "(P2, O(1))", "(P2, O(2))", "(S2, O(1))",
            "(S3, O(1))", "P2 . P2",     "P2 u F0",    "P2 u P2",    "P2 u P2 u P2",
            "P2 u S2",    "P2 u_C0 F1",  "P2 u_f (F0)_C0 u P2"};
  if (dim == 3 && kind == BoundKind::Birational)
    return {"(F0, C0+f)", "(F1, C0+2f)", "(P2, O(1))", "(P2, O(2))", "(S2, O(1))", "P2 u_C0 F2"};
  if (dim == 3 && kind == BoundKind::FiberType) return {"(F0, C0+2f)", "F0 u_C0 F1"};
  throw std::invalid_argument("expected_fiber_list: dim must be 3 or 4");
}

}  // namespace contractions::classify

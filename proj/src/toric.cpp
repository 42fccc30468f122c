#include "contractions/toric.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace contractions::toric {

using linalg::IntMat;

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice vector dim mismatch");
  std::vector<Int> c(a.dim());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a) {
  std::vector<Int> c(a.dim());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return LatticeVector(std::move(c));
}

Cone::Cone(std::vector<LatticeVector> rays, size_t ambient_dim)
    : ambient_dim_(ambient_dim) {
  for (auto& r : rays) {
    if (r.dim() != ambient_dim_)
      throw std::invalid_argument("ray dimension does not match ambient dimension");
    if (linalg::is_zero(r.coords))
      throw std::invalid_argument("zero vector is not a valid ray");
    auto prim = linalg::primitive(r.coords);
    if (prim != r.coords) rescaled_ = true;
    r.coords = std::move(prim);
  }
  // equal rays collapse; properly proportional pairs are rejected
  std::vector<LatticeVector> kept;
  for (auto& r : rays) {
    bool dup = false;
    for (const auto& k : kept) {
      if (k == r) {
        dup = true;
        break;
      }
      if (linalg::proportional(k.coords, r.coords))
        throw std::invalid_argument("proportional rays in one cone: " + k.str() +
                                    " and " + r.str());
    }
    if (!dup) kept.push_back(std::move(r));
  }
  rays_ = std::move(kept);
}

Cone Cone::make(size_t ambient_dim, std::vector<std::vector<long>> rays) {
  std::vector<LatticeVector> rs;
  for (auto& r : rays) {
    std::vector<Int> c(r.begin(), r.end());
    rs.emplace_back(std::move(c));
  }
  return Cone(std::move(rs), ambient_dim);
}

int Cone::dim() const {
  IntMat m;
  for (const auto& r : rays_) m.push_back(r.coords);
  return linalg::rank(m);
}

const HalfspaceRep& Cone::halfspaces() const {
  if (hrep_) return *hrep_;
  HalfspaceRep h;

  // span equations: kernel of the transposed ray matrix
  IntMat rays_as_rows;
  for (const auto& r : rays_) rays_as_rows.push_back(r.coords);
  if (rays_as_rows.empty())
    rays_as_rows.push_back(std::vector<Int>(ambient_dim_, 0));
  h.equations = linalg::kernel_basis(rays_as_rows);

  const int d = dim();
  // candidate facet hyperplanes are spanned by (d-1)-subsets of rays
  std::vector<std::vector<size_t>> subsets;
  std::vector<size_t> cur;
  const size_t n = rays_.size();
  const size_t want = d >= 1 ? static_cast<size_t>(d - 1) : 0;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (cur.size() == want) {
      subsets.push_back(cur);
      return;
    }
    for (size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  if (d >= 1) rec(0);

  std::vector<std::vector<Int>> found;
  for (const auto& sub : subsets) {
    // normals orthogonal to the subset and to the span complement
    IntMat sys;
    for (size_t i : sub) sys.push_back(rays_[i].coords);
    for (const auto& eq : h.equations) sys.push_back(eq);
    auto ker = linalg::kernel_basis(sys);
    if (ker.size() != 1) continue;  // subset does not span a hyperplane in the span
    auto n0 = ker[0];
    bool nonneg = true, nonpos = true;
    for (const auto& r : rays_) {
      Int s = linalg::dot(n0, r.coords);
      if (s > 0) nonpos = false;
      if (s < 0) nonneg = false;
    }
    if (!nonneg && !nonpos) continue;
    if (nonpos)
      for (auto& x : n0) x = -x;
    bool dup = false;
    for (const auto& f : found)
      if (linalg::positively_proportional(f, n0)) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(std::move(n0));
  }
  std::sort(found.begin(), found.end());
  h.normals = std::move(found);
  std::sort(h.equations.begin(), h.equations.end());
  hrep_ = std::move(h);
  return *hrep_;
}

namespace {

template <typename Num>
bool satisfies(const HalfspaceRep& h, const std::vector<Num>& p, bool strict) {
  for (const auto& eq : h.equations) {
    Num s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += Num(eq[i]) * p[i];
    if (s != 0) return false;
  }
  for (const auto& n : h.normals) {
    Num s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += Num(n[i]) * p[i];
    if (s < 0) return false;
    if (strict && s == 0) return false;
  }
  return true;
}

}  // namespace

bool Cone::contains(const LatticeVector& v) const {
  return satisfies(halfspaces(), v.coords, false);
}
bool Cone::contains(const RatPoint& p) const { return satisfies(halfspaces(), p, false); }
bool Cone::contains_in_relint(const LatticeVector& v) const {
  if (is_zero_cone()) return linalg::is_zero(v.coords);
  return satisfies(halfspaces(), v.coords, true);
}
bool Cone::contains_in_relint(const RatPoint& p) const {
  if (is_zero_cone()) {
    for (const auto& x : p)
      if (x != 0) return false;
    return true;
  }
  return satisfies(halfspaces(), p, true);
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& r : other.rays())
    if (!contains(r)) return false;
  return true;
}

bool Cone::is_strongly_convex() const {
  if (is_zero_cone()) return true;
  const auto& h = halfspaces();
  IntMat sys = h.equations;
  for (const auto& n : h.normals) sys.push_back(n);
  // lineality space must be trivial
  return linalg::kernel_basis(sys).empty();
}

LatticeVector Cone::generic_point() const {
  std::vector<Int> s(ambient_dim_, 0);
  for (const auto& r : rays_)
    for (size_t i = 0; i < s.size(); ++i) s[i] += r.coords[i];
  return LatticeVector(std::move(s));
}

bool Cone::same_cone(const Cone& other) const {
  return contains_cone(other) && other.contains_cone(*this);
}

std::vector<Cone> Cone::faces() const {
  const auto& h = halfspaces();
  std::vector<Cone> out;
  std::set<std::vector<std::vector<Int>>> seen;
  const size_t nf = h.normals.size();
  for (size_t mask = 0; mask < (size_t(1) << nf); ++mask) {
    std::vector<LatticeVector> sel;
    for (const auto& r : rays_) {
      bool on = true;
      for (size_t i = 0; i < nf && on; ++i)
        if (mask & (size_t(1) << i))
          if (linalg::dot(h.normals[i], r.coords) != 0) on = false;
      if (on) sel.push_back(r);
    }
    std::vector<std::vector<Int>> key;
    for (const auto& r : sel) key.push_back(r.coords);
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.emplace_back(sel, ambient_dim_);
  }
  // the zero cone is a face of every strongly convex cone
  std::vector<std::vector<Int>> zero_key;
  if (seen.insert(zero_key).second) out.emplace_back(std::vector<LatticeVector>{}, ambient_dim_);
  return out;
}

Cone Cone::smallest_face_containing(const std::vector<LatticeVector>& pts) const {
  const auto& h = halfspaces();
  std::vector<LatticeVector> sel;
  std::vector<size_t> vanishing;
  for (size_t i = 0; i < h.normals.size(); ++i) {
    bool all_zero = true;
    for (const auto& p : pts)
      if (linalg::dot(h.normals[i], p.coords) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) vanishing.push_back(i);
  }
  for (const auto& r : rays_) {
    bool on = true;
    for (size_t i : vanishing)
      if (linalg::dot(h.normals[i], r.coords) != 0) {
        on = false;
        break;
      }
    if (on) sel.push_back(r);
  }
  return Cone(std::move(sel), ambient_dim_);
}

bool Cone::is_face_of(const Cone& bigger) const {
  if (!bigger.contains_cone(*this)) return false;
  if (is_zero_cone()) return bigger.is_strongly_convex();
  std::vector<LatticeVector> pts(rays_);
  Cone f = bigger.smallest_face_containing(pts);
  return same_cone(f);
}

std::string Cone::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ", ";
    os << rays_[i].str();
  }
  os << ">";
  return os.str();
}

std::vector<LatticeVector> facets(const Cone& c) {
  std::vector<LatticeVector> out;
  for (const auto& n : c.halfspaces().normals) out.emplace_back(n);
  return out;
}

bool unimodular_rays(const IntMat& rays) {
  if (rays.empty()) return true;
  const size_t d = rays[0].size();
  for (const auto& r : rays)
    if (r.size() != d) throw std::invalid_argument("unimodular_rays: ray dimension mismatch");
  if (rays.size() > d) return false;  // non-simplicial
  if (linalg::rank(rays) != static_cast<int>(rays.size())) return false;
  return linalg::maximal_minor_gcd(rays) == 1;
}

bool is_smooth_cone(const Cone& c) {
  if (c.is_zero_cone()) return true;
  IntMat m;
  for (const auto& r : c.rays()) m.push_back(r.coords);
  return unimodular_rays(m);
}

Fan::Fan(std::vector<Cone> maximal_cones, size_t ambient_dim)
    : cones_(std::move(maximal_cones)), ambient_dim_(ambient_dim) {
  for (const auto& c : cones_)
    if (c.ambient_dim() != ambient_dim_)
      throw std::invalid_argument("fan: cone ambient dimension mismatch");
}

Fan Fan::make(size_t ambient_dim, std::vector<std::vector<std::vector<long>>> cones) {
  std::vector<Cone> cs;
  for (auto& c : cones) cs.push_back(Cone::make(ambient_dim, std::move(c)));
  return Fan(std::move(cs), ambient_dim);
}

bool Fan::contains_point(const RatPoint& p) const {
  for (const auto& c : cones_)
    if (c.contains(p)) return true;
  return false;
}

bool Fan::contains_point(const LatticeVector& v) const {
  for (const auto& c : cones_)
    if (c.contains(v)) return true;
  return false;
}

std::vector<Cone> Fan::all_cones() const {
  std::vector<Cone> out;
  for (const auto& c : cones_)
    for (auto& f : c.faces()) {
      bool dup = false;
      for (const auto& o : out)
        if (o.same_cone(f)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(f));
    }
  return out;
}

std::string Fan::str() const {
  std::ostringstream os;
  os << "fan[";
  for (size_t i = 0; i < cones_.size(); ++i) {
    if (i) os << "; ";
    os << cones_[i].str();
  }
  os << "]";
  return os.str();
}

namespace {

// Extreme rays of the intersection of two cones, from the combined H-representation.
std::vector<LatticeVector> intersection_rays(const Cone& a, const Cone& b) {
  const auto& ha = a.halfspaces();
  const auto& hb = b.halfspaces();
  IntMat eqs = ha.equations;
  for (const auto& e : hb.equations) eqs.push_back(e);
  IntMat ineqs = ha.normals;
  for (const auto& n : hb.normals) ineqs.push_back(n);

  const size_t dim = a.ambient_dim();
  // span of the intersection candidate: kernel of the equations
  auto in_both = [&](const std::vector<Int>& v) {
    LatticeVector lv{std::vector<Int>(v)};
    return a.contains(lv) && b.contains(lv);
  };

  // enumerate candidate rays: kernels of (dim-1)-subsets of all bounding
  // hyperplanes (equations always active)
  std::vector<std::vector<Int>> cands;
  std::vector<size_t> idx;
  const size_t m = ineqs.size();
  std::function<void(size_t, size_t)> rec = [&](size_t from, size_t need) {
    if (need == 0) {
      IntMat sys = eqs;
      for (size_t i : idx) sys.push_back(ineqs[i]);
      auto ker = linalg::kernel_basis(sys);
      if (ker.size() != 1) return;
      for (int sgn : {1, -1}) {
        std::vector<Int> v = ker[0];
        if (sgn < 0)
          for (auto& x : v) x = -x;
        if (in_both(v)) {
          bool dup = false;
          for (const auto& c : cands)
            if (linalg::positively_proportional(c, v)) {
              dup = true;
              break;
            }
          if (!dup) cands.push_back(v);
        }
      }
      return;
    }
    for (size_t i = from; i + need <= m; ++i) {
      idx.push_back(i);
      rec(i + 1, need - 1);
      idx.pop_back();
    }
  };
  for (size_t take = 0; take < dim && take <= m; ++take) {
    idx.clear();
    rec(0, take);
  }
  std::vector<LatticeVector> out;
  for (auto& c : cands) out.emplace_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_fan(const Fan& f, std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  for (const auto& c : f.maximal_cones()) {
    if (c.ambient_dim() != f.ambient_dim()) return fail("cone ambient dim mismatch");
    if (!c.is_strongly_convex()) return fail("cone " + c.str() + " is not strongly convex");
  }
  const auto& cs = f.maximal_cones();
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      auto rays = intersection_rays(cs[i], cs[j]);
      Cone inter(rays, f.ambient_dim());
      if (!inter.is_face_of(cs[i]) || !inter.is_face_of(cs[j]))
        return fail("intersection of " + cs[i].str() + " and " + cs[j].str() +
                    " is not a common face");
    }
  return true;
}

Fan star_subdivision(const Fan& f, const LatticeVector& r0) {
  LatticeVector r(linalg::primitive(r0.coords));
  if (!f.contains_point(r))
    throw std::invalid_argument("star_subdivision: ray outside the support of the fan");
  std::vector<Cone> out;
  for (const auto& c : f.maximal_cones()) {
    if (!c.contains(r)) {
      out.push_back(c);
      continue;
    }
    const auto& h = c.halfspaces();
    for (const auto& n : h.normals) {
      if (linalg::dot(n, r.coords) == 0) continue;  // facet contains r
      std::vector<LatticeVector> rs;
      for (const auto& ray : c.rays())
        if (linalg::dot(n, ray.coords) == 0) rs.push_back(ray);
      rs.push_back(r);
      out.emplace_back(std::move(rs), f.ambient_dim());
    }
  }
  // a cone can be produced twice when r sits on a shared face
  std::vector<Cone> dedup;
  for (auto& c : out) {
    bool dup = false;
    for (const auto& d : dedup)
      if (d.same_cone(c)) {
        dup = true;
        break;
      }
    if (!dup) dedup.push_back(std::move(c));
  }
  return Fan(std::move(dedup), f.ambient_dim());
}

LatticeVector FanMap::apply(const LatticeVector& v) const {
  std::vector<Int> out(matrix.size(), 0);
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != v.dim())
      throw std::invalid_argument("fan map: matrix/source dimension mismatch");
    for (size_t j = 0; j < v.dim(); ++j) out[i] += matrix[i][j] * v.coords[j];
  }
  return LatticeVector(std::move(out));
}

bool check_fan_map(const FanMap& m) {
  if (m.matrix.size() != m.target.ambient_dim()) return false;
  for (const auto& row : m.matrix)
    if (row.size() != m.source.ambient_dim()) return false;
  for (const auto& c : m.source.maximal_cones()) {
    bool inside_some = false;
    for (const auto& t : m.target.maximal_cones()) {
      bool all_in = true;
      for (const auto& r : c.rays())
        if (!t.contains(m.apply(r))) {
          all_in = false;
          break;
        }
      if (all_in) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) return false;
  }
  return true;
}

std::vector<FiberComponent> fiber_components(const FanMap& m, const Cone& tau) {
  if (!check_fan_map(m))
    throw std::invalid_argument("fiber_components: map is not a map of fans");
  bool tau_in_target = false;
  for (const auto& c : m.target.all_cones())
    if (c.same_cone(tau)) {
      tau_in_target = true;
      break;
    }
  if (!tau_in_target)
    throw std::invalid_argument("fiber_components: tau is not a cone of the target fan");

  auto relint_maps_into = [&](const Cone& sigma) {
    for (const auto& r : sigma.rays())
      if (!tau.contains(m.apply(r))) return false;
    // linear image of the relative interior is the relative interior of the image
    return tau.contains_in_relint(m.apply(sigma.generic_point()));
  };

  std::vector<Cone> hits;
  for (const auto& sigma : m.source.all_cones())
    if (relint_maps_into(sigma)) hits.push_back(sigma);

  std::vector<FiberComponent> out;
  for (const auto& sigma : hits) {
    bool minimal = true;
    for (const auto& other : hits) {
      if (other.same_cone(sigma)) continue;
      if (sigma.contains_cone(other)) {  // a qualifying proper face
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back({sigma, static_cast<int>(m.source.ambient_dim()) - sigma.dim()});
  }
  std::sort(out.begin(), out.end(), [](const FiberComponent& a, const FiberComponent& b) {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() < b.cone.dim();
    return a.cone.rays() < b.cone.rays();
  });
  return out;
}

std::optional<Cone> smallest_common_cone(const Fan& f, const std::vector<Cone>& cones) {
  std::optional<Cone> best;
  for (const auto& c : f.all_cones()) {
    bool ok = true;
    for (const auto& sub : cones)
      if (!c.contains_cone(sub)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (!best || best->contains_cone(c)) best = c;
  }
  return best;
}

}  // namespace contractions::toric

namespace contractions::toric {

namespace {

Fan fan_from_json_obj(const nlohmann::json& j) {
  size_t dim = j.at("ambient_dim").get<size_t>();
  std::vector<Cone> cones;
  for (const auto& cj : j.at("cones")) {
    std::vector<LatticeVector> rays;
    for (const auto& rj : cj) {
      std::vector<Int> coords;
      for (const auto& x : rj) coords.emplace_back(x.get<long>());
      rays.emplace_back(std::move(coords));
    }
    cones.emplace_back(std::move(rays), dim);
  }
  return Fan(std::move(cones), dim);
}

}  // namespace

Fan fan_from_json(const std::string& json_text) {
  return fan_from_json_obj(nlohmann::json::parse(json_text));
}

FanMap fan_map_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  linalg::IntMat matrix;
  for (const auto& row : j.at("matrix")) {
    std::vector<Int> r;
    for (const auto& x : row) r.emplace_back(x.get<long>());
    matrix.push_back(std::move(r));
  }
  return FanMap{std::move(matrix), fan_from_json_obj(j.at("source")),
                fan_from_json_obj(j.at("target"))};
}

std::string fan_to_json(const Fan& f) {
  nlohmann::json j;
  j["ambient_dim"] = f.ambient_dim();
  nlohmann::json cones = nlohmann::json::array();
  for (const auto& c : f.maximal_cones()) {
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& r : c.rays()) {
      nlohmann::json rj = nlohmann::json::array();
      for (const auto& x : r.coords) rj.push_back(to_long(x));
      cj.push_back(std::move(rj));
    }
    cones.push_back(std::move(cj));
  }
  j["cones"] = std::move(cones);
  return j.dump(2);
}

}  // namespace contractions::toric

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contractions/toric.hpp"
#include "oracles.hpp"

using namespace contractions;
using namespace contractions::toric;

namespace {

// u = e1+e2, v = e3+e4 subdivision of the standard cone in Z^4
Fan fan_361() {
  return Fan::make(4, {
                          {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}},
                          {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}},
                          {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                          {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}},
                      });
}

Fan fan_p1xp1() {
  return Fan::make(2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{-1, 0}, {0, 1}}, {{-1, 0}, {0, -1}}});
}

// v1 = -e1-e3, v2 = -e2-e3-e4; five smooth simplices
Fan fan_362() {
  std::vector<long> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e4{0, 0, 0, 1}, me4{0, 0, 0, -1};
  std::vector<long> v1{-1, 0, -1, 0}, v2{0, -1, -1, -1};
  return Fan::make(4, {{e1, v1, e2, e4}, {e1, v1, v2, e4}, {e1, v1, e2, v2}, {e1, e2, v2, me4}, {v1, e2, v2, me4}});
}

Fan fan_quadric_cone() {
  return Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}}});
}

FanMap map_361() {
  return FanMap{{{1, -1, 0, 0}, {0, 0, 1, -1}}, fan_361(), fan_p1xp1()};
}

FanMap map_362() {
  return FanMap{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, fan_362(), fan_quadric_cone()};
}

linalg::IntMat ray_matrix(const Cone& c) {
  linalg::IntMat m;
  for (const auto& r : c.rays()) m.push_back(r.coords);
  return m;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int it = 0; it < 200; ++it) {
    size_t n = 1 + it % 5;
    linalg::IntMat m(n, std::vector<Int>(n));
    for (auto& row : m)
      for (auto& x : row) x = d(rng);
    CHECK(linalg::det(m) == oracles::cofactor_det(m));
  }
}

TEST_CASE("is_smooth_cone basics") {
  CHECK(is_smooth_cone(Cone::make(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})));
  // the generators e1, 2*e2 span an index-2 sublattice
  CHECK_FALSE(unimodular_rays({{Int(1), Int(0)}, {Int(0), Int(2)}}));
  // a genuinely singular cone: primitivization does not rescue it
  CHECK_FALSE(is_smooth_cone(Cone::make(2, {{1, 0}, {1, 2}})));
  CHECK_FALSE(is_smooth_cone(Cone::make(2, {{1, 0}, {0, 1}, {1, 1}})));  // non-simplicial
}

TEST_CASE("smoothness of <u,v,e1,e3>: determinant oracle") {
  Cone c = Cone::make(4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
  Int d = oracles::cofactor_det(ray_matrix(c));
  CHECK((d == 1 || d == -1));
  CHECK(is_smooth_cone(c));
}

TEST_CASE("is_smooth_cone invariances") {
  std::mt19937 rng(11);
  Cone c = Cone::make(4, {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}});
  auto rays = c.rays();
  for (int it = 0; it < 10; ++it) {
    std::shuffle(rays.begin(), rays.end(), rng);
    CHECK(is_smooth_cone(Cone(rays, 4)) == is_smooth_cone(c));
  }
  // unimodular change of basis: x -> U x with det U = 1
  linalg::IntMat U{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}};
  std::vector<LatticeVector> moved;
  for (const auto& r : rays) {
    std::vector<Int> w(4, 0);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) w[i] += U[i][j] * r.coords[j];
    moved.emplace_back(std::move(w));
  }
  CHECK(is_smooth_cone(Cone(moved, 4)) == is_smooth_cone(c));
}

TEST_CASE("facets: quadrant and Fourier-Motzkin oracle on the quadric cone") {
  auto f1 = facets(Cone::make(2, {{1, 0}, {0, 1}}));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0] == LatticeVector{0, 1});
  CHECK(f1[1] == LatticeVector{1, 0});

  Cone qc = Cone::make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}});
  auto fs = facets(qc);
  REQUIRE(fs.size() == 4);
  std::vector<std::vector<Int>> got;
  for (const auto& n : fs) got.push_back(n.coords);
  auto expect = oracles::fm_facets(ray_matrix(qc), 3);
  CHECK(got == expect);

  auto half = facets(Cone::make(2, {{1, 0}}));
  REQUIRE(half.size() == 1);
  CHECK(half[0] == LatticeVector{1, 0});
}

TEST_CASE("membership from the halfspace description") {
  Cone qc = Cone::make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}});
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(0, 5);
  for (int it = 0; it < 100; ++it) {
    std::vector<Rat> p(3, 0);
    for (const auto& r : qc.rays()) {
      int c = coeff(rng);
      for (size_t i = 0; i < 3; ++i) p[i] += Rat(c) * Rat(r.coords[i]);
    }
    CHECK(qc.contains(p));
  }
  CHECK_FALSE(qc.contains(LatticeVector{0, 0, 1}));
  CHECK(qc.contains_in_relint(LatticeVector{0, 0, -1}));
}

TEST_CASE("is_fan accepts the two worked fans and rejects an overlap") {
  CHECK(is_fan(fan_361()));
  CHECK(is_fan(fan_362()));
  CHECK(is_fan(fan_p1xp1()));
  CHECK(is_fan(fan_quadric_cone()));

  // two full-dimensional cones overlapping in dimension 2 but not in a face
  std::string why;
  Fan bad = Fan::make(2, {{{1, 0}, {0, 1}}, {{1, 2}, {2, 1}}});
  CHECK_FALSE(is_fan(bad, &why));
  CHECK(!why.empty());
}

TEST_CASE("all five 3.6.2-style simplices and all four 3.6.1-style cones are smooth") {
  Fan a = fan_361(), b = fan_362();
  for (const auto& c : a.maximal_cones()) CHECK(is_smooth_cone(c));
  for (const auto& c : b.maximal_cones()) CHECK(is_smooth_cone(c));
}

TEST_CASE("star subdivision: plane and 3-space blow-ups") {
  Fan plane = Fan::make(2, {{{1, 0}, {0, 1}}});
  Fan sub = star_subdivision(plane, LatticeVector{1, 1});
  REQUIRE(sub.maximal_cones().size() == 2);
  for (const auto& c : sub.maximal_cones()) CHECK(is_smooth_cone(c));
  CHECK(is_fan(sub));
  Cone c1 = Cone::make(2, {{1, 0}, {1, 1}});
  Cone c2 = Cone::make(2, {{1, 1}, {0, 1}});
  bool seen1 = false, seen2 = false;
  for (const auto& c : sub.maximal_cones()) {
    seen1 = seen1 || c.same_cone(c1);
    seen2 = seen2 || c.same_cone(c2);
  }
  CHECK(seen1);
  CHECK(seen2);

  Fan space = Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  Fan sub3 = star_subdivision(space, LatticeVector{1, 1, 1});
  REQUIRE(sub3.maximal_cones().size() == 3);
  for (const auto& c : sub3.maximal_cones()) CHECK(is_smooth_cone(c));
  CHECK(is_fan(sub3));

  CHECK_THROWS(star_subdivision(plane, LatticeVector{-1, 0}));
}

TEST_CASE("iterated subdivision of the standard 4-cone reproduces the 3.6.1 fan") {
  Fan std4 = Fan::make(4, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  Fan a = star_subdivision(std4, LatticeVector{1, 1, 0, 0});
  Fan b = star_subdivision(a, LatticeVector{0, 0, 1, 1});
  CHECK(is_fan(b));
  Fan target = fan_361();

  // support is preserved: sample rational points both ways
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(0, 4);
  auto sample_and_check = [&](const Fan& from, const Fan& into) {
    for (const auto& c : from.maximal_cones())
      for (int it = 0; it < 20; ++it) {
        std::vector<Rat> p(4, 0);
        for (const auto& r : c.rays()) {
          int k = coeff(rng);
          for (size_t i = 0; i < 4; ++i) p[i] += Rat(k) * Rat(r.coords[i]);
        }
        CHECK(into.contains_point(p));
      }
  };
  sample_and_check(b, target);
  sample_and_check(target, b);

  // each 3.6.1 cone is a union of result cones; here the refinement is exact
  REQUIRE(b.maximal_cones().size() == 4);
  for (const auto& c : target.maximal_cones()) {
    bool found = false;
    for (const auto& d : b.maximal_cones()) found = found || d.same_cone(c);
    CHECK(found);
  }
}

TEST_CASE("star subdivision support preservation on random smooth cones") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> dims(2, 4);
  int done = 0;
  while (done < 12) {
    int n = dims(rng);
    // random unimodular matrix: product of elementary operations on the identity
    linalg::IntMat U(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;
    for (int ops = 0; ops < 6; ++ops) {
      int i = rng() % n, j = rng() % n;
      if (i == j) continue;
      int k = entry(rng);
      for (int c = 0; c < n; ++c) U[i][c] += k * U[j][c];
    }
    std::vector<LatticeVector> rays;
    for (int i = 0; i < n; ++i) rays.emplace_back(std::vector<Int>(U[i].begin(), U[i].end()));
    Cone c(rays, n);
    if (!is_smooth_cone(c)) continue;
    Fan f({c}, n);
    // subdivide at the sum of a random nonempty subset of generators
    unsigned mask = 1 + rng() % ((1u << n) - 1);
    std::vector<Int> s(n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i))
        for (int k2 = 0; k2 < n; ++k2) s[k2] += U[i][k2];
    Fan sub = star_subdivision(f, LatticeVector{std::vector<Int>(s)});
    CHECK(is_fan(sub));
    for (const auto& mc : sub.maximal_cones()) {
      CHECK(is_smooth_cone(mc));
      for (const auto& r : mc.rays()) CHECK(f.contains_point(r));
    }
    std::uniform_int_distribution<int> coeff(0, 3);
    for (int it = 0; it < 10; ++it) {
      std::vector<Rat> p(n, 0);
      for (const auto& r : c.rays()) {
        int k3 = coeff(rng);
        for (int i = 0; i < n; ++i) p[i] += Rat(k3) * Rat(r.coords[i]);
      }
      CHECK(sub.contains_point(p));
    }
    ++done;
  }
}

TEST_CASE("check_fan_map on the worked projections") {
  CHECK(check_fan_map(map_361()));
  CHECK(check_fan_map(map_362()));
  Fan f = fan_p1xp1();
  FanMap id{{{1, 0}, {0, 1}}, f, f};
  CHECK(check_fan_map(id));
  // maximal-cone formulation agrees with the all-faces formulation
  for (const auto& m : {map_361(), map_362()}) {
    bool faces_ok = true;
    for (const auto& sigma : m.source.all_cones()) {
      bool inside = false;
      for (const auto& t : m.target.maximal_cones()) {
        bool all = true;
        for (const auto& r : sigma.rays())
          if (!t.contains(m.apply(r))) all = false;
        if (all) inside = true;
      }
      faces_ok = faces_ok && inside;
    }
    CHECK(faces_ok == check_fan_map(m));
  }
}

TEST_CASE("fiber over the vertex of the quadric cone: two planes meeting at a point") {
  FanMap m = map_362();
  Cone tau = Cone::make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}});
  auto comps = fiber_components(m, tau);
  REQUIRE(comps.size() == 2);
  Cone c1 = Cone::make(4, {{1, 0, 0, 0}, {-1, 0, -1, 0}});
  Cone c2 = Cone::make(4, {{0, 1, 0, 0}, {0, -1, -1, -1}});
  CHECK(comps[0].orbit_dim == 2);
  CHECK(comps[1].orbit_dim == 2);
  bool match = (comps[0].cone.same_cone(c1) && comps[1].cone.same_cone(c2)) ||
               (comps[0].cone.same_cone(c2) && comps[1].cone.same_cone(c1));
  CHECK(match);

  // pairwise incomparable under the face relation
  CHECK_FALSE(comps[0].cone.is_face_of(comps[1].cone));
  CHECK_FALSE(comps[1].cone.is_face_of(comps[0].cone));

  // the meeting locus: smallest fan cone containing both has orbit dimension 0
  auto common = smallest_common_cone(m.source, {comps[0].cone, comps[1].cone});
  REQUIRE(common.has_value());
  CHECK(common->dim() == 4);
  Cone expected = Cone::make(4, {{1, 0, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 0}, {0, -1, -1, -1}});
  CHECK(common->same_cone(expected));
}

TEST_CASE("fiber_components under the identity map") {
  Fan f = fan_361();
  FanMap id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f, f};
  for (const auto& tau : f.all_cones()) {
    auto comps = fiber_components(id, tau);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].cone.same_cone(tau));
    CHECK(comps[0].orbit_dim == 4 - tau.dim());
  }
}

TEST_CASE("fiber_components rejects tau outside the target fan") {
  FanMap m = map_362();
  Cone bogus = Cone::make(3, {{0, 0, 1}});
  CHECK_THROWS(fiber_components(m, bogus));
}

TEST_CASE("ray primitivization warning flag") {
  Cone c = Cone::make(2, {{2, 4}, {1, 0}});
  CHECK(c.rescaled_on_construction());
  CHECK(c.rays()[0] == LatticeVector{1, 2});
  CHECK_FALSE(Cone::make(2, {{1, 2}, {1, 0}}).rescaled_on_construction());
}

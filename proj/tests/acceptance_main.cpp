// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "contractions/bundles.hpp"
#include "contractions/catalog.hpp"
#include "contractions/classify.hpp"
#include "contractions/groebner.hpp"
#include "contractions/hilbert.hpp"
#include "contractions/surfaces.hpp"
#include "contractions/tangent_cone.hpp"
#include "contractions/toric.hpp"

using namespace contractions;

namespace {

int failures = 0;

struct Criterion {
  std::string id;
  std::string label;
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  ~Criterion() {
    std::printf("[%s] %s: %s%s%s\n", ok ? "PASS" : "FAIL", id.c_str(), label.c_str(),
                detail.str().empty() ? "" : " -- ", detail.str().c_str());
    if (!ok) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

toric::Fan fan_361() {
  return toric::Fan::make(
      4, {{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}},
          {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 0, 1}},
          {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}},
          {{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 0, 1}}});
}

toric::Fan fan_362() {
  std::vector<long> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e4{0, 0, 0, 1}, me4{0, 0, 0, -1};
  std::vector<long> v1{-1, 0, -1, 0}, v2{0, -1, -1, -1};
  return toric::Fan::make(4, {{e1, v1, e2, e4},
                              {e1, v1, v2, e4},
                              {e1, v1, e2, v2},
                              {e1, e2, v2, me4},
                              {v1, e2, v2, me4}});
}

gb::IdealBasis two_lines_ideal() {
  return gb::IdealBasis::make({"x", "y", "z", "t"}, gb::MonomialOrder::grevlex(),
                              {"xz", "xt", "yz", "yt"});
}

gb::IdealBasis double_line_ideal() {
  return gb::IdealBasis::make({"x0", "x1", "x2", "x3"}, gb::MonomialOrder::grevlex(),
                              {"x0^2", "x1^2", "x0*x1", "x0*x2+x1*x3"});
}

gb::IdealBasis surface_ideal_corrected() {
  return gb::IdealBasis::make({"x", "y", "z", "t", "u"}, gb::MonomialOrder::grevlex(),
                              {"txy-x^2y-txz+x^2z-t^2u", "tx^2-xyz+xz^2-xyu+tzu",
                               "t^3-ty^2+xy^2-xyz+tz^2", "t^2x-xyz+xz^2-tyu",
                               "txy+t^2z-y^2z+z^3-y^2u"});
}

}  // namespace

int main() {
  // 1. component bound table reproduced cell by cell, in under a second
  {
    Criterion c{"1", "bound table: all 16 cells match the printed entries"};
    auto t0 = std::chrono::steady_clock::now();
    auto rows = classify::table3_derive();
    double dt = seconds_since(t0);
    c.expect(rows.size() == 8, "expected 8 rows");
    auto printed = classify::table3_printed();
    for (const auto& row : rows) {
      const auto& exp = *std::find_if(printed.begin(), printed.end(),
                                      [&](const auto& p) { return p.id == row.id; });
      c.expect(classify::cell_matches_printed(row.birational, exp.birational),
               "row " + row.id + " birational: " + row.birational.str() + " != " + exp.birational);
      c.expect(classify::cell_matches_printed(row.fiber, exp.fiber),
               "row " + row.id + " fiber: " + row.fiber.str() + " != " + exp.fiber);
    }
    c.expect(dt < 1.0, "derivation took " + std::to_string(dt) + " s");
  }

  // 2. curve table: Riemann-Roch values equal the printed ones
  {
    Criterion c{"2", "curve table: linear-system rows and the parametric bounds"};
    std::map<std::string, long> printed_hilb = {{"4", 3}, {"5a", 2}, {"5b", 4},
                                                {"6b", 3}, {"7a", 3}, {"7b", 5}};
    for (const auto& row : classify::table2_rows()) {
      auto it = printed_hilb.find(row.id);
      if (it == printed_hilb.end()) continue;
      c.expect(row.hilb == it->second,
               "row " + row.id + ": hilb " + std::to_string(row.hilb));
    }
    for (int r = 1; r <= 8; ++r)
      c.expect(classify::table2_row3a_hilb(r) <= 2, "row 3a at r=" + std::to_string(r));
    for (int r = 3; r <= 8; ++r) {
      c.expect(classify::table2_row3b_hilb(r) == 2, "row 3b hilb at r=" + std::to_string(r));
      c.expect(classify::table2_row3b_lc(r) == 3, "row 3b L.C at r=" + std::to_string(r));
    }
  }

  // 3. reducible 3-fold adjunction enumeration
  {
    Criterion c{"3", "reducible 3-fold pairs: exactly {P2+F2/C0, F1/C0+F_r/f}"};
    auto pairs = classify::threefold_reducible_enumeration();
    c.expect(pairs.size() == 2, "expected 2 pair types");
    c.expect(pairs[0].first.desc == "P2 along a line" && pairs[0].second.desc == "F2 along C0",
             "first pair wrong");
    c.expect(pairs[1].first.desc == "F1 along C0" && pairs[1].second.desc == "F_r along f",
             "second pair wrong");
    for (const auto& [a, b] : pairs)
      c.expect((a.k_dot_r + 1) + (b.k_dot_r + 1) == -1, "adjunction ledger broken");
    auto brute = classify::threefold_reducible_bruteforce(10);
    std::set<std::pair<std::string, std::string>> seen(brute.begin(), brute.end());
    c.expect(seen.size() == 12, "brute force found " + std::to_string(seen.size()) + " pairs");
    c.expect(seen.count({"P2 along a line", "F2 along C0"}) == 1, "missing the plane pair");
    for (const auto& [a, b] : seen)
      if (a != "P2 along a line")
        c.expect(a == "F1 along C0" || b == "F1 along C0", "unexpected pair " + a + " + " + b);
  }

  // 4. fiber lists reproduce the classification set-exactly
  {
    Criterion c{"4", "isolated two-dimensional fiber lists in dimensions 3 and 4"};
    for (int dim : {3, 4})
      for (auto kind : {classify::BoundKind::Birational, classify::BoundKind::FiberType}) {
        auto lists = dim == 4 ? classify::fourfold_fiber_lists(kind)
                              : classify::threefold_fiber_lists(kind);
        auto got = classify::config_names(lists);
        auto want = classify::expected_fiber_list(dim, kind);
        std::sort(want.begin(), want.end());
        std::ostringstream which;
        which << "dim " << dim << (kind == classify::BoundKind::Birational ? " birational" : " fiber");
        c.expect(got == want, which.str() + " list mismatch");
      }
    auto bir4 = classify::fourfold_fiber_lists(classify::BoundKind::Birational);
    c.expect(bir4.size() == 4, "birational 4-fold: expected 4 entries");
    auto fib4 = classify::fourfold_fiber_lists(classify::BoundKind::FiberType);
    size_t irred = 0, red = 0;
    for (const auto& f : fib4) (f.reducible() ? red : irred)++;
    c.expect(irred == 6, "fiber-type 4-fold irreducible: expected 6");
    c.expect(red == 7, "fiber-type 4-fold reducible: expected 6 + the point pair");
  }

  // 5. the two toric examples
  {
    Criterion c{"5", "toric examples: unimodularity, projections, vertex fiber"};
    auto t0 = std::chrono::steady_clock::now();
    toric::Fan f361 = fan_361();
    c.expect(f361.maximal_cones().size() == 4, "3.6.1-style fan has 4 cones");
    for (const auto& cone : f361.maximal_cones())
      c.expect(toric::is_smooth_cone(cone), "singular cone " + cone.str());
    toric::Fan p1p1 = toric::Fan::make(
        2, {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{-1, 0}, {0, 1}}, {{-1, 0}, {0, -1}}});
    toric::FanMap m361{{{1, -1, 0, 0}, {0, 0, 1, -1}}, f361, p1p1};
    c.expect(toric::check_fan_map(m361), "projection matrix fails on the first fan");

    toric::Fan f362 = fan_362();
    c.expect(f362.maximal_cones().size() == 5, "second fan has 5 simplices");
    for (const auto& cone : f362.maximal_cones())
      c.expect(toric::is_smooth_cone(cone), "singular simplex " + cone.str());
    toric::Fan quadric = toric::Fan::make(3, {{{1, 0, 0}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}}});
    toric::FanMap m362{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, f362, quadric};
    c.expect(toric::check_fan_map(m362), "projection along the last coordinate fails");
    toric::Cone vertex = quadric.maximal_cones()[0];
    auto comps = toric::fiber_components(m362, vertex);
    c.expect(comps.size() == 2, "fiber over the vertex has " + std::to_string(comps.size()) +
                                    " components");
    for (const auto& fc : comps)
      c.expect(fc.orbit_dim == 2, "component of orbit dim " + std::to_string(fc.orbit_dim));
    if (comps.size() == 2) {
      std::vector<toric::Cone> cones{comps[0].cone, comps[1].cone};
      auto common = toric::smallest_common_cone(f362, cones);
      c.expect(common.has_value() && 4 - common->dim() == 0,
               "meeting locus is not a single point");
    }
    c.expect(seconds_since(t0) < 1.0, "toric checks exceeded 1 s");
  }

  // 6. spanned-bundle table and Segre positivity
  {
    Criterion c{"6", "bundle table: chi = h0 on all 7 rows; Segre classes"};
    auto checks = bundles::verify_table1();
    c.expect(checks.size() == 7, "expected 7 rows");
    std::vector<long> s2s;
    std::set<std::pair<long, long>> zero;
    for (const auto& ck : checks) {
      c.expect(ck.pass, "row (" + std::to_string(ck.row.c1) + "," + std::to_string(ck.row.c2) +
                            ") fails: " + ck.detail);
      s2s.push_back(ck.s2);
      if (ck.s2 == 0) zero.insert({ck.row.c1, ck.row.c2});
    }
    c.expect(s2s == std::vector<long>{0, 1, 0, 4, 2, 1, 0}, "s2 values per row differ");
    c.expect(zero == std::set<std::pair<long, long>>{{0, 0}, {1, 1}, {2, 4}},
             "s2 = 0 rows differ");
    // the birational conormals all have positive s2
    std::vector<long> birational_s2 = {
        bundles::segre2(bundles::RankTwoBundle::on_p2(2, 1)),
        bundles::segre2(bundles::RankTwoBundle::on_p2(2, 2)),
        bundles::segre2(bundles::RankTwoBundle::on_p2(2, 3)),
        bundles::segre2(bundles::RankTwoBundle::on_quadric(bundles::QuadricKind::SmoothF0, 1, 1))};
    c.expect(birational_s2 == std::vector<long>{3, 2, 1, 1}, "conormal s2 values differ");
    for (long v : birational_s2) c.expect(v > 0, "a birational conormal has s2 <= 0");
  }

  // 7. blow-down multiplicities
  {
    Criterion c{"7", "multiplicity of the exceptional divisor along the fiber"};
    c.expect(bundles::blow_down_multiplicity(bundles::RankTwoBundle::on_p2(2, 2)) == 1,
             "c2 = 2 conormal should give 1");
    c.expect(bundles::blow_down_multiplicity(bundles::RankTwoBundle::on_p2(2, 3)) == 2,
             "c2 = 3 conormal should give 2");
    c.expect(bundles::blow_down_multiplicity(bundles::RankTwoBundle::on_quadric(
                 bundles::QuadricKind::SmoothF0, 1, 1)) == 2,
             "quadric fiber should give 2");
    c.expect(bundles::blow_down_multiplicity(bundles::RankTwoBundle::on_quadric(
                 bundles::QuadricKind::ConeS2, 1, 1)) == 2,
             "quadric cone fiber should give 2");
  }

  // 8. graded-ring smoothness test
  {
    Criterion c{"8", "graded ring at the contracted point: quadric cone and the flip case"};
    auto q3 = bundles::graded_dims(bundles::ConormalDescriptor::cone_over_q3(), 4);
    c.expect(q3.dims == std::vector<long>{1, 5, 14, 30, 55}, "cone-over-Q3 dims differ");
    auto v = bundles::castelnuovo_test(q3, 5);
    c.expect(v.kind == bundles::CastelnuovoVerdict::Kind::Hypersurface &&
                 v.hypersurface_degree == 2 && v.r == 5,
             "expected Hypersurface(d=2, embdim=5), got " + v.str());
    auto flip = bundles::graded_dims(bundles::ConormalDescriptor::sum_p2({1, 1}), 4);
    auto fv = bundles::castelnuovo_test(flip, 4);
    c.expect(fv.kind == bundles::CastelnuovoVerdict::Kind::Fails && fv.fail_k == 1 &&
                 fv.expected == 4 && fv.got == 6,
             "expected failure at k = 1 with 6 != 4, got " + fv.str());
  }

  // 9. polynomial kernel on the bundled ideals
  {
    Criterion c{"9", "ideal fixtures: dimensions, degrees, tangent cone, resolution"};
    auto t0 = std::chrono::steady_clock::now();
    {
      auto [dim, deg] = gb::hilbert_dim_degree(two_lines_ideal());
      c.expect(dim == 1 && deg == 2, "two disjoint lines");
    }
    {
      gb::IdealBasis dl = double_line_ideal();
      auto [dim, deg] = gb::hilbert_dim_degree(dl);
      c.expect(dim == 1 && deg == 2, "double line dimension/degree");
      auto support = gb::linear_coordinate_support(dl);
      c.expect(support.has_value() && dl.vars.size() - support->size() == 2,
               "double line support is not a single line");
    }
    for (long s : {2L, 3L, 4L})
      c.expect(gb::resolution_hilbert_check(s).pass, "resolution check s=" + std::to_string(s));
    {
      gb::IdealBasis is = surface_ideal_corrected();
      auto data = gb::hilbert_data(is);
      c.expect(data.proj_dim == 2 && data.degree == 5, "surface ideal under the corrected reading");
      gb::RatPoly chi = gb::resolution_chi(3);
      c.expect(chi == data.hilbert_polynomial, "Hilbert polynomial != resolution chi");
      gb::IdealBasis tc = gb::tangent_cone_at_point(is, 4);
      auto [tdim, tdeg] = gb::hilbert_dim_degree(tc);
      c.expect(tdim == 1 && tdeg == 2, "tangent cone is not a degree-2 curve");
      auto support = gb::linear_coordinate_support(tc);
      c.expect(support.has_value() && tc.vars.size() - support->size() == 2,
               "tangent cone is not supported on one line");
    }
    c.expect(seconds_since(t0) < 5.0, "kernel fixtures exceeded 5 s");
  }

  // 10. property suites
  {
    Criterion c{"10", "properties: idempotence, order invariance, subdivision, bilinearity"};
    // Buchberger idempotence
    for (auto make : {two_lines_ideal, double_line_ideal, surface_ideal_corrected}) {
      gb::IdealBasis g1 = gb::buchberger(make());
      gb::IdealBasis g2 = gb::buchberger(g1);
      c.expect(g1.generators == g2.generators, "buchberger not idempotent");
    }
    // Hilbert order-invariance on randomized ideals
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-2, 2);
    int done = 0;
    auto monomials_of = [](size_t n, unsigned d) {
      std::vector<gb::Monomial> out;
      std::vector<unsigned> cur(n, 0);
      std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned left) {
        if (pos + 1 == n) {
          cur[pos] = left;
          out.emplace_back(cur);
          return;
        }
        for (unsigned v = 0; v <= left; ++v) {
          cur[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, d);
      return out;
    };
    while (done < 20) {
      size_t n = 2 + rng() % 3;
      std::vector<std::string> vars;
      for (size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
      gb::IdealBasis base;
      base.vars = vars;
      int count = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i) {
        unsigned d = 1 + rng() % 3;
        std::vector<gb::Term> ts;
        for (const auto& m : monomials_of(n, d)) {
          int cf = coeff(rng);
          if (cf) ts.push_back({m, Rat(cf)});
        }
        auto p = gb::Polynomial::from_terms(std::move(ts));
        if (!p.is_zero()) base.generators.push_back(std::move(p));
      }
      if (base.generators.empty()) continue;
      std::optional<std::pair<long, Int>> ref;
      bool bad_draw = false;
      for (auto ord : {gb::MonomialOrder::grevlex(), gb::MonomialOrder::grlex(),
                       gb::MonomialOrder::lex()}) {
        gb::IdealBasis b = base;
        b.order = ord;
        try {
          auto dd = gb::hilbert_dim_degree(b);
          if (!ref)
            ref = dd;
          else
            c.expect(dd == *ref, "hilbert data depends on the order");
        } catch (const gb::ResourceLimit&) {
          bad_draw = true;
          break;
        }
      }
      if (!bad_draw) ++done;
    }
    // star subdivision support preservation on random smooth cones
    std::uniform_int_distribution<int> entry(-2, 2);
    int cones_done = 0;
    while (cones_done < 8) {
      int n = 2 + static_cast<int>(rng() % 3);
      linalg::IntMat U(n, std::vector<Int>(n, 0));
      for (int i = 0; i < n; ++i) U[i][i] = 1;
      for (int ops = 0; ops < 5; ++ops) {
        int i = rng() % n, j = rng() % n;
        if (i == j) continue;
        int k = entry(rng);
        for (int col = 0; col < n; ++col) U[i][col] += k * U[j][col];
      }
      std::vector<toric::LatticeVector> rays;
      for (int i = 0; i < n; ++i)
        rays.emplace_back(std::vector<Int>(U[i].begin(), U[i].end()));
      toric::Cone cone(rays, n);
      if (!toric::is_smooth_cone(cone)) continue;
      toric::Fan fan({cone}, n);
      unsigned mask = 1 + rng() % ((1u << n) - 1);
      std::vector<Int> s(n, 0);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          for (int k2 = 0; k2 < n; ++k2) s[k2] += U[i][k2];
      toric::Fan sub = toric::star_subdivision(fan, toric::LatticeVector{std::vector<Int>(s)});
      c.expect(toric::is_fan(sub), "subdivision is not a fan");
      for (const auto& mc : sub.maximal_cones()) {
        c.expect(toric::is_smooth_cone(mc), "subdivision of a smooth cone is singular");
        for (const auto& r : mc.rays())
          c.expect(fan.contains_point(r), "subdivision ray escapes the support");
      }
      std::uniform_int_distribution<int> cf(0, 3);
      for (int it = 0; it < 10; ++it) {
        std::vector<Rat> p(static_cast<size_t>(n), 0);
        for (const auto& r : cone.rays()) {
          int k3 = cf(rng);
          for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] += Rat(k3) * Rat(r.coords[i]);
        }
        c.expect(sub.contains_point(p), "support point lost after subdivision");
      }
      ++cones_done;
    }
    // intersection form bilinearity fuzzing
    std::uniform_int_distribution<long> cc(-6, 6);
    std::uniform_int_distribution<int> rr(0, 4);
    for (int it = 0; it < 200; ++it) {
      surf::SurfaceModel s =
          (it % 3 == 0) ? surf::SurfaceModel::P2() : surf::SurfaceModel::F(rr(rng));
      auto rnd = [&]() {
        surf::DivisorClass d{s, std::vector<long>(static_cast<size_t>(s.picard_rank()))};
        for (auto& x : d.coeff) x = cc(rng);
        return d;
      };
      auto a = rnd(), b = rnd(), e = rnd();
      long lam = cc(rng);
      c.expect(surf::intersect(a, b) == surf::intersect(b, a), "intersect not symmetric");
      c.expect(surf::intersect(lam * a + b, e) ==
                   lam * surf::intersect(a, e) + surf::intersect(b, e),
               "intersect not bilinear");
    }
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}

#include "contractions/tangent_cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace contractions::gb {

IdealBasis tangent_cone_origin(const IdealBasis& affine_ideal) {
  const size_t n = affine_ideal.vars.size();

  std::string hname = "_h";
  while (std::find(affine_ideal.vars.begin(), affine_ideal.vars.end(), hname) !=
         affine_ideal.vars.end())
    hname += "_";

  IdealBasis homog;
  homog.vars = affine_ideal.vars;
  homog.vars.push_back(hname);
  homog.order = MonomialOrder::grevlex();
  for (const auto& g : affine_ideal.generators) {
    if (g.is_zero()) continue;
    homog.generators.push_back(g.insert_var(n).homogenize(n));
  }

  // the homogenization of the ideal is the saturation of the generator ideal
  IdealBasis saturated = saturate_by_variable(homog, n);

  // graded order with the homogenizing variable most significant: leading
  // terms pick out the lowest forms
  MonomialOrder tc_order;
  tc_order.kind = MonomialOrder::Kind::GrLex;
  tc_order.priority.push_back(n);
  for (size_t i = 0; i < n; ++i) tc_order.priority.push_back(i);
  saturated.order = tc_order;
  saturated.groebner = false;
  IdealBasis g = buchberger(saturated);

  IdealBasis cone;
  cone.vars = affine_ideal.vars;
  cone.order = affine_ideal.order;
  for (const auto& p : g.generators) {
    unsigned top = 0;
    for (const auto& t : p.terms()) top = std::max(top, t.m.e[n]);
    std::vector<Term> keep;
    for (const auto& t : p.terms())
      if (t.m.e[n] == top) keep.push_back(t);
    Polynomial low = Polynomial::from_terms(std::move(keep)).substitute_one(n);
    if (!low.is_zero()) cone.generators.push_back(std::move(low));
  }
  return buchberger(cone);
}

IdealBasis tangent_cone_at_point(const IdealBasis& basis, size_t var) {
  if (var >= basis.vars.size()) throw std::invalid_argument("tangent_cone: bad variable index");
  for (const auto& g : basis.generators) {
    if (!g.is_homogeneous())
      throw std::invalid_argument("tangent_cone_at_point expects homogeneous generators");
    if (g.eval_coordinate_point(var) != 0)
      throw std::invalid_argument("tangent_cone: the point does not lie on the scheme");
  }
  IdealBasis chart;
  chart.vars = basis.vars;
  chart.vars.erase(chart.vars.begin() + static_cast<long>(var));
  chart.order = basis.order;
  for (const auto& g : basis.generators) {
    Polynomial p = g.substitute_one(var);
    if (!p.is_zero()) chart.generators.push_back(std::move(p));
  }
  return tangent_cone_origin(chart);
}

}  // namespace contractions::gb

#include "contractions/groebner.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace contractions::gb {

IdealBasis IdealBasis::make(std::vector<std::string> vars, MonomialOrder order,
                            const std::vector<std::string>& generator_text) {
  IdealBasis b;
  b.vars = std::move(vars);
  b.order = order;
  for (const auto& g : generator_text) {
    Polynomial p = parse_polynomial(g, b.vars);
    if (!p.is_zero()) b.generators.push_back(std::move(p));
  }
  return b;
}

std::string IdealBasis::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) os << ", ";
    os << generators[i].str(vars);
  }
  os << ")";
  return os.str();
}

Polynomial normal_form(const Polynomial& f, const IdealBasis& basis) {
  Polynomial rem;
  Polynomial cur = f;
  const auto& ord = basis.order;
  while (!cur.is_zero()) {
    const Term lead = cur.leading(ord);
    bool reduced = false;
    for (const auto& g : basis.generators) {
      if (g.is_zero()) continue;
      const Term& gl = g.leading(ord);
      if (!gl.m.divides(lead.m)) continue;
      Term q{lead.m.divide(gl.m), lead.c / gl.c};
      cur = cur - g.mul_term(q);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem = rem + Polynomial::from_terms({lead});
      cur = cur - Polynomial::from_terms({lead});
    }
  }
  return rem;
}

namespace {

struct Pair {
  size_t i, j;
  Monomial lcm;
  unsigned deg;

  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  const Term& lf = f.leading(ord);
  const Term& lg = g.leading(ord);
  Monomial l = Monomial::lcm(lf.m, lg.m);
  Term tf{l.divide(lf.m), Rat(1) / lf.c};
  Term tg{l.divide(lg.m), Rat(1) / lg.c};
  return f.mul_term(tf) - g.mul_term(tg);
}

}  // namespace

IdealBasis buchberger(const IdealBasis& basis, size_t max_reductions) {
  IdealBasis out = basis;
  auto& G = out.generators;
  G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& p) { return p.is_zero(); }),
          G.end());
  const auto& ord = out.order;

  std::set<Pair> queue;
  std::set<std::pair<size_t, size_t>> handled;
  auto push_pairs_with = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      Monomial l = Monomial::lcm(G[i].leading(ord).m, G[k].leading(ord).m);
      queue.insert({i, k, l, l.total_degree()});
    }
  };
  for (size_t k = 0; k < G.size(); ++k) push_pairs_with(k);

  size_t reductions = 0;
  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    handled.insert({p.i, p.j});

    const Monomial& mi = G[p.i].leading(ord).m;
    const Monomial& mj = G[p.j].leading(ord).m;
    if (mi.coprime(mj)) continue;  // first Buchberger criterion
    // chain criterion: some k with LM(k) | lcm and both pairs already done
    bool chained = false;
    for (size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].leading(ord).m.divides(p.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (handled.count(key(p.i, k)) && handled.count(key(p.j, k))) chained = true;
    }
    if (chained) continue;

    if (++reductions > max_reductions)
      throw ResourceLimit("buchberger: reduction budget exhausted");
    Polynomial s = normal_form(s_polynomial(G[p.i], G[p.j], ord), out);
    if (s.is_zero()) continue;
    G.push_back(s.monic(ord));
    push_pairs_with(G.size() - 1);
  }

  // minimalize: drop generators whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    const Monomial& mi = G[i].leading(ord).m;
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mj = G[j].leading(ord).m;
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // inter-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      IdealBasis rest = out;
      rest.generators.clear();
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rest.generators.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], rest);
      if (!(r == minimal[i])) changed = true;
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(i));
        --i;
      } else {
        minimal[i] = r.monic(ord);
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading(ord).m, b.leading(ord).m);
  });
  out.generators = std::move(minimal);
  out.groebner = true;
  return out;
}

bool ideal_member(const Polynomial& f, const IdealBasis& groebner_basis) {
  return normal_form(f, groebner_basis).is_zero();
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
  IdealBasis ga = a.groebner ? a : buchberger(a);
  IdealBasis gb_ = b.groebner ? b : buchberger(b);
  for (const auto& g : ga.generators)
    if (!ideal_member(g, gb_)) return false;
  for (const auto& g : gb_.generators)
    if (!ideal_member(g, ga)) return false;
  return true;
}

bool radical_member(const Polynomial& f, const IdealBasis& basis) {
  const size_t n = basis.vars.size();
  IdealBasis ext;
  ext.vars = basis.vars;
  ext.vars.push_back("_w");
  ext.order = MonomialOrder::grevlex();
  for (const auto& g : basis.generators) ext.generators.push_back(g.insert_var(n));
  // 1 - w f
  Polynomial w = Polynomial::from_terms({{Monomial([&] {
                                            std::vector<unsigned> e(n + 1, 0);
                                            e[n] = 1;
                                            return e;
                                          }()),
                                          Rat(1)}});
  Polynomial one = Polynomial::constant(1, n + 1);
  ext.generators.push_back(one - w * f.insert_var(n));
  IdealBasis g = buchberger(ext);
  return g.generators.size() == 1 && g.generators[0] == Polynomial::constant(1, n + 1);
}

IdealBasis saturate_by_variable(const IdealBasis& basis, size_t var) {
  for (const auto& g : basis.generators)
    if (!g.is_homogeneous())
      throw std::invalid_argument("saturate_by_variable expects a homogeneous ideal");
  IdealBasis cur = basis;
  // reverse lex with the chosen variable least
  MonomialOrder ord;
  ord.kind = MonomialOrder::Kind::GRevLex;
  for (size_t i = 0; i < basis.vars.size(); ++i)
    if (i != var) ord.priority.push_back(i);
  ord.priority.push_back(var);
  cur.order = ord;
  while (true) {
    cur = buchberger(cur);
    bool divided = false;
    for (auto& g : cur.generators) {
      unsigned minexp = std::numeric_limits<unsigned>::max();
      for (const auto& t : g.terms()) minexp = std::min(minexp, t.m.e[var]);
      if (minexp > 0 && !g.is_zero()) {
        Monomial shift(std::vector<unsigned>(basis.vars.size(), 0));
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
          Term s = t;
          s.m.e[var] -= minexp;
          ts.push_back(std::move(s));
        }
        g = Polynomial::from_terms(std::move(ts));
        divided = true;
      }
    }
    if (!divided) break;
    cur.groebner = false;
  }
  IdealBasis out = cur;
  out.order = basis.order;
  out.groebner = false;
  return out;
}

std::optional<std::vector<size_t>> linear_coordinate_support(const IdealBasis& basis) {
  IdealBasis g = basis.groebner ? basis : buchberger(basis);
  const size_t n = basis.vars.size();
  std::vector<size_t> in_radical;
  for (size_t v = 0; v < n; ++v) {
    Polynomial xv = Polynomial::from_terms({{Monomial([&] {
                                               std::vector<unsigned> e(n, 0);
                                               e[v] = 1;
                                               return e;
                                             }()),
                                             Rat(1)}});
    if (radical_member(xv, g)) in_radical.push_back(v);
  }
  // every generator must lie in the span ideal (x_v : v in the set): each term
  // must involve one of the variables
  for (const auto& gen : g.generators)
    for (const auto& t : gen.terms()) {
      bool covered = false;
      for (size_t v : in_radical)
        if (t.m.e[v] > 0) {
          covered = true;
          break;
        }
      if (!covered) return std::nullopt;
    }
  return in_radical;
}

}  // namespace contractions::gb

#include "contractions/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace contractions::gb {

std::vector<Monomial> initial_ideal(const IdealBasis& groebner_basis) {
  if (!groebner_basis.groebner)
    throw std::invalid_argument("initial_ideal expects a Groebner basis");
  std::vector<Monomial> gens;
  for (const auto& g : groebner_basis.generators)
    gens.push_back(g.leading(groebner_basis.order).m);
  // minimalize
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using TPoly = std::vector<Int>;  // dense in t

TPoly tp_add(const TPoly& a, const TPoly& b) {
  TPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

TPoly tp_shift(const TPoly& a, size_t k) {  // multiply by t^k
  TPoly out(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

TPoly tp_mul_one_minus_t(const TPoly& a) {
  TPoly out(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + 1] -= a[i];
  }
  return out;
}

void tp_trim(TPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

struct Memo {
  std::map<std::vector<std::vector<unsigned>>, TPoly> table;
};

TPoly numerator_rec(std::vector<Monomial> gens, size_t nvars, Memo& memo) {
  gens = minimalize(std::move(gens));
  for (const auto& g : gens)
    if (g.is_one()) return TPoly{};  // unit ideal: series 0

  std::vector<std::vector<unsigned>> key;
  for (const auto& g : gens) key.push_back(g.e);
  auto it = memo.table.find(key);
  if (it != memo.table.end()) return it->second;

  // base: all generators are single variables
  long pivot = -1;
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].total_degree() >= 2) pivot = static_cast<long>(i);
  TPoly result;
  if (pivot < 0) {
    result = TPoly{1};
    for (size_t i = 0; i < gens.size(); ++i) result = tp_mul_one_minus_t(result);
  } else {
    // split at the most frequent variable of the pivot generator
    size_t var = 0;
    long best = -1;
    for (size_t v = 0; v < nvars; ++v) {
      if (gens[static_cast<size_t>(pivot)].e[v] == 0) continue;
      long count = 0;
      for (const auto& g : gens)
        if (g.e[v] > 0) ++count;
      if (count > best) {
        best = count;
        var = v;
      }
    }
    // I = (I + (x_var)) union x_var (I : x_var):
    // N(I) = N(I + (x_var)) + t N(I : x_var)
    std::vector<Monomial> plus, colon;
    Monomial xv(std::vector<unsigned>(nvars, 0));
    xv.e[var] = 1;
    plus.push_back(xv);
    for (const auto& g : gens) {
      if (g.e[var] == 0) plus.push_back(g);
      Monomial q = g;
      if (q.e[var] > 0) --q.e[var];
      colon.push_back(std::move(q));
    }
    result = tp_add(numerator_rec(std::move(plus), nvars, memo),
                    tp_shift(numerator_rec(std::move(colon), nvars, memo), 1));
  }
  tp_trim(result);
  memo.table[key] = result;
  return result;
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RatPoly rp_scale(const RatPoly& a, const Rat& c) {
  RatPoly out = a;
  for (auto& x : out) x *= c;
  return out;
}

// (k + shift choose m) as a polynomial in k
RatPoly binom_poly(long shift, unsigned m) {
  RatPoly out{1};
  for (unsigned i = 0; i < m; ++i) {
    // multiply by (k + shift - i)
    RatPoly next(out.size() + 1, 0);
    for (size_t j = 0; j < out.size(); ++j) {
      next[j] += out[j] * Rat(shift - static_cast<long>(i));
      next[j + 1] += out[j];
    }
    out = std::move(next);
  }
  Int fact = 1;
  for (unsigned i = 2; i <= m; ++i) fact *= i;
  return rp_scale(out, Rat(1) / Rat(fact));
}

void rp_trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<Int> hilbert_numerator(std::vector<Monomial> min_gens, size_t nvars) {
  Memo memo;
  return numerator_rec(std::move(min_gens), nvars, memo);
}

Rat eval_poly(const RatPoly& p, long k) {
  Rat acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * Rat(k) + p[i];
  return acc;
}

HilbertData hilbert_data(const IdealBasis& basis) {
  for (const auto& g : basis.generators)
    if (!g.is_homogeneous())
      throw std::invalid_argument("hilbert_data: non-homogeneous generator " +
                                  g.str(basis.vars));
  IdealBasis g = basis.groebner ? basis : buchberger(basis);
  const size_t n = basis.vars.size();
  TPoly N = hilbert_numerator(initial_ideal(g), n);

  HilbertData out;
  out.nvars = n;
  if (N.empty()) {  // unit ideal
    out.proj_dim = -1;
    out.degree = 0;
    return out;
  }
  // peel off (1-t) factors: N = (1-t)^a Q with Q(1) != 0
  size_t a = 0;
  TPoly Q = N;
  while (true) {
    Int at_one = 0;
    for (const auto& c : Q) at_one += c;
    if (at_one != 0) break;
    // synthetic division by (1 - t): q_i = sum_{j <= i} c_j
    TPoly div(Q.size() - 1, 0);
    Int acc = 0;
    for (size_t i = 0; i + 1 < Q.size(); ++i) {
      acc += Q[i];
      div[i] = acc;
    }
    Q = std::move(div);
    tp_trim(Q);
    ++a;
    if (Q.empty()) break;
  }
  const long D = static_cast<long>(n) - static_cast<long>(a);  // Krull dimension
  out.numerator = Q;
  out.proj_dim = D - 1;
  Int q1 = 0;
  for (const auto& c : Q) q1 += c;
  out.degree = q1;
  if (D >= 1) {
    RatPoly hp;
    for (size_t j = 0; j < Q.size(); ++j) {
      RatPoly part = binom_poly(static_cast<long>(D) - 1 - static_cast<long>(j),
                                static_cast<unsigned>(D - 1));
      hp = rp_add(hp, rp_scale(part, Rat(Q[j])));
    }
    rp_trim(hp);
    out.hilbert_polynomial = std::move(hp);
  }
  return out;
}

std::pair<long, Int> hilbert_dim_degree(const IdealBasis& basis) {
  HilbertData d = hilbert_data(basis);
  return {d.proj_dim, d.degree};
}

Int hilbert_function(const IdealBasis& basis, long k) {
  for (const auto& g : basis.generators)
    if (!g.is_homogeneous())
      throw std::invalid_argument("hilbert_function: non-homogeneous generator");
  IdealBasis g = basis.groebner ? basis : buchberger(basis);
  const size_t n = basis.vars.size();
  TPoly N = hilbert_numerator(initial_ideal(g), n);
  // H(k) = sum_j N_j C(k - j + n - 1, n - 1)
  Int acc = 0;
  for (size_t j = 0; j < N.size(); ++j)
    acc += N[j] * binomial_dim(k - static_cast<long>(j) + static_cast<long>(n) - 1,
                               static_cast<unsigned>(n - 1));
  return acc;
}

RatPoly resolution_chi(long s) {
  // chi(O_S(k)) = C(k+4,4) - (s+2) C(k-s+4,4) + (s+2) C(k-s-1+4,4) - C(k-s-2+4,4)
  RatPoly out = binom_poly(4, 4);
  out = rp_add(out, rp_scale(binom_poly(4 - s, 4), Rat(-(s + 2))));
  out = rp_add(out, rp_scale(binom_poly(3 - s, 4), Rat(s + 2)));
  out = rp_add(out, rp_scale(binom_poly(2 - s, 4), Rat(-1)));
  rp_trim(out);
  return out;
}

ResolutionCheck resolution_hilbert_check(long s) {
  if (s < 2 || s > 4) throw std::invalid_argument("resolution_hilbert_check: s in {2,3,4}");
  RatPoly chi = resolution_chi(s);
  ResolutionCheck out;
  out.s = s;
  out.dim = static_cast<long>(chi.size()) - 1;
  // degree = leading coefficient * dim!
  Rat lead = chi.empty() ? Rat(0) : chi.back();
  Int fact = 1;
  for (long i = 2; i <= out.dim; ++i) fact *= i;
  Rat deg = lead * Rat(fact);
  out.degree = Int(deg.get_num()) / Int(deg.get_den());
  const std::map<long, long> expected = {{2, 2}, {3, 5}, {4, 9}};
  out.pass = out.dim == 2 && out.degree == expected.at(s);
  std::ostringstream os;
  os << "s = " << s << ": dim " << out.dim << ", degree " << out.degree;
  out.detail = os.str();
  return out;
}

}  // namespace contractions::gb

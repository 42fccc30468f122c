#include "contractions/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace contractions::linalg {

Int det(IntMat m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return 1;

  // Bareiss: division-free up to exact divisions by the previous pivot.
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = t / prev;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int rank(const IntMat& m) {
  if (m.empty()) return 0;
  RatMat a(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    a[i] = RatMat::value_type(m[i].begin(), m[i].end());
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

void minor_gcd_rec(const IntMat& m, size_t next_col, std::vector<size_t>& chosen,
                   size_t k, Int& g) {
  if (chosen.size() == k) {
    IntMat sub(k, std::vector<Int>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = m[i][chosen[j]];
    Int d = det(sub);
    if (d != 0) {
      d = abs(d);
      g = g == 0 ? d : gcd(g, d);
    }
    return;
  }
  if (g == 1) return;
  const size_t cols = m[0].size();
  for (size_t c = next_col; c + (k - chosen.size()) <= cols; ++c) {
    chosen.push_back(c);
    minor_gcd_rec(m, c + 1, chosen, k, g);
    chosen.pop_back();
  }
}

}  // namespace

Int maximal_minor_gcd(const IntMat& m) {
  if (m.empty()) return 1;
  const size_t k = m.size();
  if (k > m[0].size()) throw std::invalid_argument("maximal_minor_gcd: rows > cols");
  Int g = 0;
  std::vector<size_t> chosen;
  minor_gcd_rec(m, 0, chosen, k, g);
  return g;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  if (m.empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  RatMat a(rows);
  for (size_t i = 0; i < rows; ++i) a[i] = RatMat::value_type(m[i].begin(), m[i].end());

  std::vector<long> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rat pv = a[r][c];
    for (size_t j = 0; j < cols; ++j) a[r][j] /= pv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_col[c] = static_cast<long>(r);
    ++r;
  }

  std::vector<std::vector<Int>> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rat> v(cols, 0);
    v[c] = 1;
    for (size_t j = 0; j < cols; ++j)
      if (pivot_of_col[j] >= 0) v[j] = -a[static_cast<size_t>(pivot_of_col[j])][c];
    Int denom = 1;
    for (const auto& x : v) denom = lcm(denom, Int(x.get_den()));
    std::vector<Int> w(cols);
    for (size_t j = 0; j < cols; ++j) {
      Rat s = v[j] * Rat(denom);
      w[j] = Int(s.get_num());
    }
    basis.push_back(primitive(std::move(w)));
  }
  return basis;
}

std::vector<Int> primitive(std::vector<Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

bool is_zero(const std::vector<Int>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool proportional(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return false;
  // cross-ratios must all vanish
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return !is_zero(a) && !is_zero(b);
}

bool positively_proportional(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (!proportional(a, b)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return (a[i] > 0) == (b[i] > 0);
  return false;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace contractions::linalg

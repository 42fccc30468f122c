#include "contractions/surfaces.hpp"

#include <regex>
#include <sstream>

namespace contractions::surf {

std::string SurfaceModel::str() const {
  switch (kind) {
    case Kind::ProjPlane:
      return "P2";
    case Kind::Hirzebruch:
      return "F" + std::to_string(r);
    case Kind::ConeS:
      return "S" + std::to_string(r);
  }
  return "?";
}

namespace {

std::string term(long c, const std::string& sym, bool leading) {
  std::ostringstream os;
  if (c == 0) return "";
  if (c < 0)
    os << "-";
  else if (!leading)
    os << "+";
  if (std::abs(c) != 1 || sym.empty()) os << std::abs(c);
  os << sym;
  return os.str();
}

}  // namespace

std::string DivisorClass::str() const {
  std::vector<std::string> syms;
  switch (surface.kind) {
    case Kind::ProjPlane:
      return "O(" + std::to_string(coeff[0]) + ")";
    case Kind::ConeS:
      return "O(" + std::to_string(coeff[0]) + ")";
    case Kind::Hirzebruch: {
      std::string s = term(coeff[0], "C0", true);
      s += term(coeff[1], "f", s.empty());
      return s.empty() ? "0" : s;
    }
  }
  return "?";
}

DivisorClass O_P2(long degree) { return {SurfaceModel::P2(), {degree}}; }
DivisorClass on_F(int r, long a, long b) { return {SurfaceModel::F(r), {a, b}}; }
DivisorClass O_S(int r, long m) { return {SurfaceModel::S(r), {m}}; }

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.surface == b.surface)) throw std::invalid_argument("divisor classes on different surfaces");
  DivisorClass out = a;
  for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
  return out;
}

DivisorClass operator*(long n, const DivisorClass& a) {
  DivisorClass out = a;
  for (auto& c : out.coeff) c *= n;
  return out;
}

namespace {

// pull a cone class m O(1) back to m(C0 + r f) on the resolution
DivisorClass resolve_cone_class(const DivisorClass& d) {
  return on_F(d.surface.r, d.coeff[0], d.coeff[0] * d.surface.r);
}

}  // namespace

long intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (!(d1.surface == d2.surface))
    throw std::invalid_argument("intersect: divisor classes on different surfaces");
  switch (d1.surface.kind) {
    case Kind::ProjPlane:
      return d1.coeff[0] * d2.coeff[0];
    case Kind::Hirzebruch: {
      // C0^2 = -r, C0.f = 1, f^2 = 0
      long a1 = d1.coeff[0], b1 = d1.coeff[1], a2 = d2.coeff[0], b2 = d2.coeff[1];
      return -static_cast<long>(d1.surface.r) * a1 * a2 + a1 * b2 + a2 * b1;
    }
    case Kind::ConeS:
      return intersect(resolve_cone_class(d1), resolve_cone_class(d2));
  }
  throw std::logic_error("unreachable");
}

DivisorClass canonical_class(const SurfaceModel& s) {
  switch (s.kind) {
    case Kind::ProjPlane:
      return O_P2(-3);
    case Kind::Hirzebruch:
      return on_F(s.r, -2, -(s.r + 2));
    case Kind::ConeS:
      throw std::domain_error("canonical class of the cone: work on the resolution F_r");
  }
  throw std::logic_error("unreachable");
}

bool is_effective(const SurfaceModel& s, const DivisorClass& d) {
  switch (s.kind) {
    case Kind::ProjPlane:
      return d.coeff[0] >= 0;
    case Kind::Hirzebruch:
      return d.coeff[0] >= 0 && d.coeff[1] >= 0;
    case Kind::ConeS:
      return d.coeff[0] >= 0;
  }
  return false;
}

long h0(const SurfaceModel& s, const DivisorClass& d) {
  switch (s.kind) {
    case Kind::ProjPlane: {
      long deg = d.coeff[0];
      if (deg < 0) throw std::domain_error("h0: class not effective");
      return to_long(binomial_dim(deg + 2, 2));
    }
    case Kind::ConeS:
      return h0(SurfaceModel::F(s.r), resolve_cone_class(d));
    case Kind::Hirzebruch: {
      long a = d.coeff[0], b = d.coeff[1];
      const long r = s.r;
      // strip the fixed component while D.C0 < 0
      while (a >= 0 && b - a * r < 0) --a;
      if (a < 0 || b < 0) throw std::domain_error("h0: class not effective after reduction");
      DivisorClass red = on_F(s.r, a, b);
      DivisorClass K = canonical_class(s);
      long dd = intersect(red, red);
      long dk = intersect(red, K);
      return 1 + (dd - dk) / 2;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_ample(const SurfaceModel& s, const DivisorClass& d) {
  switch (s.kind) {
    case Kind::ProjPlane:
      return d.coeff[0] >= 1;
    case Kind::Hirzebruch:
      // positive on both extremal curves C0 and f
      return d.coeff[0] >= 1 && d.coeff[1] - d.coeff[0] * static_cast<long>(s.r) >= 1;
    case Kind::ConeS:
      return d.coeff[0] >= 1;
  }
  return false;
}

long delta_genus(const SurfaceModel& s, const DivisorClass& l) {
  if (!is_ample(s, l)) throw std::domain_error("delta_genus: polarization not ample");
  return 2 + intersect(l, l) - h0(s, l);
}

long sectional_genus(const SurfaceModel& s, const DivisorClass& l) {
  if (!is_effective(s, l)) throw std::domain_error("sectional_genus: class not effective");
  if (s.kind == Kind::ConeS)
    return sectional_genus(SurfaceModel::F(s.r), resolve_cone_class(l));
  DivisorClass k = canonical_class(s);
  long v = intersect(k + l, l);
  return 1 + v / 2;
}

std::pair<SurfaceModel, DivisorClass> parse_polarized_surface(const std::string& text) {
  static const std::regex re_p2(R"(^\s*P2\s+O\((-?\d+)\)\s*$)");
  static const std::regex re_cone(R"(^\s*S\((\d+)\)\s+O\((-?\d+)\)\s*$)");
  static const std::regex re_f(R"(^\s*F\((\d+)\)\s+(.+?)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, re_p2)) {
    long d = std::stol(m[1]);
    return {SurfaceModel::P2(), O_P2(d)};
  }
  if (std::regex_match(text, m, re_cone)) {
    int r = std::stoi(m[1]);
    long d = std::stol(m[2]);
    return {SurfaceModel::S(r), O_S(r, d)};
  }
  if (std::regex_match(text, m, re_f)) {
    int r = std::stoi(m[1]);
    std::string cls = m[2];
    // forms like "C0+3f", "2C0+5f", "C0", "f", "3f", "-C0+2f"
    long a = 0, b = 0;
    size_t i = 0;
    bool any = false;
    while (i < cls.size()) {
      if (std::isspace(static_cast<unsigned char>(cls[i]))) {
        ++i;
        continue;
      }
      long sign = 1;
      if (cls[i] == '+' || cls[i] == '-') {
        if (cls[i] == '-') sign = -1;
        ++i;
      }
      long num = 1;
      bool had_digits = false;
      size_t j = i;
      while (j < cls.size() && std::isdigit(static_cast<unsigned char>(cls[j]))) ++j;
      if (j > i) {
        num = std::stol(cls.substr(i, j - i));
        had_digits = true;
        i = j;
      }
      if (cls.compare(i, 2, "C0") == 0) {
        a += sign * num;
        i += 2;
      } else if (i < cls.size() && cls[i] == 'f') {
        b += sign * num;
        i += 1;
      } else if (had_digits) {
        throw std::invalid_argument("cannot parse divisor class: " + cls);
      } else {
        throw std::invalid_argument("cannot parse divisor class: " + cls);
      }
      any = true;
    }
    if (!any) throw std::invalid_argument("cannot parse divisor class: " + cls);
    return {SurfaceModel::F(r), on_F(r, a, b)};
  }
  throw std::invalid_argument("cannot parse polarized surface: " + text);
}

}  // namespace contractions::surf

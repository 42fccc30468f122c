#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "contractions/rational.hpp"
#include "contractions/surfaces.hpp"

namespace contractions::bundles {

enum class QuadricKind { SmoothF0, ConeS2, TwoPlanes };

std::string quadric_name(QuadricKind k);

/// Rank-2 bundle identified by its Chern data. On P^2 both classes are
/// integers; on a quadric c1 is the total degree against O(1) (so c1^2
/// contributes 2 per unit of degree).
struct RankTwoBundle {
  std::variant<surf::SurfaceModel, QuadricKind> base;
  long c1 = 0;
  long c2 = 0;
  std::string tag;  // catalog name, e.g. "T(-1)", "O+O(1)", "spinor(1)"

  static RankTwoBundle on_p2(long c1, long c2, std::string tag = "");
  static RankTwoBundle on_quadric(QuadricKind k, long c1_degree, long c2, std::string tag = "");

  bool on_quadric_base() const { return std::holds_alternative<QuadricKind>(base); }
  long c1_squared() const;
  std::string base_name() const;
};

/// Rank 2 duality: c1 flips sign, c2 is unchanged.
RankTwoBundle dualize(const RankTwoBundle& e);

/// Second Segre class c1^2 - c2.
long segre2(const RankTwoBundle& e);

/// Euler characteristic of a rank-2 bundle on P^2: 2 + c1(c1+3)/2 - c2.
long chi_p2(long c1, long c2);

/// Section count for spanned rank-2 bundles on an irreducible quadric with
/// det = O(1): h^0 = 5 - c2, valid for c2 in {0, 1, 2}.
long quadric_h0(long c2);

struct SplittingType {
  std::vector<int> parts;  // nondecreasing

  explicit SplittingType(std::vector<int> p);
  bool operator==(const SplittingType& o) const { return parts == o.parts; }
  bool operator<(const SplittingType& o) const { return parts < o.parts; }
  std::string str() const;
};

/// All nondecreasing integer tuples of the given length and sum with every
/// part < strict_upper.
std::vector<SplittingType> enumerate_splittings(int rank, int degree_sum, int strict_upper);

/// Same with a lower bound instead: parts >= min_part.
std::vector<SplittingType> enumerate_splittings_min(int rank, int degree_sum, int min_part);

/// One row of the spanned-bundle table on P^2 with 0 <= c1 <= 2.
struct Table1Row {
  long c1;
  long c2;
  std::string bundle;
  std::string target;   // image of the section map
  long h0_independent;  // from the defining sequence, by line-bundle counting
};

const std::vector<Table1Row>& table1_rows();

struct Table1Check {
  Table1Row row;
  long chi;
  long s2;
  bool pass;
  std::string detail;
};

/// Per-row check: 0 <= c1 <= 2, c2 >= 0, s2 >= 0, chi == independent h0.
std::vector<Table1Check> verify_table1();

/// Multiplicity of the exceptional divisor along the fiber: c2 - 1 for the
/// divisorial plane conormals, 2 for irreducible quadric fibers. Throws for
/// bundles outside the divisorial catalog.
long blow_down_multiplicity(const RankTwoBundle& e);

/// Graded section dimensions dim H^0(S^k N*) for the conormal families with a
/// closed form.
struct GradedDims {
  std::vector<long> dims;  // index k = 0, 1, ...
};

struct ConormalDescriptor {
  enum class Family {
    SumOnP2,       // direct sum of O(a_i) on P^2
    SumOnF0,       // direct sum of O(a_i, b_i) on F_0
    QuotTrivP2,    // O^m / (O(-d_1) + ... ) on P^2, spanned quotient
    ConeOverQ3,    // vertex of the cone over the 3-dimensional quadric
  };
  Family family;
  std::vector<long> a;                    // SumOnP2 twists / QuotTriv m in a[0]
  std::vector<std::pair<long, long>> ab;  // SumOnF0 bidegrees
  std::vector<long> quot_twists;          // QuotTrivP2 subbundle twists d_j > 0

  static ConormalDescriptor sum_p2(std::vector<long> twists);
  static ConormalDescriptor sum_f0(std::vector<std::pair<long, long>> bidegrees);
  static ConormalDescriptor quotient_trivial_p2(long m, std::vector<long> twists);
  static ConormalDescriptor cone_over_q3();

  /// Parses "P2:O(1)+O(1)", "F0:O(1,0)+O(0,1)", "P2:O^4/O(-1)^2",
  /// "P2:O^3/O(-2)", "Q3cone", "OO".
  static ConormalDescriptor parse(const std::string& text);
  std::string str() const;
};

GradedDims graded_dims(const ConormalDescriptor& spec, int k_max);

struct CastelnuovoVerdict {
  enum class Kind { SmoothOfDim, Hypersurface, Fails } kind;
  int r = 0;
  int hypersurface_degree = 0;  // set for Hypersurface
  int fail_k = -1;              // first discrepancy for Fails
  long expected = 0, got = 0;
  std::string str() const;
};

/// Compares the graded dimensions against a truncated power series ring in r
/// variables (smooth point) or such a ring modulo one form (hypersurface).
CastelnuovoVerdict castelnuovo_test(const GradedDims& g, int r);

}  // namespace contractions::bundles

#include "contractions/catalog.hpp"

#include <json.hpp>

namespace contractions::bundles {

std::string provenance_name(Provenance p) {
  return p == Provenance::Derived ? "derived" : "catalog";
}

const std::vector<ConormalRecord>& conormal_catalog() {
  static const std::vector<ConormalRecord> cat = {
      {"flip", "P2", "O(1)+O(1)", RankTwoBundle::on_p2(2, 1, "O(1)+O(1)"), false, std::nullopt,
       "small contraction; the flip exists", "-", "-", std::string("P2:O(1)+O(1)"),
       Provenance::Catalog, "introduction theorem"},
      {"quadric-cone-Z", "P2", "T(-1)+O(1)/O", RankTwoBundle::on_p2(2, 2, "T(-1)+O(1)/O"), true, 1,
       "cone over Q3 (quadric cone in C^5)", "smooth", "-", std::string("Q3cone"),
       Provenance::Derived, "introduction theorem; Prop. 6.3(a)"},
      {"twisted-cubic-S", "P2", "O^4/O(-1)^2", RankTwoBundle::on_p2(2, 3, "O^4/O(-1)^2"), true, 2,
       "smooth", "cone over a rational twisted cubic", "-", std::string("P2:O^4/O(-1)^2"),
       Provenance::Derived, "introduction theorem; Prop. 6.3(b)"},
      {"two-lines-S", "F0", "spinor(1)",
       RankTwoBundle::on_quadric(QuadricKind::SmoothF0, 1, 1, "spinor(1)"), true, 2, "smooth",
       "two transversal planes meeting at the point",
       "(x0*x2, x0*x3, x1*x2, x1*x3)", std::string("F0:O(1,0)+O(0,1)"), Provenance::Derived,
       "introduction tables; Prop. 6.4"},
      {"double-line-S", "S2", "spinor(1)",
       RankTwoBundle::on_quadric(QuadricKind::ConeS2, 1, 1, "spinor(1)"), true, 2, "smooth",
       "non-normal along a double line", "five cubics; tangent cone a double line",
       std::nullopt, Provenance::Catalog, "introduction tables; Prop. 6.4"},
      {"reducible-quadric-S", "P2uP2", "T(-1) u (O+O(1))",
       RankTwoBundle::on_quadric(QuadricKind::TwoPlanes, 1, 1, "spinor(1)"), true, std::nullopt,
       "smooth", "non-normal (rational cubic image)", "six quartics (no explicit generators)",
       std::nullopt, Provenance::Catalog, "introduction tables; Prop. 6.4, 6.9"},
  };
  return cat;
}

int catalog_version() { return 1; }

std::string catalog_to_json() {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& r : conormal_catalog()) {
    nlohmann::json e;
    e["id"] = r.id;
    e["fiber"] = r.fiber;
    e["conormal"] = r.conormal;
    e["base"] = r.bundle.base_name();
    e["c1"] = r.bundle.c1;
    e["c2"] = r.bundle.c2;
    e["s2"] = segre2(r.bundle);
    e["divisorial"] = r.divisorial;
    if (r.multiplicity)
      e["multiplicity"] = *r.multiplicity;
    else
      e["multiplicity"] = nullptr;
    e["sing_Z"] = r.sing_z;
    e["sing_S"] = r.sing_s;
    e["ideal_shape"] = r.ideal_shape;
    if (r.graded)
      e["graded_descriptor"] = *r.graded;
    else
      e["graded_descriptor"] = nullptr;
    e["sing_Z_provenance"] = provenance_name(r.sing_z_prov);
    e["cite"] = r.cite;
    entries.push_back(std::move(e));
  }
  nlohmann::json root;
  root["version"] = catalog_version();
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

}  // namespace contractions::bundles

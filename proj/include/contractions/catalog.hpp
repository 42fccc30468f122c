#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contractions/bundles.hpp"

namespace contractions::bundles {

enum class Provenance { Derived, Catalog };

std::string provenance_name(Provenance p);

/// One admissible isolated two-dimensional fiber of a birational contraction
/// of a smooth 4-fold, with its conormal data and the induced singularities.
struct ConormalRecord {
  std::string id;
  std::string fiber;       // "P2", "F0", "S2", "P2uP2"
  std::string conormal;    // catalog name of N*
  RankTwoBundle bundle;    // Chern data of the conormal
  bool divisorial = true;  // false for the small/flip case
  std::optional<long> multiplicity;      // of E along the fiber, when divisorial
  std::string sing_z;                    // singularity of the target at the point
  std::string sing_s;                    // singularity of the image surface
  std::string ideal_shape;               // local ideal of the image surface, if known
  std::optional<std::string> graded;     // conormal descriptor when a closed form exists
  Provenance sing_z_prov = Provenance::Catalog;
  std::string cite;
};

const std::vector<ConormalRecord>& conormal_catalog();

/// Version tag of the serialized catalog shipped with the repository.
int catalog_version();

std::string catalog_to_json();

}  // namespace contractions::bundles

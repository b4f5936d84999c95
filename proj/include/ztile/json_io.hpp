#pragma once

#include <string>

#include "ztile/structure.hpp"
#include "ztile/tiling.hpp"

#include <json.hpp>

namespace ztile {

// Certificate wire format:
//   { "tile": [...], "complement_residues": [...], "period": n,
//     "spectrum": [...], "conditions": {"t1": bool, "t2": bool} }
// spectrum and conditions are derived from the tile on output and ignored on
// input beyond presence checks.
nlohmann::json certificate_to_json(const TilingCertificate& cert);
TilingCertificate certificate_from_json(const nlohmann::json& j);

// Family export: spectrum header plus the tile array.
nlohmann::json family_to_json(const TileFamily& fam);

}  // namespace ztile

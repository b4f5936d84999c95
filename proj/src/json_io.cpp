#include "ztile/json_io.hpp"

#include <stdexcept>

namespace ztile {

using nlohmann::json;

json certificate_to_json(const TilingCertificate& cert) {
    const Spectrum S = cyclotomic_divisors(cert.tile);
    const ConditionReport cond = check_t2(cert.tile, S);
    json j;
    j["tile"] = cert.tile.elements();
    j["complement_residues"] = cert.complement_residues.elements();
    j["period"] = cert.period;
    j["spectrum"] = S.prime_powers;
    j["conditions"] = {{"t1", cond.t1}, {"t2", cond.t2}};
    return j;
}

TilingCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tile") || !j.contains("complement_residues") ||
        !j.contains("period"))
        throw std::invalid_argument(
            "certificate: expected object with tile, complement_residues, period");
    TileSet tile(j.at("tile").get<std::vector<std::int64_t>>());
    TileSet comp(j.at("complement_residues").get<std::vector<std::int64_t>>());
    const auto period = j.at("period").get<std::int64_t>();
    if (period < 1) throw std::invalid_argument("certificate: period must be >= 1");
    return TilingCertificate{std::move(tile), std::move(comp), period};
}

json family_to_json(const TileFamily& fam) {
    json tiles = json::array();
    for (const TileSet& t : fam.tiles) tiles.push_back(t.elements());
    json j;
    j["spectrum"] = fam.spectrum;
    j["lcm"] = fam.modulus;
    j["count"] = fam.tiles.size();
    j["tiles"] = std::move(tiles);
    return j;
}

}  // namespace ztile

#include "kch/dga/dga_json.hpp"

namespace kch {

nlohmann::json dga_to_json(const DGA &d) {
    nlohmann::json j;
    j["ring"] = {{"vars", d.ring->vars},
                 {"mode", d.ring->mode == AlgebraMode::Commuted ? "commuted" : "noncommutative"},
                 {"u_nonnegative", d.ring->u_nonnegative}};
    j["braid"] = d.braid.to_string();
    j["strands"] = d.braid.strands();
    j["variant"] = variant_name(d.mode.variant);
    j["star"] = d.mode.star == StarStrand::Low0 ? "0" : "n+1";
    auto gens = nlohmann::json::array();
    auto diffs = nlohmann::json::array();
    for (const auto &g : d.generators) {
        gens.push_back({{"name", g.name()}, {"degree", g.degree}});
        diffs.push_back({{"generator", g.name()}, {"image", d.d(g.letter).to_string()}});
    }
    j["generators"] = std::move(gens);
    j["differential"] = std::move(diffs);
    return j;
}

} // namespace kch

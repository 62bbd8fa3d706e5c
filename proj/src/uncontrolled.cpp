#include "asd/uncontrolled.hpp"

#include <cstdio>

namespace asd {

ConfigCheck validate(const AutoConfig& cfg) {
    ConfigCheck check;
    if (!(cfg.cell_radius > 0.0))
        check.errors.push_back("cell_radius must be > 0");
    if (cfg.max_layers < 2)
        check.errors.push_back("max_layers must be at least 2");
    if (cfg.total_nodes < 1)
        check.errors.push_back("total_nodes must be at least 1");
    else if (cfg.total_nodes < 2)
        check.errors.push_back(
            "total_nodes must be at least 2 (at least two layers are drawn)");
    else if (cfg.total_nodes < cfg.max_layers)
        check.warnings.push_back(
            "total_nodes below max_layers: realizations drawing more layers "
            "than nodes will fail");
    return check;
}

void require_valid(const AutoConfig& cfg) {
    const auto check = validate(cfg);
    if (check.ok()) return;
    std::string msg = "invalid auto config:";
    for (const auto& e : check.errors) msg += " " + e + ";";
    throw ValidationError(msg);
}

NodeSplit split_nodes(std::uint64_t total_nodes, std::uint32_t layers) {
    if (layers < 1)
        throw ValidationError("layer count must be at least 1");
    if (total_nodes < 1)
        throw ValidationError("total_nodes must be at least 1");
    NodeSplit s;
    s.outer = total_nodes / layers;
    if (s.outer == 0)
        throw ValidationError("fewer nodes than layers: "
                              + std::to_string(total_nodes) + " nodes over "
                              + std::to_string(layers) + " layers");
    s.inner = total_nodes - (layers - 1) * s.outer;
    return s;
}

AutoRealization deploy_auto(const AutoConfig& cfg, std::uint64_t seed) {
    require_valid(cfg);

    AutoRealization out;
    SeededRng rng(seed);

    out.layer_count = draw_layer_count(cfg.max_layers, rng);
    out.split = split_nodes(cfg.total_nodes, out.layer_count); // may throw
    out.layer_radii = draw_layer_radii(cfg.cell_radius, out.layer_count, rng);

    char meta[96];
    std::snprintf(meta, sizeof(meta), "auto:L=%.17g,max_layers=%u,n=%llu",
                  cfg.cell_radius, cfg.max_layers,
                  static_cast<unsigned long long>(cfg.total_nodes));
    out.deployment.seed = seed;
    out.deployment.meta = meta;
    out.deployment.points.reserve(cfg.total_nodes);
    out.deployment.tags.reserve(cfg.total_nodes);

    double inner_radius = 0.0;
    for (std::uint32_t i = 0; i < out.layer_count; ++i) {
        const RingSector ring{inner_radius, out.layer_radii[i], 0.0, kTwoPi};
        const std::uint64_t n = (i == 0) ? out.split.inner : out.split.outer;
        const SectorTag tag{i, 0};
        for (std::uint64_t m = 0; m < n; ++m) {
            out.deployment.points.push_back(sample_point(ring, rng));
            out.deployment.tags.push_back(tag);
        }
        inner_radius = out.layer_radii[i];
    }
    return out;
}

} // namespace asd

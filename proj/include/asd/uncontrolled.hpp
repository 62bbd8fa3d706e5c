#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "asd/deployment.hpp"
#include "asd/errors.hpp"
#include "asd/rng.hpp"

namespace asd {

/// Inputs to automatic deployment: only the cell radius, the layer-count
/// ceiling, and the node budget. Everything else is drawn.
struct AutoConfig {
    double cell_radius = 1.0;      ///< > 0
    std::uint32_t max_layers = 2;  ///< >= 2
    std::uint64_t total_nodes = 1; ///< >= 1
};

struct ConfigCheck {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

ConfigCheck validate(const AutoConfig& cfg);
void require_valid(const AutoConfig& cfg);

/// Equal-split node allocation: every layer gets floor(total/layers) nodes
/// and the innermost absorbs the remainder on top.
struct NodeSplit {
    std::uint64_t inner = 0; ///< innermost-layer count (>= outer)
    std::uint64_t outer = 0; ///< every other layer's count
};

/// Throws ValidationError when total < layers (outer share would be zero).
NodeSplit split_nodes(std::uint64_t total_nodes, std::uint32_t layers);

/// Layer count ~ discrete uniform on {2, ..., max_layers}, one draw.
/// Implemented as an affine-floor map of a single (0,1) draw, which has
/// exactly the uniform PMF 1/(max_layers-1) per value; max_layers == 2
/// yields 2 with certainty.
template <UniformSource R>
std::uint32_t draw_layer_count(std::uint32_t max_layers, R& rng) {
    if (max_layers < 2)
        throw ValidationError("max_layers must be at least 2");
    const double u = rng.next_unit();
    const std::uint32_t span = max_layers - 1;
    auto k = static_cast<std::uint32_t>(u * span);
    if (k >= span) k = span - 1; // float edge guard; u < 1 in exact math
    return 2 + k;
}

/// Layer boundary radii: layers-1 draws uniform on (0, cell_radius), sorted
/// ascending, then the cell radius appended. Colliding values (possible only
/// through floating-point coincidence) are re-drawn until distinct, which
/// perturbs the stream by the extra draws.
template <UniformSource R>
std::vector<double> draw_layer_radii(double cell_radius, std::uint32_t layers,
                                     R& rng) {
    if (!(cell_radius > 0.0))
        throw ValidationError("cell_radius must be > 0");
    if (layers < 2)
        throw ValidationError("layer count must be at least 2");
    std::vector<double> radii(layers - 1);
    for (auto& r : radii) r = rng.next_unit() * cell_radius;
    radii.push_back(cell_radius);
    std::sort(radii.begin(), radii.end());
    for (std::size_t i = 0; i + 1 < radii.size();) {
        if (radii[i] == radii[i + 1]) {
            radii[i] = rng.next_unit() * cell_radius;
            std::sort(radii.begin(), radii.end());
            i = 0;
            continue;
        }
        ++i;
    }
    return radii;
}

/// One automatic realization: the drawn layer structure plus the deployment.
struct AutoRealization {
    std::uint32_t layer_count = 0;
    std::vector<double> layer_radii; ///< ascending, last == cell_radius
    NodeSplit split;
    Deployment deployment;
};

/// Automatic inhomogeneous deployment. Draw order is fixed: layer count,
/// then the layer radii, then per layer (inside-out) two draws per node.
/// Every layer is a full ring; the innermost holds split.inner nodes and
/// each other layer split.outer. Pure function of (cfg, seed).
AutoRealization deploy_auto(const AutoConfig& cfg, std::uint64_t seed);

} // namespace asd

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "asd/geometry.hpp"

namespace asd {

/// One concentric layer of a controlled plan. `sector_bounds` holds the
/// interior split angles (strictly increasing, in (0, 2*pi)); the first
/// sector always starts at 0 and the last always ends at 2*pi, so a layer
/// with no bounds is a single full ring. `sector_counts` has one entry per
/// sector, i.e. bounds + 1.
struct LayerSpec {
    double outer_radius = 0.0;
    std::vector<double> sector_bounds;
    std::vector<std::uint64_t> sector_counts;

    std::size_t sector_count() const { return sector_bounds.size() + 1; }
};

/// Full controlled-deployment specification: layers ordered inside-out with
/// strictly increasing outer radii.
struct NetworkPlan {
    std::vector<LayerSpec> layers;

    std::size_t layer_count() const { return layers.size(); }
    std::uint64_t total_nodes() const;
    std::size_t total_sectors() const;

    /// Largest sector count over layers.
    std::size_t max_sectors_per_layer() const;
    /// Smallest layer index achieving max_sectors_per_layer(). The maximum
    /// need not be unique; we expose the first.
    std::size_t widest_layer() const;
};

/// Validation outcome. `errors` lists every violated invariant with layer /
/// sector coordinates; `warnings` flags legal-but-suspicious content
/// (currently: zero node count for a sector).
struct PlanCheck {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool ok() const { return errors.empty(); }
};

PlanCheck validate(const NetworkPlan& plan);

/// Throws ValidationError listing every violation if the plan is invalid.
void require_valid(const NetworkPlan& plan);

/// One cluster of the plan flattened to generation order.
struct PlannedSector {
    RingSector sector;
    std::uint64_t count = 0;
    std::size_t layer = 0; ///< 0-based layer index
    std::size_t slot = 0;  ///< 0-based sector index within the layer
};

/// Flatten the plan layer-major: layer i spans radii (r_{i-1}, r_i] with
/// r_0 = 0; sector j spans (previous bound or 0, next bound or 2*pi].
/// Sector areas partition the full disk of the outermost radius.
std::vector<PlannedSector> to_sectors(const NetworkPlan& plan);

/// Per-sector number densities count/area, in to_sectors order.
std::vector<double> sector_densities(const NetworkPlan& plan);

/// Parse the UTF-8 JSON plan format. Angles may be numbers (radians) or
/// pi-rational strings "(k)?pi(/m)?" such as "pi/3" or "25pi/18".
/// Throws ParseError (malformed content) or ValidationError (invalid plan).
NetworkPlan load_plan(std::string_view text);

/// Canonical writer: sorted keys, floats at 17 significant digits, two-space
/// indent. save -> load -> save is byte identity.
std::string save_plan(const NetworkPlan& plan);

/// "kpi/m" -> k*pi/m. Throws ParseError on anything else.
double parse_pi_rational(std::string_view text);

/// Import the zero-padded matrix layout [R | Theta | N] (n_L x 2*gamma).
/// Zeros in the Theta block are only legal as trailing padding; counts must
/// be non-negative integers. Throws ValidationError / ParseError.
NetworkPlan plan_from_padded_matrix(const std::vector<std::vector<double>>& m);

/// Inverse of plan_from_padded_matrix.
std::vector<std::vector<double>> padded_matrix_from_plan(const NetworkPlan& plan);

/// FNV-1a over the canonical plan text; stable identity for manifests.
std::uint64_t plan_fingerprint(const NetworkPlan& plan);

} // namespace asd

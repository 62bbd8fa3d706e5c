#pragma once

#include <cstdint>

#include "asd/deployment.hpp"
#include "asd/plan.hpp"

namespace asd {

/// Controlled inhomogeneous deployment: walk the plan layer-major and
/// sector-minor, drawing every sector's nodes from one serial rng stream
/// (radius then angle per point). Pure function of (plan, seed); returns
/// exactly plan.total_nodes() points tagged with their sector.
Deployment deploy_controlled(const NetworkPlan& plan, std::uint64_t seed);

} // namespace asd

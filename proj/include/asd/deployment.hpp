#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asd/geometry.hpp"

namespace asd {

/// Which cluster a generated point belongs to (0-based indices).
struct SectorTag {
    std::uint32_t layer = 0;
    std::uint32_t sector = 0;

    bool operator==(const SectorTag&) const = default;
};

/// Generated point set plus provenance. Points are kept in generation
/// order; tags form contiguous runs per sector.
struct Deployment {
    std::vector<Point2D> points;
    std::vector<SectorTag> tags;
    std::uint64_t seed = 0;
    std::string meta; ///< plan fingerprint or auto-config echo
};

} // namespace asd

#include "asd/controlled.hpp"

#include <cstdio>

#include "asd/rng.hpp"

namespace asd {

Deployment deploy_controlled(const NetworkPlan& plan, std::uint64_t seed) {
    const auto sectors = to_sectors(plan); // validates

    Deployment d;
    d.seed = seed;
    const std::uint64_t total = plan.total_nodes();
    d.points.reserve(total);
    d.tags.reserve(total);

    char meta[32];
    std::snprintf(meta, sizeof(meta), "plan:%016llx",
                  static_cast<unsigned long long>(plan_fingerprint(plan)));
    d.meta = meta;

    SeededRng rng(seed);
    for (const auto& ps : sectors) {
        const SectorTag tag{static_cast<std::uint32_t>(ps.layer),
                            static_cast<std::uint32_t>(ps.slot)};
        for (std::uint64_t m = 0; m < ps.count; ++m) {
            d.points.push_back(sample_point(ps.sector, rng));
            d.tags.push_back(tag);
        }
    }
    return d;
}

} // namespace asd

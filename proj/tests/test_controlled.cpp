#include "doctest.h"

#include <cmath>
#include <map>

#include "asd/controlled.hpp"
#include "asd/rng.hpp"
#include "support/fixtures.hpp"

using namespace asd;
using testfix::six_sector_plan;
using testfix::ten_sector_plan;

namespace {

std::vector<std::uint64_t> per_sector_counts(const Deployment& d,
                                             std::size_t sectors,
                                             const NetworkPlan& plan) {
    // map (layer, slot) -> flat index in to_sectors order
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
    std::size_t flat = 0;
    for (const auto& ps : to_sectors(plan))
        index[{static_cast<std::uint32_t>(ps.layer),
               static_cast<std::uint32_t>(ps.slot)}] = flat++;
    std::vector<std::uint64_t> counts(sectors, 0);
    for (const auto& tag : d.tags) ++counts[index.at({tag.layer, tag.sector})];
    return counts;
}

} // namespace

TEST_CASE("deploy_controlled: exact per-sector counts") {
    const NetworkPlan p6 = six_sector_plan();
    const Deployment d6 = deploy_controlled(p6, 42);
    CHECK(d6.points.size() == 3300);
    CHECK(d6.tags.size() == 3300);
    const auto c6 = per_sector_counts(d6, 6, p6);
    const std::vector<std::uint64_t> want6{100, 800, 1000, 300, 500, 600};
    CHECK(c6 == want6);

    const NetworkPlan p10 = ten_sector_plan();
    const Deployment d10 = deploy_controlled(p10, 42);
    CHECK(d10.points.size() == 3300);
    const auto c10 = per_sector_counts(d10, 10, p10);
    const std::vector<std::uint64_t> want10{100, 500, 400, 200, 200,
                                            1000, 500, 100, 200, 100};
    CHECK(c10 == want10);
}

TEST_CASE("deploy_controlled: single-point single-disk plan") {
    NetworkPlan plan;
    plan.layers.push_back({1.0, {}, {1}});
    for (std::uint64_t seed : {0ULL, 7ULL, 123456789ULL}) {
        const Deployment d = deploy_controlled(plan, seed);
        REQUIRE(d.points.size() == 1);
        CHECK(std::hypot(d.points[0].x, d.points[0].y) <= 1.0);
    }
}

TEST_CASE("deploy_controlled: every point in its tagged sector") {
    for (const NetworkPlan& plan : {six_sector_plan(), ten_sector_plan()}) {
        const auto sectors = to_sectors(plan);
        const Deployment d = deploy_controlled(plan, 1234);
        for (std::size_t k = 0; k < d.points.size(); ++k) {
            const auto& tag = d.tags[k];
            bool found = false;
            for (const auto& ps : sectors) {
                if (ps.layer == tag.layer && ps.slot == tag.sector) {
                    CHECK(sector_contains(ps.sector, d.points[k], 1e-12));
                    found = true;
                    break;
                }
            }
            REQUIRE(found);
        }
    }
}

TEST_CASE("deploy_controlled: tags form contiguous runs in generation order") {
    const Deployment d = deploy_controlled(ten_sector_plan(), 5);
    std::vector<SectorTag> seen;
    for (const auto& tag : d.tags) {
        if (seen.empty() || !(seen.back() == tag)) {
            for (const auto& old : seen) CHECK_FALSE(old == tag);
            seen.push_back(tag);
        }
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("deploy_controlled: deterministic and equal to the serial reference") {
    const NetworkPlan plan = six_sector_plan();
    const Deployment a = deploy_controlled(plan, 777);
    const Deployment b = deploy_controlled(plan, 777);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }

    // reference semantics: one serial stream, radius then angle per point,
    // sectors walked layer-major
    SeededRng rng(777);
    std::size_t k = 0;
    for (const auto& ps : to_sectors(plan)) {
        for (std::uint64_t m = 0; m < ps.count; ++m, ++k) {
            const Point2D p = sample_point(ps.sector, rng);
            CHECK(p.x == a.points[k].x);
            CHECK(p.y == a.points[k].y);
        }
    }
    CHECK(rng.draws_consumed() == 2 * a.points.size());

    const Deployment c = deploy_controlled(plan, 778);
    CHECK(c.points[0].x != a.points[0].x);
}

TEST_CASE("deploy_controlled: rejects invalid plans") {
    NetworkPlan bad;
    bad.layers.push_back({2.0, {}, {10}});
    bad.layers.push_back({1.0, {}, {10}});
    CHECK_THROWS_AS(deploy_controlled(bad, 1), ValidationError);
}

TEST_CASE("deploy_controlled: count conservation across random plans") {
    SeededRng meta(2718);
    for (int iter = 0; iter < 30; ++iter) {
        NetworkPlan plan;
        const int layers = 1 + static_cast<int>(meta.next_unit() * 4);
        double radius = 0.0;
        std::uint64_t total = 0;
        for (int i = 0; i < layers; ++i) {
            radius += 0.3 + meta.next_unit() * 2.0;
            LayerSpec layer;
            layer.outer_radius = radius;
            if (meta.next_unit() < 0.5)
                layer.sector_bounds = {kPi / 2 + meta.next_unit(), kPi + 2.0};
            for (std::size_t c = 0; c < layer.sector_bounds.size() + 1; ++c) {
                const auto n = static_cast<std::uint64_t>(meta.next_unit() * 200);
                layer.sector_counts.push_back(n);
                total += n;
            }
            plan.layers.push_back(std::move(layer));
        }
        if (total == 0) continue;
        const Deployment d = deploy_controlled(plan, 1000 + iter);
        CHECK(d.points.size() == total);
    }
}

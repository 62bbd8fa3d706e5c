// Shared test fixtures: the two worked example plans and a scripted rng.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asd/geometry.hpp"
#include "asd/plan.hpp"

namespace testfix {

/// True when f() throws E whose message contains `needle`.
template <typename E, typename F>
bool throws_with(F&& f, std::string_view needle) {
    try {
        f();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

/// Replays a fixed sequence of "uniform" draws; wraps around when spent.
struct ScriptedRng {
    std::vector<double> values;
    std::size_t pos = 0;

    double next_unit() {
        const double v = values[pos % values.size()];
        ++pos;
        return v;
    }
};

/// 3-layer, 6-sector example plan (3300 nodes).
inline asd::NetworkPlan six_sector_plan() {
    asd::NetworkPlan plan;
    plan.layers.push_back({1.0, {}, {100}});
    plan.layers.push_back(
        {2.0, {asd::kPi / 3.0, asd::kPi, 4.0 * asd::kPi / 3.0},
         {800, 1000, 300, 500}});
    plan.layers.push_back({3.5, {}, {600}});
    return plan;
}

/// 4-layer, 10-sector example plan (3300 nodes).
inline asd::NetworkPlan ten_sector_plan() {
    asd::NetworkPlan plan;
    plan.layers.push_back({0.5, {}, {100}});
    plan.layers.push_back(
        {1.3, {5.0 * asd::kPi / 9.0, 14.0 * asd::kPi / 9.0}, {500, 400, 200}});
    plan.layers.push_back(
        {2.9,
         {asd::kPi / 6.0, 25.0 * asd::kPi / 18.0, 16.0 * asd::kPi / 9.0},
         {200, 1000, 500, 100}});
    plan.layers.push_back({3.5, {asd::kPi}, {200, 100}});
    return plan;
}

} // namespace testfix

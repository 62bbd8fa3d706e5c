#include "asd/plan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace asd {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string at(std::size_t layer) {
    return "layers[" + std::to_string(layer) + "]";
}

std::string at(std::size_t layer, std::size_t idx, const char* field) {
    return at(layer) + "." + field + "[" + std::to_string(idx) + "]";
}

} // namespace

std::uint64_t NetworkPlan::total_nodes() const {
    std::uint64_t n = 0;
    for (const auto& l : layers)
        for (auto c : l.sector_counts) n += c;
    return n;
}

std::size_t NetworkPlan::total_sectors() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.sector_count();
    return n;
}

std::size_t NetworkPlan::max_sectors_per_layer() const {
    std::size_t g = 0;
    for (const auto& l : layers) g = std::max(g, l.sector_count());
    return g;
}

std::size_t NetworkPlan::widest_layer() const {
    const std::size_t g = max_sectors_per_layer();
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (layers[i].sector_count() == g) return i;
    return 0;
}

PlanCheck validate(const NetworkPlan& plan) {
    PlanCheck check;
    auto err = [&](std::string m) { check.errors.push_back(std::move(m)); };

    if (plan.layers.empty()) {
        err("plan has no layers");
        return check;
    }

    double prev_radius = 0.0;
    for (std::size_t i = 0; i < plan.layers.size(); ++i) {
        const auto& layer = plan.layers[i];
        if (!(layer.outer_radius > prev_radius))
            err(at(i) + ": radii not strictly increasing ("
                + fmt17(layer.outer_radius) + " after " + fmt17(prev_radius) + ")");
        prev_radius = layer.outer_radius;

        double prev_bound = 0.0;
        for (std::size_t j = 0; j < layer.sector_bounds.size(); ++j) {
            const double b = layer.sector_bounds[j];
            if (!(b > prev_bound))
                err(at(i, j, "sector_bounds")
                    + ": bounds not strictly increasing within (0, 2*pi)");
            if (!(b < kTwoPi))
                err(at(i, j, "sector_bounds") + ": bound must be < 2*pi, got "
                    + fmt17(b));
            prev_bound = b;
        }

        if (layer.sector_counts.size() != layer.sector_count())
            err(at(i) + ": sector_counts has " + std::to_string(layer.sector_counts.size())
                + " entries, expected " + std::to_string(layer.sector_count()));
        for (std::size_t j = 0; j < layer.sector_counts.size(); ++j)
            if (layer.sector_counts[j] == 0)
                check.warnings.push_back(at(i, j, "sector_counts")
                                         + ": sector planned with zero nodes");
    }

    if (check.errors.empty() && plan.total_nodes() == 0)
        err("plan deploys zero nodes in total");
    return check;
}

void require_valid(const NetworkPlan& plan) {
    const auto check = validate(plan);
    if (check.ok()) return;
    std::string msg = "invalid plan:";
    for (const auto& e : check.errors) msg += " " + e + ";";
    throw ValidationError(msg);
}

std::vector<PlannedSector> to_sectors(const NetworkPlan& plan) {
    require_valid(plan);
    std::vector<PlannedSector> out;
    out.reserve(plan.total_sectors());
    double inner = 0.0;
    for (std::size_t i = 0; i < plan.layers.size(); ++i) {
        const auto& layer = plan.layers[i];
        for (std::size_t j = 0; j < layer.sector_count(); ++j) {
            const double a_lo = (j == 0) ? 0.0 : layer.sector_bounds[j - 1];
            const double a_hi = (j == layer.sector_bounds.size())
                                    ? kTwoPi
                                    : layer.sector_bounds[j];
            out.push_back(PlannedSector{
                RingSector{inner, layer.outer_radius, a_lo, a_hi},
                layer.sector_counts[j], i, j});
        }
        inner = layer.outer_radius;
    }
    return out;
}

std::vector<double> sector_densities(const NetworkPlan& plan) {
    std::vector<double> out;
    for (const auto& ps : to_sectors(plan))
        out.push_back(static_cast<double>(ps.count) / sector_area(ps.sector));
    return out;
}

double parse_pi_rational(std::string_view text) {
    // Grammar: (k)?pi(/m)? with positive integers k, m.
    std::size_t pos = 0;
    std::uint64_t k = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
        if (ec != std::errc{})
            throw ParseError("bad pi-rational '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (text.substr(pos, 2) != "pi")
        throw ParseError("bad pi-rational '" + std::string(text) + "'");
    pos += 2;
    std::uint64_t m = 1;
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw ParseError("bad pi-rational '" + std::string(text) + "'");
        ++pos;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), m);
        if (ec != std::errc{} || ptr != text.data() + text.size() || m == 0)
            throw ParseError("bad pi-rational '" + std::string(text) + "'");
    }
    return static_cast<double>(k) * kPi / static_cast<double>(m);
}

namespace {

double angle_from_json(const nlohmann::json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return parse_pi_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected number or pi-rational string");
}

} // namespace

NetworkPlan load_plan(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("plan parse error: ") + e.what());
    }

    if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array())
        throw ParseError("plan must be an object with a \"layers\" array");

    NetworkPlan plan;
    const auto& layers = doc["layers"];
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& jl = layers[i];
        if (!jl.is_object())
            throw ParseError(at(i) + ": expected object");
        LayerSpec layer;

        if (!jl.contains("outer_radius") || !jl["outer_radius"].is_number())
            throw ParseError(at(i) + ".outer_radius: expected number");
        layer.outer_radius = jl["outer_radius"].get<double>();

        if (!jl.contains("sector_bounds") || !jl["sector_bounds"].is_array())
            throw ParseError(at(i) + ".sector_bounds: expected array");
        const auto& jb = jl["sector_bounds"];
        for (std::size_t j = 0; j < jb.size(); ++j)
            layer.sector_bounds.push_back(
                angle_from_json(jb[j], at(i, j, "sector_bounds")));

        if (!jl.contains("sector_counts") || !jl["sector_counts"].is_array())
            throw ParseError(at(i) + ".sector_counts: expected array");
        const auto& jc = jl["sector_counts"];
        for (std::size_t j = 0; j < jc.size(); ++j) {
            if (!jc[j].is_number_integer() || jc[j].get<std::int64_t>() < 0)
                throw ParseError(at(i, j, "sector_counts")
                                 + ": expected non-negative integer");
            layer.sector_counts.push_back(jc[j].get<std::uint64_t>());
        }
        plan.layers.push_back(std::move(layer));
    }

    require_valid(plan);
    return plan;
}

std::string save_plan(const NetworkPlan& plan) {
    // Hand-rolled so the canonical form is pinned: sorted keys, %.17g floats.
    std::string out = "{\n  \"layers\": [";
    for (std::size_t i = 0; i < plan.layers.size(); ++i) {
        const auto& l = plan.layers[i];
        out += (i == 0) ? "\n" : ",\n";
        out += "    {\n      \"outer_radius\": " + fmt17(l.outer_radius) + ",\n";
        out += "      \"sector_bounds\": [";
        for (std::size_t j = 0; j < l.sector_bounds.size(); ++j) {
            if (j) out += ", ";
            out += fmt17(l.sector_bounds[j]);
        }
        out += "],\n      \"sector_counts\": [";
        for (std::size_t j = 0; j < l.sector_counts.size(); ++j) {
            if (j) out += ", ";
            out += std::to_string(l.sector_counts[j]);
        }
        out += "]\n    }";
    }
    out += "\n  ]\n}\n";
    return out;
}

NetworkPlan plan_from_padded_matrix(const std::vector<std::vector<double>>& m) {
    if (m.empty())
        throw ValidationError("plan matrix has no rows");
    const std::size_t cols = m[0].size();
    if (cols < 2 || cols % 2 != 0)
        throw ValidationError("plan matrix must have an even column count >= 2");
    const std::size_t gamma = cols / 2;

    NetworkPlan plan;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& row = m[i];
        if (row.size() != cols)
            throw ValidationError("plan matrix row " + std::to_string(i)
                                  + " has ragged width");
        LayerSpec layer;
        layer.outer_radius = row[0];

        // Theta block: columns [1, gamma). Zeros are padding and must trail.
        std::size_t bounds = 0;
        while (bounds < gamma - 1 && row[1 + bounds] != 0.0) ++bounds;
        for (std::size_t j = 1 + bounds; j < gamma; ++j)
            if (row[j] != 0.0)
                throw ValidationError(
                    "plan matrix row " + std::to_string(i)
                    + ": zero inside the angle block is ambiguous with padding");
        for (std::size_t j = 0; j < bounds; ++j)
            layer.sector_bounds.push_back(row[1 + j]);

        // N block: columns [gamma, 2*gamma). First bounds+1 entries are
        // counts (zero allowed); the rest must be padding zeros.
        const std::size_t sectors = bounds + 1;
        for (std::size_t j = 0; j < sectors; ++j) {
            const double v = row[gamma + j];
            if (!(v >= 0.0) || std::floor(v) != v)
                throw ValidationError("plan matrix row " + std::to_string(i)
                                      + ": node counts must be non-negative integers");
            layer.sector_counts.push_back(static_cast<std::uint64_t>(v));
        }
        for (std::size_t j = sectors; j < gamma; ++j)
            if (row[gamma + j] != 0.0)
                throw ValidationError("plan matrix row " + std::to_string(i)
                                      + ": count entries beyond the layer's sectors");
        plan.layers.push_back(std::move(layer));
    }

    require_valid(plan);
    return plan;
}

std::vector<std::vector<double>> padded_matrix_from_plan(const NetworkPlan& plan) {
    require_valid(plan);
    const std::size_t gamma = plan.max_sectors_per_layer();
    std::vector<std::vector<double>> m;
    m.reserve(plan.layers.size());
    for (const auto& l : plan.layers) {
        std::vector<double> row(2 * gamma, 0.0);
        row[0] = l.outer_radius;
        for (std::size_t j = 0; j < l.sector_bounds.size(); ++j)
            row[1 + j] = l.sector_bounds[j];
        for (std::size_t j = 0; j < l.sector_counts.size(); ++j)
            row[gamma + j] = static_cast<double>(l.sector_counts[j]);
        m.push_back(std::move(row));
    }
    return m;
}

std::uint64_t plan_fingerprint(const NetworkPlan& plan) {
    const std::string text = save_plan(plan);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace asd

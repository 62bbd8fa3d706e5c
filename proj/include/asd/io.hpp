#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "asd/deployment.hpp"
#include "asd/density.hpp"

namespace asd {

inline constexpr const char* kToolVersion = "asdsim 0.1.0";

/// Shortest-exact decimal for a double via %.17g: round-trips bit-exactly
/// and is byte-stable across runs.
std::string format_double(double v);

/// Write `text` to `path` atomically (temp file + rename).
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& text);

std::string read_text(const std::filesystem::path& path);

/// Points CSV, header `x,y,layer,sector`.
void write_points_csv(const std::filesystem::path& path, const Deployment& d);

struct PointsFile {
    std::vector<Point2D> points;
    std::vector<SectorTag> tags;
};

PointsFile read_points_csv(const std::filesystem::path& path);

/// Grid CSV, header `i,j,x_center,y_center,count,pdf` with 1-based bin
/// indices, rows in j-major order.
void write_grid_csv(const std::filesystem::path& path, const PdfGrid& grid);

PdfGrid read_grid_csv(const std::filesystem::path& path);

/// Sniffs the header line: "points", "grid", or throws ParseError.
std::string csv_schema(const std::filesystem::path& path);

/// Everything needed to reproduce a run: emitted as <output>.manifest.json
/// next to every output file.
struct RunManifest {
    std::string command;
    std::string config_json; ///< resolved parameters, serialized JSON object
    std::uint64_t seed = 0;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string tool_version = kToolVersion;
    double wall_time_s = 0.0;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& m);

} // namespace asd

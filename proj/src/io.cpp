#include "asd/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "asd/errors.hpp"

namespace asd {

namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out)
            throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
        throw IoError("cannot move " + tmp.string() + " to " + path.string()
                      + ": " + ec.message());
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_points_csv(const fs::path& path, const Deployment& d) {
    std::string out = "x,y,layer,sector\n";
    out.reserve(out.size() + d.points.size() * 48);
    char line[128];
    for (std::size_t k = 0; k < d.points.size(); ++k) {
        const SectorTag tag = k < d.tags.size() ? d.tags[k] : SectorTag{};
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%u,%u\n", d.points[k].x,
                      d.points[k].y, tag.layer, tag.sector);
        out += line;
    }
    write_text_atomic(path, out);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_num(const std::string& field, const fs::path& path,
                 std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE)
        throw ParseError(path.string() + ":" + std::to_string(line_no)
                         + ": bad numeric field '" + field + "'");
    return v;
}

} // namespace

PointsFile read_points_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "x,y,layer,sector")
        throw ParseError(path.string() + ":1: expected header x,y,layer,sector");

    PointsFile pf;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw ParseError(path.string() + ":" + std::to_string(line_no)
                             + ": expected 4 fields");
        pf.points.push_back(Point2D{parse_num(fields[0], path, line_no),
                                    parse_num(fields[1], path, line_no)});
        pf.tags.push_back(
            SectorTag{static_cast<std::uint32_t>(parse_num(fields[2], path, line_no)),
                      static_cast<std::uint32_t>(parse_num(fields[3], path, line_no))});
    }
    return pf;
}

void write_grid_csv(const fs::path& path, const PdfGrid& grid) {
    std::string out = "i,j,x_center,y_center,count,pdf\n";
    out.reserve(out.size() + grid.counts.size() * 56);
    char line[160];
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const std::size_t k = j * grid.nx + i;
            std::snprintf(line, sizeof(line), "%zu,%zu,%.17g,%.17g,%llu,%.17g\n",
                          i + 1, j + 1, grid.x_center(i), grid.y_center(j),
                          static_cast<unsigned long long>(grid.counts[k]),
                          grid.values[k]);
            out += line;
        }
    }
    write_text_atomic(path, out);
}

PdfGrid read_grid_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "i,j,x_center,y_center,count,pdf")
        throw ParseError(path.string()
                         + ":1: expected header i,j,x_center,y_center,count,pdf");

    struct Cell {
        std::size_t i, j;
        double x, y, pdf;
        std::uint64_t count;
    };
    std::vector<Cell> cells;
    std::size_t nx = 0, ny = 0, line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6)
            throw ParseError(path.string() + ":" + std::to_string(line_no)
                             + ": expected 6 fields");
        Cell c{};
        c.i = static_cast<std::size_t>(parse_num(f[0], path, line_no));
        c.j = static_cast<std::size_t>(parse_num(f[1], path, line_no));
        c.x = parse_num(f[2], path, line_no);
        c.y = parse_num(f[3], path, line_no);
        c.count = static_cast<std::uint64_t>(parse_num(f[4], path, line_no));
        c.pdf = parse_num(f[5], path, line_no);
        if (c.i == 0 || c.j == 0)
            throw ParseError(path.string() + ":" + std::to_string(line_no)
                             + ": bin indices are 1-based");
        nx = std::max(nx, c.i);
        ny = std::max(ny, c.j);
        cells.push_back(c);
    }
    if (cells.empty())
        throw ParseError(path.string() + ": grid file has no cells");

    PdfGrid grid;
    grid.nx = nx;
    grid.ny = ny;
    // Recover bounds from the first/last centers (centers are uniform).
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    for (const auto& c : cells) {
        if (c.i == 1 && c.j == 1) { x0 = c.x; y0 = c.y; }
        if (c.i == nx && c.j == ny) { x1 = c.x; y1 = c.y; }
    }
    const double dx = nx > 1 ? (x1 - x0) / static_cast<double>(nx - 1)
                             : (x1 - x0 + 1.0);
    const double dy = ny > 1 ? (y1 - y0) / static_cast<double>(ny - 1)
                             : (y1 - y0 + 1.0);
    grid.bounds = BoundingBox{x0 - dx / 2, x1 + dx / 2, y0 - dy / 2, y1 + dy / 2};
    grid.counts.assign(nx * ny, 0);
    grid.values.assign(nx * ny, 0.0);
    for (const auto& c : cells) {
        const std::size_t k = (c.j - 1) * nx + (c.i - 1);
        grid.counts[k] = c.count;
        grid.values[k] = c.pdf;
        grid.binned += c.count;
    }
    grid.total = grid.binned;
    return grid;
}

std::string csv_schema(const fs::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::string header;
    std::getline(in, header);
    if (header == "x,y,layer,sector") return "points";
    if (header == "i,j,x_center,y_center,count,pdf") return "grid";
    throw ParseError(path.string() + ": unrecognized schema (header '" + header
                     + "')");
}

void write_manifest(const fs::path& path, const RunManifest& m) {
    nlohmann::json j;
    j["command"] = m.command;
    j["config"] = nlohmann::json::parse(m.config_json.empty() ? "{}"
                                                              : m.config_json);
    j["seed"] = m.seed;
    j["inputs"] = m.inputs;
    j["outputs"] = m.outputs;
    j["tool_version"] = m.tool_version;
    j["wall_time_s"] = m.wall_time_s;
    write_text_atomic(path, j.dump(2) + "\n");
}

} // namespace asd

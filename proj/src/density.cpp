#include "asd/density.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "asd/errors.hpp"

namespace asd {

std::uint64_t HistogramGrid::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

HistogramGrid build_histogram(std::span<const Point2D> points,
                              BoundingBox bounds, std::size_t nx,
                              std::size_t ny) {
    if (!(bounds.x_lo < bounds.x_hi) || !(bounds.y_lo < bounds.y_hi))
        throw ValidationError("histogram bounds enclose zero area");
    if (nx < 1 || ny < 1)
        throw ValidationError("histogram resolution must be at least 1x1");

    HistogramGrid grid;
    grid.bounds = bounds;
    grid.nx = nx;
    grid.ny = ny;
    grid.counts.assign(nx * ny, 0);

    const double inv_dx = static_cast<double>(nx) / bounds.width();
    const double inv_dy = static_cast<double>(ny) / bounds.height();
    for (const auto& p : points) {
        if (p.x < bounds.x_lo || p.x > bounds.x_hi || p.y < bounds.y_lo ||
            p.y > bounds.y_hi) {
            ++grid.out_of_bounds;
            continue;
        }
        auto i = static_cast<std::size_t>((p.x - bounds.x_lo) * inv_dx);
        auto j = static_cast<std::size_t>((p.y - bounds.y_lo) * inv_dy);
        if (i >= nx) i = nx - 1; // top/right boundary clamps into last bin
        if (j >= ny) j = ny - 1;
        ++grid.counts[j * nx + i];
    }
    return grid;
}

double analytical_mean_density(const RingSector& sector, std::uint64_t samples,
                               std::size_t bins) {
    if (bins < 1)
        throw ValidationError("bin count must be at least 1");
    const double area = sector_area(sector); // validates the sector
    const double bin_edge = 2.0 * sector.outer_radius / static_cast<double>(bins);
    return static_cast<double>(samples) * bin_edge * bin_edge / area;
}

EmpiricalMean empirical_mean_density(const HistogramGrid& grid) {
    EmpiricalMean m;
    std::uint64_t total = 0;
    for (auto c : grid.counts) {
        if (c > 0) {
            ++m.nonzero_bins;
            total += c;
        }
    }
    if (m.nonzero_bins == 0)
        throw ValidationError("histogram is empty: no occupied bins");
    m.mean = static_cast<double>(total) / static_cast<double>(m.nonzero_bins);
    return m;
}

double density_error_pct(double analytical, double empirical) {
    if (!(analytical > 0.0))
        throw ValidationError("analytical density must be > 0");
    return std::abs(empirical - analytical) / analytical * 100.0;
}

double PdfGrid::riemann_sum() const {
    const double cell = dx() * dy();
    double s = 0.0;
    for (double v : values) s += v * cell;
    return s;
}

BoundingBox deployment_bounds(std::span<const RingSector> sectors) {
    if (sectors.empty())
        throw ValidationError("no sectors to bound");
    BoundingBox bb = sector_bounding_box(sectors[0]);
    for (std::size_t k = 1; k < sectors.size(); ++k) {
        const BoundingBox b = sector_bounding_box(sectors[k]);
        bb.x_lo = std::min(bb.x_lo, b.x_lo);
        bb.x_hi = std::max(bb.x_hi, b.x_hi);
        bb.y_lo = std::min(bb.y_lo, b.y_lo);
        bb.y_hi = std::max(bb.y_hi, b.y_hi);
    }
    return bb;
}

PdfGrid asd_pdf_estimate(std::span<const Point2D> points, BoundingBox bounds,
                         std::size_t nx, std::size_t ny) {
    if (points.empty())
        throw ValidationError("cannot estimate a density from zero points");
    HistogramGrid grid = build_histogram(points, bounds, nx, ny);

    PdfGrid pdf;
    pdf.bounds = grid.bounds;
    pdf.nx = nx;
    pdf.ny = ny;
    pdf.total = points.size();
    pdf.binned = pdf.total - grid.out_of_bounds;
    pdf.values.resize(grid.counts.size());
    const double norm = static_cast<double>(pdf.total) * pdf.dx() * pdf.dy();
    for (std::size_t k = 0; k < grid.counts.size(); ++k)
        pdf.values[k] = static_cast<double>(grid.counts[k]) / norm;
    pdf.counts = std::move(grid.counts);
    return pdf;
}

PdfGrid asd_pdf_estimate(std::span<const Point2D> points,
                         std::span<const RingSector> sectors, std::size_t nx,
                         std::size_t ny) {
    return asd_pdf_estimate(points, deployment_bounds(sectors), nx, ny);
}

namespace {

// Exact areas: 4pi/45, 4pi/25, pi/12, 13pi/36, 0.51pi, pi — every case has
// outer radius 1, so the recorded occupancy figures all assume the
// [-1, 1]^2 grid, where the expected mean is samples * (2/500)^2 / area.
const std::array<ReferenceCase, 6> kReferenceCases = {{
    {"small ring sector",
     {1.0 / 3.0, 1.0, 0.0, kPi / 5.0},
     1000000, 0.2793, 57.2958, 56.4602, 1.46},
    {"large ring sector",
     {0.6, 1.0, 0.0, kPi / 2.0},
     1000000, 0.5027, 31.8310, 31.2297, 1.89},
    {"small circular sector",
     {0.0, 1.0, 0.0, kPi / 6.0},
     1000000, 0.2618, 61.1155, 59.9434, 1.92},
    {"large circular sector",
     {0.0, 1.0, 0.0, 13.0 * kPi / 18.0},
     1000000, 1.1345, 14.1036, 14.0280, 0.54},
    {"circular ring",
     {0.7, 1.0, 0.0, kTwoPi},
     1000000, 1.6022, 9.9862, 9.9137, 0.73},
    {"circular cell",
     {0.0, 1.0, 0.0, kTwoPi},
     10000000, 3.1416, 50.9296, 50.7354, 0.38},
}};

} // namespace

std::span<const ReferenceCase> density_reference_cases() {
    return kReferenceCases;
}

} // namespace asd

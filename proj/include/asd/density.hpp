#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "asd/deployment.hpp"
#include "asd/geometry.hpp"

namespace asd {

/// Bivariate bin-count grid. Bins are half-open [edge, next-edge) cells;
/// points landing exactly on the top/right boundary clamp into the last
/// row/column, so every in-bounds point increments exactly one bin.
/// Out-of-bounds points are counted, never binned.
struct HistogramGrid {
    BoundingBox bounds;
    std::size_t nx = 0, ny = 0;
    std::vector<std::uint64_t> counts; ///< row-major, index = j * nx + i
    std::uint64_t out_of_bounds = 0;

    double dx() const { return bounds.width() / static_cast<double>(nx); }
    double dy() const { return bounds.height() / static_cast<double>(ny); }
    double x_center(std::size_t i) const {
        return bounds.x_lo + (static_cast<double>(i) + 0.5) * dx();
    }
    double y_center(std::size_t j) const {
        return bounds.y_lo + (static_cast<double>(j) + 0.5) * dy();
    }
    std::uint64_t at(std::size_t i, std::size_t j) const {
        return counts[j * nx + i];
    }
    std::uint64_t total() const;
};

HistogramGrid build_histogram(std::span<const Point2D> points,
                              BoundingBox bounds, std::size_t nx,
                              std::size_t ny);

/// Expected count per occupied bin for uniform samples on a sector, binned
/// on the [-L2, L2]^2 grid at resolution bins x bins: samples * (2*L2/bins)^2
/// / area. Equivalently 8*samples / (bins^2 * (a2-a1) * (1 - (L1/L2)^2)).
double analytical_mean_density(const RingSector& sector, std::uint64_t samples,
                               std::size_t bins);

struct EmpiricalMean {
    double mean = 0.0;              ///< total count / nonzero_bins
    std::uint64_t nonzero_bins = 0; ///< bins with count > 0
};

/// Mean occupancy over the nonzero bins. Throws on an all-zero grid.
EmpiricalMean empirical_mean_density(const HistogramGrid& grid);

/// |empirical - analytical| / analytical * 100. Throws when analytical <= 0.
double density_error_pct(double analytical, double empirical);

/// Comparison of predicted vs measured mean bin occupancy.
struct DensityReport {
    std::optional<double> analytical; ///< absent when no reference geometry
    double empirical = 0.0;
    std::uint64_t nonzero_bins = 0;
    std::optional<double> error_pct;
    std::uint64_t out_of_bounds = 0;
};

/// Gridded values of the estimated spatial PDF. The Riemann sum of values
/// times the bin area equals binned/total (1 when nothing fell outside).
struct PdfGrid {
    BoundingBox bounds;
    std::size_t nx = 0, ny = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> values; ///< count / (total * dx * dy)
    std::uint64_t binned = 0;
    std::uint64_t total = 0;

    double dx() const { return bounds.width() / static_cast<double>(nx); }
    double dy() const { return bounds.height() / static_cast<double>(ny); }
    double x_center(std::size_t i) const {
        return bounds.x_lo + (static_cast<double>(i) + 0.5) * dx();
    }
    double y_center(std::size_t j) const {
        return bounds.y_lo + (static_cast<double>(j) + 0.5) * dy();
    }
    double riemann_sum() const;
};

/// Union of the sectors' exact bounding boxes: the deployment surface the
/// estimator grids over.
BoundingBox deployment_bounds(std::span<const RingSector> sectors);

/// Numerical PDF estimate for a multi-sector deployment: aggregate the
/// per-sector points into one histogram over deployment_bounds(sectors) and
/// normalize each bin by total * dx * dy.
PdfGrid asd_pdf_estimate(std::span<const Point2D> points,
                         std::span<const RingSector> sectors, std::size_t nx,
                         std::size_t ny);

/// As above with explicit bounds.
PdfGrid asd_pdf_estimate(std::span<const Point2D> points, BoundingBox bounds,
                         std::size_t nx, std::size_t ny);

/// Stock validation footprint: a named sector geometry plus the
/// mean-occupancy figures on record for it (4-decimal, at a 500x500 grid
/// over [-1,1]^2). The harness regenerates the deployment and checks the
/// analytical column to 4 decimals.
struct ReferenceCase {
    const char* name;
    RingSector sector;
    std::uint64_t samples;      ///< sample count the recorded figures assume
    double recorded_area;       ///< sector_area rounded to 4 decimals
    double recorded_analytical; ///< expected mean occupancy, 4 decimals
    double recorded_empirical;  ///< measured mean occupancy on record
    double recorded_error_pct;
};

/// The six canonical footprints (rings, sectors, ring sectors, full disk)
/// used by the `report` harness. All have outer radius 1 and are gridded
/// over [-1, 1]^2.
std::span<const ReferenceCase> density_reference_cases();

} // namespace asd

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "innerfn/inner.hpp"

namespace innerfn {

/* Occupancy of the sublevel set { |Theta| < eps } sampled at the centers of a
 * resolution x resolution grid over [-1,1]^2.  Cells whose centers satisfy
 * |z| >= 1 - 2/resolution are excluded (boundary collar, where truncation
 * error cannot be controlled).  Labels are assigned by label_components. */
struct LevelSetGrid {
    int resolution = 0;
    double eps = 0.0;
    bool truncation_ok = true;     // bound at the collar radius < 0.1 min(eps, 1-eps)
    std::vector<uint8_t> occupied; // row-major, resolution^2 entries
    std::vector<int32_t> label;    // 0 = empty, components numbered from 1
    int component_count = 0;

    int index(int ix, int iy) const { return iy * resolution + ix; }
    double cx(int ix) const { return -1.0 + (2.0 * ix + 1.0) / resolution; }
    double cy(int iy) const { return -1.0 + (2.0 * iy + 1.0) / resolution; }
};

// Evaluates |Theta| at every admissible cell center (rows in parallel).
LevelSetGrid sample_grid(const InnerFunctionSpec& spec, double eps, int resolution);

// 8-connected components via union-find; labels follow row-major first-visit
// order, so the labeling is deterministic.
void label_components(LevelSetGrid& grid);

enum class Connectivity { Connected, Disconnected, Unstable };

struct OneComponentResult {
    Connectivity verdict = Connectivity::Unstable;
    std::vector<int> component_counts; // one per resolution
    std::vector<bool> truncation_ok;
};

/* Connectivity of the sampled sublevel set across a ladder of resolutions:
 * connected when every resolution yields exactly one component, disconnected
 * when every resolution yields >= 2 with non-decreasing counts, unstable
 * otherwise or when any resolution lacks truncation headroom. */
OneComponentResult one_component_test(const InnerFunctionSpec& spec, double eps,
                                      const std::vector<int>& resolutions);

/* Bisection for the smallest eps whose grid has at most one component at the
 * given resolution.  Probes eps = (1 - 1/resolution) 2^-k to find a
 * disconnected lower bracket; when no probe down to tol disconnects, the
 * smallest probe is returned (connected for all eps).  Returns NaN when even
 * eps = 1 - 1/resolution is disconnected. */
double smallest_connected_epsilon(const InnerFunctionSpec& spec, int resolution,
                                  double tol = 1e-3);

enum class PgmMode { Occupancy, Labels };

// Plain (P2) PGM: occupancy uses maxval 1, labels use maxval component_count
// (at least 1).  Row iy = 0 is written first.
std::string render_pgm(const LevelSetGrid& grid, PgmMode mode);

} // namespace innerfn

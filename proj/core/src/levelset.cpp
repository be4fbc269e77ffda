#include "innerfn/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "innerfn/parallel.hpp"

namespace innerfn {

namespace {

struct DisjointSet {
    std::vector<int32_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int32_t>(i);
    }
    int32_t find(int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int32_t a, int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b); // keep the smaller root, stabilizes labels
        parent[b] = a;
    }
};

} // namespace

LevelSetGrid sample_grid(const InnerFunctionSpec& spec, double eps, int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("sample_grid: resolution must be >= 2");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("sample_grid: eps must lie in (0, 1)");

    LevelSetGrid g;
    g.resolution = resolution;
    g.eps = eps;
    g.occupied.assign(static_cast<std::size_t>(resolution) * resolution, 0);

    const double collar = 1.0 - 2.0 / resolution;
    const double bound = truncation_bound(spec, collar);
    g.truncation_ok = bound < 0.1 * std::min(eps, 1.0 - eps);

    parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t row) {
        const int iy = static_cast<int>(row);
        const double y = g.cy(iy);
        for (int ix = 0; ix < resolution; ++ix) {
            const double x = g.cx(ix);
            if (std::hypot(x, y) >= collar) continue;
            const Complex v = eval_inner_value(spec, Complex(x, y));
            if (std::abs(v) < eps) g.occupied[g.index(ix, iy)] = 1;
        }
    });
    return g;
}

void label_components(LevelSetGrid& grid) {
    const int res = grid.resolution;
    const std::size_t n = grid.occupied.size();
    DisjointSet ds(n);
    for (int iy = 0; iy < res; ++iy) {
        for (int ix = 0; ix < res; ++ix) {
            const int32_t i = grid.index(ix, iy);
            if (!grid.occupied[i]) continue;
            // Union with already-visited neighbours (W, NW, N, NE).
            if (ix > 0 && grid.occupied[i - 1]) ds.unite(i, i - 1);
            if (iy > 0) {
                const int32_t up = i - res;
                if (ix > 0 && grid.occupied[up - 1]) ds.unite(i, up - 1);
                if (grid.occupied[up]) ds.unite(i, up);
                if (ix + 1 < res && grid.occupied[up + 1]) ds.unite(i, up + 1);
            }
        }
    }
    grid.label.assign(n, 0);
    std::vector<int32_t> name(n, 0);
    int32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!grid.occupied[i]) continue;
        const int32_t root = ds.find(static_cast<int32_t>(i));
        if (name[root] == 0) name[root] = ++next; // row-major first visit
        grid.label[i] = name[root];
    }
    grid.component_count = next;
}

OneComponentResult one_component_test(const InnerFunctionSpec& spec, double eps,
                                      const std::vector<int>& resolutions) {
    if (resolutions.empty())
        throw std::invalid_argument("one_component_test: need at least one resolution");
    OneComponentResult res;
    for (int r : resolutions) {
        LevelSetGrid g = sample_grid(spec, eps, r);
        label_components(g);
        res.component_counts.push_back(g.component_count);
        res.truncation_ok.push_back(g.truncation_ok);
    }
    const bool ok = std::all_of(res.truncation_ok.begin(), res.truncation_ok.end(),
                                [](bool b) { return b; });
    const bool all_one = std::all_of(res.component_counts.begin(), res.component_counts.end(),
                                     [](int c) { return c == 1; });
    const bool all_multi = std::all_of(res.component_counts.begin(), res.component_counts.end(),
                                       [](int c) { return c >= 2; });
    const bool nondecreasing =
        std::is_sorted(res.component_counts.begin(), res.component_counts.end());
    if (!ok)
        res.verdict = Connectivity::Unstable;
    else if (all_one)
        res.verdict = Connectivity::Connected;
    else if (all_multi && nondecreasing)
        res.verdict = Connectivity::Disconnected;
    else
        res.verdict = Connectivity::Unstable;
    return res;
}

double smallest_connected_epsilon(const InnerFunctionSpec& spec, int resolution, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("smallest_connected_epsilon: tol must be positive");
    const auto connected = [&](double eps) {
        LevelSetGrid g = sample_grid(spec, eps, resolution);
        label_components(g);
        return g.component_count <= 1; // empty counts as connected
    };

    double hi = 1.0 - 1.0 / resolution;
    if (!connected(hi)) return std::numeric_limits<double>::quiet_NaN();

    // Walk down a halving ladder until some probe disconnects.
    double lo = hi;
    bool bracketed = false;
    while (lo * 0.5 >= tol) {
        lo *= 0.5;
        if (!connected(lo)) {
            bracketed = true;
            break;
        }
        hi = lo;
    }
    if (!bracketed) return lo; // connected at every probed eps

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (connected(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::string render_pgm(const LevelSetGrid& grid, PgmMode mode) {
    const int res = grid.resolution;
    if (mode == PgmMode::Labels && grid.label.size() != grid.occupied.size())
        throw std::invalid_argument("render_pgm: labels requested but not computed");
    const int maxval = mode == PgmMode::Occupancy ? 1 : std::max(grid.component_count, 1);
    std::string out = "P2\n" + std::to_string(res) + " " + std::to_string(res) + "\n" +
                      std::to_string(maxval) + "\n";
    for (int iy = 0; iy < res; ++iy) {
        for (int ix = 0; ix < res; ++ix) {
            const int i = grid.index(ix, iy);
            const int v = mode == PgmMode::Occupancy ? grid.occupied[i] : grid.label[i];
            if (ix) out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace innerfn

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "innerfn/levelset.hpp"

using namespace innerfn;

namespace {

LevelSetGrid hand_grid(int res, std::initializer_list<int> cells) {
    LevelSetGrid g;
    g.resolution = res;
    g.eps = 0.5;
    g.occupied.assign(static_cast<std::size_t>(res) * res, 0);
    for (int i : cells) g.occupied[i] = 1;
    return g;
}

InnerFunctionSpec single_zero_half() {
    return InnerFunctionSpec({ZeroFamily::explicit_list({{0.5, 0.0}})}, {});
}

InnerFunctionSpec saddle_pair() {
    return InnerFunctionSpec({ZeroFamily::explicit_list({{0.9, 0.0}, {-0.9, 0.0}})}, {});
}

} // namespace

TEST_CASE("occupancy pgm bytes") {
    LevelSetGrid g = hand_grid(2, {0});
    CHECK(render_pgm(g, PgmMode::Occupancy) == "P2\n2 2\n1\n1 0\n0 0\n");
    CHECK_THROWS_AS(render_pgm(g, PgmMode::Labels), std::invalid_argument);
}

TEST_CASE("label pgm numbers components in row-major first-visit order") {
    LevelSetGrid g = hand_grid(3, {0, 2, 6, 7});
    label_components(g);
    CHECK(g.component_count == 3);
    CHECK(render_pgm(g, PgmMode::Labels) == "P2\n3 3\n3\n1 0 2\n0 0 0\n3 3 0\n");
}

TEST_CASE("diagonal neighbours are connected") {
    LevelSetGrid g = hand_grid(2, {0, 3});
    label_components(g);
    CHECK(g.component_count == 1);
    CHECK(g.label[0] == 1);
    CHECK(g.label[3] == 1);
}

TEST_CASE("labeling is deterministic and idempotent") {
    LevelSetGrid g = hand_grid(4, {0, 5, 10, 15, 3, 12});
    label_components(g);
    const auto first = g.label;
    const int count = g.component_count;
    label_components(g);
    CHECK(g.label == first);
    CHECK(g.component_count == count);
}

TEST_CASE("sample_grid validates its arguments") {
    const auto spec = single_zero_half();
    CHECK_THROWS_AS(sample_grid(spec, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid(spec, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid(spec, 1.0, 8), std::invalid_argument);
}

TEST_CASE("sample_grid marks exactly the sublevel cells inside the collar") {
    const auto spec = single_zero_half();
    const int res = 32;
    const double eps = 0.95;
    LevelSetGrid g = sample_grid(spec, eps, res);
    CHECK(g.truncation_ok); // explicit list has no tail
    const double collar = 1.0 - 2.0 / res;
    int occupied = 0;
    for (int iy = 0; iy < res; ++iy) {
        for (int ix = 0; ix < res; ++ix) {
            const double x = g.cx(ix);
            const double y = g.cy(iy);
            bool expect = false;
            if (std::hypot(x, y) < collar)
                expect = std::abs(eval_inner_value(spec, {x, y})) < eps;
            CHECK(g.occupied[g.index(ix, iy)] == (expect ? 1 : 0));
            occupied += g.occupied[g.index(ix, iy)];
        }
    }
    CHECK(occupied > 0);
}

TEST_CASE("growing eps only adds cells") {
    InnerFunctionSpec spec({ZeroFamily::geometric(2.0, 30)}, {});
    LevelSetGrid narrow = sample_grid(spec, 0.3, 128);
    LevelSetGrid wide = sample_grid(spec, 0.6, 128);
    for (std::size_t i = 0; i < narrow.occupied.size(); ++i)
        if (narrow.occupied[i]) CHECK(wide.occupied[i] == 1);
}

TEST_CASE("collar truncation headroom is reported") {
    InnerFunctionSpec spec({ZeroFamily::power(1.5, 5)}, {});
    LevelSetGrid g = sample_grid(spec, 0.5, 64);
    CHECK(!g.truncation_ok);
    auto res = one_component_test(spec, 0.5, {64});
    CHECK(res.verdict == Connectivity::Unstable);
    CHECK(!res.truncation_ok[0]);
}

TEST_CASE("a single sublevel disc is connected") {
    auto res = one_component_test(single_zero_half(), 0.3, {64, 128});
    CHECK(res.verdict == Connectivity::Connected);
    CHECK(res.component_counts == std::vector<int>{1, 1});
}

TEST_CASE("two separated sublevel discs are disconnected") {
    auto res = one_component_test(saddle_pair(), 0.3, {128, 256});
    CHECK(res.verdict == Connectivity::Disconnected);
    CHECK(res.component_counts == std::vector<int>{2, 2});
}

TEST_CASE("a sub-cell component makes the ladder unstable") {
    // At res 64 the cell centers all miss the tiny sublevel disc.
    auto res = one_component_test(single_zero_half(), 0.02, {64, 256});
    CHECK(res.component_counts[0] == 0);
    CHECK(res.component_counts[1] >= 1);
    CHECK(res.verdict == Connectivity::Unstable);
}

TEST_CASE("smallest connected eps matches the saddle level") {
    // |B| at the midpoint between the zeros 0.9 and -0.9 is 0.81.
    const double eps = smallest_connected_epsilon(saddle_pair(), 512);
    CHECK(eps == doctest::Approx(0.81).epsilon(0.01));
}

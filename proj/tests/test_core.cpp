#include "tfkac/core.hpp"

#include <doctest.h>

using namespace tfkac;

TEST_CASE("space grid nodes are uniform") {
    const SpaceGrid g = build_space_grid(0.0, 1.0, 4);
    CHECK(g.node(0) == doctest::Approx(0.0));
    CHECK(g.node(1) == doctest::Approx(0.25));
    CHECK(g.node(2) == doctest::Approx(0.5));
    CHECK(g.node(3) == doctest::Approx(0.75));
    CHECK(g.node(4) == doctest::Approx(1.0));
    CHECK(g.interior_count() == 3);
}

TEST_CASE("even grids hit the midpoint exactly") {
    for (int m : {2, 8, 64})
        CHECK(build_space_grid(0.0, 1.0, m).node(m / 2) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("space grid rejects degenerate partitions") {
    CHECK_THROWS_AS(build_space_grid(0.0, 1.0, 1), BadPartition);
    CHECK_THROWS_AS(build_space_grid(1.0, 0.0, 8), BadPartition);
}

TEST_CASE("fine grid spacing") {
    CHECK(build_space_grid(0.0, 1.0, 1 << 11).h() == doctest::Approx(1.0 / (1 << 11)));
}

TEST_CASE("grid refinement nests nodes") {
    const SpaceGrid coarse = build_space_grid(-0.5, 2.0, 16);
    const SpaceGrid fine = build_space_grid(-0.5, 2.0, 32);
    for (int m = 0; m <= 16; ++m)
        CHECK(coarse.node(m) == doctest::Approx(fine.node(2 * m)).epsilon(1e-15));
}

TEST_CASE("time grid levels") {
    const TimeGrid t = build_time_grid(1.0, 1 << 7);
    CHECK(t.tau() == doctest::Approx(1.0 / 128.0));
    CHECK(t.level(t.n_count()) == doctest::Approx(1.0));

    const TimeGrid single = build_time_grid(0.5, 1);
    CHECK(single.level(0) == doctest::Approx(0.0));
    CHECK(single.level(1) == doctest::Approx(0.5));

    CHECK_THROWS_AS(build_time_grid(1.0, 0), BadPartition);
    CHECK_THROWS_AS(build_time_grid(0.0, 4), BadPartition);
}

TEST_CASE("model validation accepts the standard setup") {
    ModelParams params;
    params.gamma = 0.5;
    params.lambda = 3.0;
    params.k_gamma = 1.0;
    params.p = Complex(5.0, 0.0);
    const SpaceGrid grid = build_space_grid(0.0, 1.0, 16);
    CHECK_NOTHROW(validate_model(params, grid));

    // idempotent
    const ModelParams once = validate_model(params, grid);
    const ModelParams twice = validate_model(once, grid);
    CHECK(twice.gamma == once.gamma);
    CHECK(twice.p == once.p);
}

TEST_CASE("model validation reports the violated constraint") {
    const SpaceGrid grid = build_space_grid(0.0, 1.0, 16);
    ModelParams params;

    params.gamma = 1.2;
    CHECK_THROWS_AS(validate_model(params, grid), GammaOutOfRange);

    params.gamma = 0.5;
    params.lambda = -1.0;
    CHECK_THROWS_AS(validate_model(params, grid), NegativeTempering);

    params.lambda = 3.0;
    params.k_gamma = 0.0;
    CHECK_THROWS_AS(validate_model(params, grid), NonpositiveDiffusion);

    params.k_gamma = 1.0;
    params.p = Complex(-5.0, 0.0);
    CHECK_THROWS_AS(validate_model(params, grid), ReParameterNegative);

    params.p = Complex(5.0, 0.0);
    params.potential = [](double x) { return x - 0.5; };
    CHECK_THROWS_AS(validate_model(params, grid), NegativePotential);
}

TEST_CASE("purely imaginary p passes the Re(pU) gate") {
    ModelParams params;
    params.p = Complex(0.0, 10.0);
    CHECK_NOTHROW(validate_model(params, build_space_grid(0.0, 1.0, 8)));
}

TEST_CASE("solution history bookkeeping") {
    const SpaceGrid grid = build_space_grid(0.0, 1.0, 4);
    const TimeGrid tgrid = build_time_grid(1.0, 2);
    SolutionHistory h(grid, tgrid);
    CHECK_THROWS_AS(h.push(ComplexVector(3)), HistoryTooShort);
    h.set_initial(ComplexVector(3, Complex(1.0)));
    CHECK(h.level_count() == 1);
    CHECK_THROWS_AS(h.push(ComplexVector(2)), GridMismatch);
    h.push(ComplexVector(3));
    h.push(ComplexVector(3));
    CHECK(h.level_count() == 3);
    CHECK_THROWS_AS(h.push(ComplexVector(3)), BadPartition);
    CHECK_THROWS_AS(h.at(3), HistoryTooShort);
    CHECK(h.at(0)[0] == Complex(1.0));
}

#include <catch2/catch.hpp>

#include <cmath>
#include <cstring>

#include "filmwave/sweep.hpp"

using namespace filmwave;

namespace {

bool rows_identical(const SweepResult& a, const SweepResult& b) {
    if (a.rows.size() != b.rows.size()) return false;
    return std::memcmp(a.rows.data(), b.rows.data(), a.rows.size() * sizeof(SweepRow)) == 0;
}

}  // namespace

TEST_CASE("figure presets are wired to the captions") {
    CHECK(figure_preset_ids().size() == 9);
    for (const auto& id : figure_preset_ids()) CHECK_NOTHROW(figure_preset(id));
    CHECK_THROWS_AS(figure_preset("fig10"), validation_error);

    const auto fig1 = figure_preset("fig1");
    CHECK(fig1.quantity == Quantity::transmission);
    CHECK(fig1.spec.thickness == std::vector<double>{1e-6, 0.9e-6, 0.8e-6});
    CHECK(fig1.spec.angle == std::vector<double>{0.0});
    CHECK(fig1.spec.specularity == std::vector<double>{0.3});
    CHECK(fig1.spec.variant == ModelVariant::low_freq_simplified);
    CHECK(fig1.spec.omega.count == 400);
    CHECK(fig1.spec.omega.max == Approx(0.2 * sodium().omega_p).epsilon(1e-15));
    CHECK(fig1.spec.omega.min == Approx(fig1.spec.omega.max / 400).epsilon(1e-15));

    const auto fig5 = figure_preset("fig5");
    CHECK(fig5.quantity == Quantity::reflection);
    CHECK(fig5.spec.angle == std::vector<double>{0.0, pi / 4.0, 5.0 * pi / 12.0});
    CHECK(fig5.spec.thickness == std::vector<double>{1e-6});
    CHECK_FALSE(fig5.note.empty());  // the angle family's thickness is an assumption

    const auto fig9 = figure_preset("fig9");
    CHECK(fig9.quantity == Quantity::absorption);
    CHECK(fig9.spec.specularity == std::vector<double>{0.0, 0.5, 0.8});
}

TEST_CASE("fig1 sweep shape and ordering of rows") {
    const auto result = run_sweep(figure_preset("fig1").spec, 2);
    REQUIRE(result.rows.size() == 1200);
    CHECK(result.points_per_curve() == 400);

    // blocks follow the family order, omega ascending inside each block
    CHECK(result.rows[0].d == 1e-6);
    CHECK(result.rows[400].d == 0.9e-6);
    CHECK(result.rows[800].d == 0.8e-6);
    for (std::size_t j = 1; j < 400; ++j) CHECK(result.rows[j].omega > result.rows[j - 1].omega);
    CHECK(result.rows[0].omega == Approx(3.25e12).epsilon(1e-15));
    CHECK(result.rows[399].omega == result.spec.omega.max);  // endpoint exact

    // transmission falls with thickness at every spot-checked omega
    for (std::size_t j : {std::size_t{0}, std::size_t{100}, std::size_t{399}}) {
        CHECK(result.rows[800 + j].T > result.rows[400 + j].T);
        CHECK(result.rows[400 + j].T > result.rows[j].T);
        CHECK(result.rows[800 + j].R < result.rows[400 + j].R);
        CHECK(result.rows[400 + j].R < result.rows[j].R);
    }
}

TEST_CASE("reflection grows with specularity (fig7 grid)") {
    const auto result = run_sweep(figure_preset("fig7").spec, 2);
    const std::size_t n = result.points_per_curve();
    for (std::size_t j : {std::size_t{0}, std::size_t{100}, std::size_t{399}}) {
        CHECK(result.rows[2 * n + j].R > result.rows[n + j].R);  // p=0.8 > p=0.5
        CHECK(result.rows[n + j].R > result.rows[j].R);          // p=0.5 > p=0
    }
}

TEST_CASE("sweeps are deterministic across runs and thread counts") {
    const auto spec = figure_preset("fig1").spec;
    const auto serial = run_sweep(spec, 1);
    const auto serial_again = run_sweep(spec, 1);
    const auto parallel = run_sweep(spec, 4);
    CHECK(rows_identical(serial, serial_again));
    CHECK(rows_identical(serial, parallel));
}

TEST_CASE("degenerate two-point grid at grazing incidence") {
    SweepSpec spec;
    spec.material = sodium();
    spec.variant = ModelVariant::thin_kd;
    spec.omega = {1e13, 2e13, 2};
    spec.thickness = {1e-6};
    spec.angle = {half_pi};
    spec.specularity = {0.3};
    const auto result = run_sweep(spec, 1);
    REQUIRE(result.rows.size() == 2);
    for (const auto& row : result.rows) {
        CHECK(row.T == 0.0);
        CHECK(row.R == 1.0);
    }
}

TEST_CASE("find_extremum ties break toward the lowest omega") {
    SweepResult synthetic;
    synthetic.spec = figure_preset("fig1").spec;
    synthetic.spec.omega.count = 5;
    synthetic.spec.thickness = {1e-6};
    for (int j = 0; j < 5; ++j)
        synthetic.rows.push_back({1e12 * (j + 1), 1e-6, 0.0, 0.3, 0.5, 0.25, 0.25, 0, 0});
    const auto ext = find_extremum(synthetic, Quantity::transmission, 1e-6);
    CHECK(ext.omega == 1e12);
    CHECK_FALSE(ext.interior);
    CHECK_THROWS_AS(find_extremum(synthetic, Quantity::transmission, 2e-6), validation_error);
}

TEST_CASE("absorption peaks inside the sweep range (fig3)") {
    const auto preset = figure_preset("fig3");
    const auto result = run_sweep(preset.spec, 2);
    const auto ext = find_extremum(result, Quantity::absorption, 1e-6);
    CHECK(ext.interior);
    CHECK(ext.omega > 5e13);
    CHECK(ext.omega < 2e14);
}

TEST_CASE("reflection is monotone decreasing in omega (fig2 grid)") {
    // dense confirmation that no interior maximum hides between grid points
    auto dense = figure_preset("fig2").spec;
    dense.thickness = {1e-6};
    dense.omega.count = 10000;
    dense.omega.min = dense.omega.max / dense.omega.count;
    const auto dres = run_sweep(dense, 0);
    for (std::size_t j = 1; j < dres.rows.size(); ++j)
        REQUIRE(dres.rows[j].R < dres.rows[j - 1].R);

    // so the grid maximum sits on the low-omega boundary
    const auto result = run_sweep(figure_preset("fig2").spec, 2);
    for (double d : {1e-6, 0.9e-6, 0.8e-6}) {
        const auto ext = find_extremum(result, Quantity::reflection, d);
        CHECK_FALSE(ext.interior);
        CHECK(ext.omega == result.rows[0].omega);
    }
}

TEST_CASE("sweep spec validation") {
    SweepSpec spec;
    spec.material = sodium();
    spec.omega = {1e12, 1e14, 10};
    spec.thickness = {1e-6};
    spec.angle = {0.0};
    spec.specularity = {0.3};
    CHECK_NOTHROW(spec.validate());

    auto two_families = spec;
    two_families.thickness = {1e-6, 2e-6};
    two_families.angle = {0.0, 0.5};
    CHECK_THROWS_AS(two_families.validate(), validation_error);

    auto short_axis = spec;
    short_axis.omega.count = 1;
    CHECK_THROWS_AS(short_axis.validate(), validation_error);

    auto inverted = spec;
    inverted.omega = {1e14, 1e12, 10};
    CHECK_THROWS_AS(inverted.validate(), validation_error);

    auto bad_d = spec;
    bad_d.thickness = {-1e-6};
    CHECK_THROWS_AS(bad_d.validate(), validation_error);

    auto empty_angle = spec;
    empty_angle.angle = {};
    CHECK_THROWS_AS(empty_angle.validate(), validation_error);
}

TEST_CASE("a failing point aborts the sweep with coordinates") {
    SweepSpec spec;
    spec.material = sodium();
    spec.variant = ModelVariant::low_freq_simplified;
    spec.omega = {1e12, 1e14, 4};
    spec.thickness = {1e-12};  // pushes Re(w) below the quadrature's validated range
    spec.angle = {0.0};
    spec.specularity = {0.3};
    CHECK_THROWS_WITH(run_sweep(spec, 2), Catch::Contains("sweep aborted"));
}

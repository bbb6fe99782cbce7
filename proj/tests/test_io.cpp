#include "bergsamp/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

using namespace bergsamp;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "bergsamp_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

io::ordered_json sample_bound_report_json(double gamma, const std::string& label,
                                          bool with_measured) {
    const BoundConfig cfg = BoundConfig::defaults();
    const SpaceParams params{2.0, 0.0};
    const std::optional<double> measured =
        with_measured ? std::optional<double>(0.25) : std::nullopt;
    const BoundReport report = make_bound_report(gamma, 0.6, params, cfg, 1.2, 0.5, measured);
    return io::to_json(report, cfg, label);
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("region round-trip") {
    Region region;
    region.label = "two-piece";
    region.sectors = {{0.1, 0.4, 0.0, 1.5}, {0.55, 0.9, 2.0, 2.0 + std::numbers::pi}};
    const io::ordered_json j = io::to_json(region);
    const Region back = io::region_from_json(j);
    CHECK(back.label == region.label);
    REQUIRE(back.sectors.size() == region.sectors.size());
    for (std::size_t i = 0; i < region.sectors.size(); ++i) {
        CHECK(back.sectors[i].rho_min == region.sectors[i].rho_min);
        CHECK(back.sectors[i].rho_max == region.sectors[i].rho_max);
        CHECK(back.sectors[i].theta_min == region.sectors[i].theta_min);
        CHECK(back.sectors[i].theta_max == region.sectors[i].theta_max);
    }
}

TEST_CASE("bound config round-trip keeps provenance") {
    BoundConfig cfg;
    cfg.c_remez = 3.25;
    cfg.c1 = 0.125;
    cfg.c_dprime = 1.75;
    cfg.c_ov = 2.5;
    cfg.D_const = 4.0;
    cfg.provenance["c_remez"] = "calibrated:run-3";
    cfg.provenance["c1"] = "default-1";
    const io::ordered_json j = io::to_json(cfg);
    CHECK(j.at("kind") == "bound_config");
    CHECK(j.at("schema_version") == io::kSchemaVersion);
    const BoundConfig back = io::bound_config_from_json(j);
    CHECK(back.c_remez == cfg.c_remez);
    CHECK(back.c1 == cfg.c1);
    CHECK(back.c_dprime == cfg.c_dprime);
    CHECK(back.c_ov == cfg.c_ov);
    CHECK(back.D_const == cfg.D_const);
    CHECK(back.provenance.at("c_remez") == "calibrated:run-3");
    CHECK(back.provenance.at("c1") == "default-1");
}

TEST_CASE("report serializers stamp kind and schema version") {
    DensityReport density;
    density.r = 0.6;
    density.gamma_hat = 0.4;
    density.argmin_center = Complex(0.1, -0.2);
    density.grid_resolution = 32;
    const io::ordered_json jd = io::to_json(density);
    CHECK(jd.at("kind") == "density_report");
    CHECK(jd.at("schema_version") == io::kSchemaVersion);
    CHECK(jd.at("gamma_hat") == 0.4);
    CHECK(jd.contains("gamma_hat_direction"));
    CHECK(jd.at("argmin_center")[0] == 0.1);

    CoveringReport covering;
    covering.r = 0.7;
    covering.measured_N = 42;
    covering.bound_N = 55.5;
    covering.covering_ok = true;
    const io::ordered_json jc = io::to_json(covering);
    CHECK(jc.at("kind") == "covering_report");
    CHECK(jc.at("schema_version") == io::kSchemaVersion);
    CHECK(jc.at("measured_N") == 42);
    CHECK(jc.at("covering_ok") == true);

    SamplingResult result;
    result.C_hat = 0.5;
    result.degree = 3;
    result.params = SpaceParams{2.0, 1.0};
    result.region_label = "annulus(0.5)";
    result.extremal_coeffs = {Complex(1.0, 0.0), Complex(0.0, -2.0)};
    const io::ordered_json js = io::to_json(result);
    CHECK(js.at("kind") == "sampling_result");
    CHECK(js.at("C_hat") == 0.5);
    CHECK(js.at("alpha") == 1.0);
    CHECK(js.at("extremal_coeffs")[1][1] == -2.0);

    GoodMassReport mass;
    mass.c = 0.5;
    mass.K = 2.0;
    mass.measured_N = 7;
    mass.mass_ok = true;
    const io::ordered_json jm = io::to_json(mass);
    CHECK(jm.at("kind") == "good_mass_report");
    CHECK(jm.at("K") == 2.0);
    CHECK(jm.at("mass_ok") == true);

    KovrijkineReport kov;
    kov.r = 0.4;
    kov.rho = 0.8;
    kov.ok_sup = true;
    const io::ordered_json jk = io::to_json(kov);
    CHECK(jk.at("kind") == "local_sup_report");
    CHECK(jk.at("rho") == 0.8);
    CHECK(jk.at("ok_sup") == true);
}

TEST_CASE("bound report json carries its config") {
    const io::ordered_json j = sample_bound_report_json(0.3, "grating(8,0.5)", true);
    CHECK(j.at("kind") == "bound_report");
    CHECK(j.at("region_label") == "grating(8,0.5)");
    CHECK(j.at("gamma") == 0.3);
    CHECK(j.at("C_measured") == 0.25);
    CHECK(j.contains("lower_ok"));
    CHECK(j.contains("upper_ok"));
    CHECK(j.at("bound_config").at("kind") == "bound_config");
    CHECK(j.at("bound_config").at("c1") == BoundConfig::defaults().c1);

    // without a measured constant the ok flags stay out of the row
    const io::ordered_json j2 = sample_bound_report_json(0.3, "x", false);
    CHECK_FALSE(j2.contains("C_measured"));
    CHECK_FALSE(j2.contains("lower_ok"));
}

TEST_CASE("remez sample and fit round-trip") {
    RemezSample sample;
    sample.degree = 3;
    sample.s = 0.2;
    sample.boundary_sup = 17.5;
    sample.poly_coeffs = {Complex(0.5, 0.0), Complex(0.0, 1.0), Complex(-2.0, 0.25)};
    const RemezSample back = io::remez_sample_from_json(io::to_json(sample));
    CHECK(back.degree == sample.degree);
    CHECK(back.s == sample.s);
    CHECK(back.boundary_sup == sample.boundary_sup);
    REQUIRE(back.poly_coeffs.size() == 3);
    CHECK(back.poly_coeffs[2] == sample.poly_coeffs[2]);

    RemezFit fit;
    fit.domain_radius = 1.0;
    fit.c_fitted = 2.125;
    fit.max_residual = 0.875;
    fit.shape_slope = 1.05;
    fit.shape_ok = true;
    fit.samples = {sample};
    const io::ordered_json j = io::to_json(fit);
    CHECK(j.at("kind") == "remez_fit");
    const RemezFit fit_back = io::remez_fit_from_json(j);
    CHECK(fit_back.domain_radius == fit.domain_radius);
    CHECK(fit_back.c_fitted == fit.c_fitted);
    CHECK(fit_back.max_residual == fit.max_residual);
    CHECK(fit_back.shape_slope == fit.shape_slope);
    CHECK(fit_back.shape_ok == fit.shape_ok);
    REQUIRE(fit_back.samples.size() == 1);
    CHECK(fit_back.samples[0].boundary_sup == sample.boundary_sup);

    SUBCASE("kind and version are enforced") {
        io::ordered_json wrong = j;
        wrong["kind"] = "density_report";
        CHECK_THROWS_AS(io::remez_fit_from_json(wrong), std::runtime_error);
        io::ordered_json stale = j;
        stale["schema_version"] = io::kSchemaVersion + 1;
        CHECK_THROWS_AS(io::remez_fit_from_json(stale), std::runtime_error);
    }
}

TEST_CASE("combine reports builds the sandwich table") {
    const std::vector<io::ordered_json> reports = {
        sample_bound_report_json(0.3, "a", true),
        sample_bound_report_json(0.7, "b", false),
    };
    const io::ordered_json table = io::combine_reports(reports);
    CHECK(table.at("kind") == "sandwich_table");
    CHECK(table.at("schema_version") == io::kSchemaVersion);
    CHECK(table.contains("gamma_hat_direction"));
    REQUIRE(table.at("rows").size() == 2);
    const auto& row0 = table.at("rows")[0];
    CHECK(row0.at("region_label") == "a");
    CHECK(row0.at("gamma") == 0.3);
    CHECK(row0.at("C_measured") == 0.25);
    CHECK(row0.contains("lower_ok"));
    CHECK(row0.contains("C_lower_theory"));
    CHECK(row0.contains("C_upper_necessary"));
    const auto& row1 = table.at("rows")[1];
    CHECK(row1.at("region_label") == "b");
    CHECK_FALSE(row1.contains("C_measured"));
    // the config travels with the table, taken from the first row
    CHECK(table.at("bound_config") == reports[0].at("bound_config"));

    CHECK_THROWS_AS(io::combine_reports({}), std::invalid_argument);
    CHECK_THROWS_AS(io::combine_reports({io::to_json(DensityReport{})}), std::runtime_error);
}

TEST_CASE("json files round-trip byte for byte") {
    const fs::path dir = scratch_dir();
    const io::ordered_json j = sample_bound_report_json(0.42, "file-case", true);
    const fs::path first = dir / "report_a.json";
    const fs::path second = dir / "report_b.json";
    io::save_json(j, first.string());
    const io::ordered_json loaded = io::load_json(first.string());
    CHECK(loaded == j);
    io::save_json(loaded, second.string());
    CHECK(slurp(first) == slurp(second));
    CHECK_THROWS_AS(io::load_json((dir / "missing.json").string()), std::runtime_error);
}

TEST_CASE("csv keeps full precision") {
    const fs::path dir = scratch_dir();
    const fs::path path = dir / "table.csv";
    const std::vector<double> values = {1.0 / 3.0, 6.02214076e23, -7.25e-301, 0.1 + 0.2};
    io::save_csv(path.string(), {"a", "b", "c", "d"}, {values});

    std::ifstream in(path);
    std::string header, line;
    REQUIRE(std::getline(in, header));
    CHECK(header == "a,b,c,d");
    REQUIRE(std::getline(in, line));
    std::istringstream fields(line);
    std::string cell;
    for (double expected : values) {
        REQUIRE(std::getline(fields, cell, ','));
        CHECK(std::stod(cell) == expected);
    }

    CHECK_THROWS_AS(io::save_csv(path.string(), {"a", "b"}, {{1.0, 2.0, 3.0}}),
                    std::invalid_argument);
}

TEST_CASE("region specs resolve through the catalog or a file") {
    const Region annulus = io::load_region("builtin:annulus(0.5)");
    CHECK(region_area(annulus) == doctest::Approx(0.75).epsilon(1e-12));

    const fs::path dir = scratch_dir();
    const fs::path path = dir / "region.json";
    Region custom;
    custom.label = "from-file";
    custom.sectors = {{0.25, 0.5, 0.0, 1.0}};
    io::save_json(io::to_json(custom), path.string());
    const Region loaded = io::load_region(path.string());
    CHECK(loaded.label == "from-file");
    REQUIRE(loaded.sectors.size() == 1);
    CHECK(loaded.sectors[0].rho_max == 0.5);

    CHECK_THROWS(io::load_region("builtin:not-a-region"));
}

} // TEST_SUITE

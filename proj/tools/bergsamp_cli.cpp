#include "bergsamp/bounds.hpp"
#include "bergsamp/covering.hpp"
#include "bergsamp/fock.hpp"
#include "bergsamp/geometry.hpp"
#include "bergsamp/io.hpp"
#include "bergsamp/region.hpp"
#include "bergsamp/remez.hpp"
#include "bergsamp/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

using bergsamp::io::ordered_json;

std::string sibling_csv(const std::string& out) {
    const std::string suffix = ".json";
    if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
        return out.substr(0, out.size() - suffix.size()) + ".csv";
    return out + ".csv";
}

bergsamp::AnalyticFunction seeded_polynomial(int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<bergsamp::Complex> coeffs(degree + 1);
    for (auto& c : coeffs) c = bergsamp::Complex(gauss(rng), gauss(rng));
    return bergsamp::polynomial(std::move(coeffs));
}

struct Options {
    std::string region;
    std::string bound_config;
    std::string out = "report.json";
    std::vector<std::string> inputs;
    int degree = 6;
    double alpha = 0.0;
    double p = 2.0;
    double r = 0.5;
    double s = 0.0;
    double t = 0.0;
    double c = 0.5;
    std::uint64_t seed = 1;
    int restarts = 4;
    int resolution = 64;
};

int run_density(const Options& opt) {
    const bergsamp::Region E = bergsamp::io::load_region(opt.region);
    const bergsamp::DensityReport report = bergsamp::density(E, opt.r, opt.resolution);
    ordered_json j = bergsamp::io::to_json(report);
    j["region_label"] = E.label;
    bergsamp::io::save_json(j, opt.out);
    return 0;
}

int run_constant(const Options& opt) {
    const bergsamp::Region E = bergsamp::io::load_region(opt.region);
    const bergsamp::SpaceParams params{opt.p, opt.alpha};
    std::vector<std::vector<double>> rows;
    ordered_json sweep = ordered_json::array();
    bergsamp::SamplingResult last;
    for (int d = 0; d <= opt.degree; ++d) {
        last = params.p == 2.0
                   ? bergsamp::optimal_constant_p2(E, d, params.alpha)
                   : bergsamp::extremal_search(E, d, params, opt.restarts, opt.seed);
        rows.push_back({static_cast<double>(d), last.C_hat});
        sweep.push_back(ordered_json{{"degree", d}, {"C_hat", last.C_hat}});
    }
    ordered_json j = bergsamp::io::to_json(last);
    j["sweep"] = std::move(sweep);
    bergsamp::io::save_json(j, opt.out);
    bergsamp::io::save_csv(sibling_csv(opt.out), {"degree", "C_hat"}, rows);
    return 0;
}

int run_bound(const Options& opt) {
    const bergsamp::Region E = bergsamp::io::load_region(opt.region);
    const bergsamp::SpaceParams params{opt.p, opt.alpha};
    const bergsamp::BoundConfig cfg =
        opt.bound_config.empty()
            ? bergsamp::BoundConfig::defaults()
            : bergsamp::io::bound_config_from_json(bergsamp::io::load_json(opt.bound_config));
    const bergsamp::DensityReport dens = bergsamp::density(E, opt.r, opt.resolution);
    const bergsamp::SamplingResult measured =
        params.p == 2.0 ? bergsamp::optimal_constant_p2(E, opt.degree, params.alpha)
                        : bergsamp::extremal_search(E, opt.degree, params, opt.restarts, opt.seed);
    const bergsamp::BoundReport report = bergsamp::make_bound_report(
        dens.gamma_hat, opt.r, params, cfg, 1.0, opt.c, measured.C_hat);
    bergsamp::io::save_json(bergsamp::io::to_json(report, cfg, E.label), opt.out);
    return 0;
}

int run_gooddisks(const Options& opt) {
    const bergsamp::SpaceParams params{opt.p, opt.alpha};
    const double s = opt.s > 0.0 ? opt.s : bergsamp::reference_covering_radius();
    const double t =
        opt.t > 0.0 ? opt.t : bergsamp::phb_double(bergsamp::phb_double(s));
    const bergsamp::AnalyticFunction f = seeded_polynomial(opt.degree, opt.seed);
    const int overlap_grid = opt.resolution > 0 ? opt.resolution : 512;
    const bergsamp::GoodMassReport report =
        bergsamp::verify_good_mass(f, params, s, t, opt.c, 8, overlap_grid);
    ordered_json j = bergsamp::io::to_json(report);
    j["s"] = s;
    j["t"] = t;
    j["degree"] = opt.degree;
    j["seed"] = opt.seed;
    bergsamp::io::save_json(j, opt.out);
    return 0;
}

int run_remez(const Options& opt) {
    std::vector<int> degrees;
    for (int n = 1; n <= opt.degree; ++n) degrees.push_back(n);
    const double area = std::numbers::pi * opt.r * opt.r;
    const std::vector<double> s_values = {0.05 * area, 0.1 * area, 0.2 * area, 0.4 * area};
    const bergsamp::RemezFit fit =
        bergsamp::fit_remez_constant(degrees, s_values, opt.r, opt.restarts, opt.seed);
    bergsamp::io::save_json(bergsamp::io::to_json(fit), opt.out);
    std::vector<std::vector<double>> rows;
    for (const bergsamp::RemezSample& sample : fit.samples)
        rows.push_back({static_cast<double>(sample.degree), sample.s, sample.boundary_sup});
    bergsamp::io::save_csv(sibling_csv(opt.out), {"degree", "s", "boundary_sup"}, rows);
    return 0;
}

int run_fock(const Options& opt) {
    const double truncation = bergsamp::fock_default_truncation(
        opt.alpha > 0.0 ? opt.alpha : 1.0, opt.degree);
    ordered_json j;
    j["schema_version"] = bergsamp::io::kSchemaVersion;
    j["kind"] = "fock_report";
    j["alpha"] = opt.alpha;
    j["truncation_radius"] = truncation;
    if (!opt.region.empty()) {
        const bergsamp::Region E = bergsamp::io::load_region(opt.region);
        const bergsamp::SamplingResult result =
            bergsamp::fock_optimal_constant_p2(E, opt.degree, opt.alpha, truncation);
        j["sampling"] = bergsamp::io::to_json(result);
    }
    j["lattice_r"] = opt.r;
    j["overlap_N"] = bergsamp::fock_overlap(opt.r);
    j["covering_ok"] = bergsamp::fock_covering_ok(opt.r);
    bergsamp::io::save_json(j, opt.out);
    return 0;
}

int run_report(const Options& opt) {
    std::vector<ordered_json> reports;
    for (const std::string& path : opt.inputs)
        reports.push_back(bergsamp::io::load_json(path));
    const ordered_json table = bergsamp::io::combine_reports(reports);
    bergsamp::io::save_json(table, opt.out);
    std::vector<std::vector<double>> rows;
    for (const auto& row : table.at("rows")) {
        rows.push_back({row.at("gamma").get<double>(), row.at("r").get<double>(),
                        row.at("C_lower_theory").get<double>(),
                        row.contains("C_measured") ? row.at("C_measured").get<double>() : -1.0,
                        row.at("C_upper_necessary").get<double>()});
    }
    bergsamp::io::save_csv(sibling_csv(opt.out),
                           {"gamma", "r", "C_lower_theory", "C_measured", "C_upper_necessary"},
                           rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sampling-constant experiments on weighted Bergman and Fock spaces"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "output JSON path");
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--restarts", opt.restarts, "search restarts");
        cmd->add_option("--resolution", opt.resolution, "grid resolution");
    };

    CLI::App* density = app.add_subcommand("density", "relative-density report for a region");
    density->add_option("--region", opt.region, "region file or builtin:<name>")->required();
    density->add_option("--r", opt.r, "density radius");
    add_common(density);

    CLI::App* constant = app.add_subcommand("constant", "restricted sampling constants by degree");
    constant->add_option("--region", opt.region)->required();
    constant->add_option("--degree", opt.degree, "max polynomial degree");
    constant->add_option("--alpha", opt.alpha, "weight exponent");
    constant->add_option("--p", opt.p, "integrability exponent");
    add_common(constant);

    CLI::App* bound = app.add_subcommand("bound", "lower/measured/upper bound comparison");
    bound->add_option("--region", opt.region)->required();
    bound->add_option("--degree", opt.degree);
    bound->add_option("--alpha", opt.alpha);
    bound->add_option("--p", opt.p);
    bound->add_option("--r", opt.r, "density radius");
    bound->add_option("--c", opt.c, "good-mass fraction for the K threshold");
    bound->add_option("--bound-config", opt.bound_config, "constants JSON");
    add_common(bound);

    CLI::App* gooddisks = app.add_subcommand("gooddisks", "good-disk decomposition check");
    gooddisks->add_option("--degree", opt.degree);
    gooddisks->add_option("--alpha", opt.alpha);
    gooddisks->add_option("--p", opt.p);
    gooddisks->add_option("--s", opt.s, "inner radius (0 = reference covering radius)");
    gooddisks->add_option("--t", opt.t, "outer radius (0 = doubled twice from s)");
    gooddisks->add_option("--c", opt.c, "target good-mass fraction");
    add_common(gooddisks);

    CLI::App* remez = app.add_subcommand("remez", "sublevel growth-law sweep and fit");
    remez->add_option("--degree", opt.degree, "max degree of the sweep");
    remez->add_option("--r", opt.r, "domain radius")->default_val(1.0);
    add_common(remez);

    CLI::App* fock = app.add_subcommand("fock", "Gaussian-weight analogue experiments");
    fock->add_option("--region", opt.region, "planar region file");
    fock->add_option("--degree", opt.degree);
    fock->add_option("--alpha", opt.alpha)->default_val(1.0);
    fock->add_option("--r", opt.r, "lattice disk radius")->default_val(2.0);
    add_common(fock);

    CLI::App* report = app.add_subcommand("report", "combine bound reports into one table");
    report->add_option("inputs", opt.inputs, "bound report JSON files")->required();
    report->add_option("--out", opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        ordered_json err;
        err["error"] = {{"type", "parse"}, {"message", e.what()}};
        std::cerr << err.dump(2) << '\n';
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }

    try {
        if (density->parsed()) return run_density(opt);
        if (constant->parsed()) return run_constant(opt);
        if (bound->parsed()) return run_bound(opt);
        if (gooddisks->parsed()) return run_gooddisks(opt);
        if (remez->parsed()) return run_remez(opt);
        if (fock->parsed()) return run_fock(opt);
        if (report->parsed()) return run_report(opt);
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = {{"type", "runtime"}, {"message", e.what()}};
        std::cerr << err.dump(2) << '\n';
        return 1;
    }
    return 0;
}

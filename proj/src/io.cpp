#include "bergsamp/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bergsamp::io {

namespace {

ordered_json complex_to_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

Complex complex_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::runtime_error("expected [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json coeffs_to_json(const std::vector<Complex>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const Complex& c : coeffs) arr.push_back(complex_to_json(c));
    return arr;
}

std::vector<Complex> coeffs_from_json(const ordered_json& j) {
    std::vector<Complex> coeffs;
    for (const auto& item : j) coeffs.push_back(complex_from_json(item));
    return coeffs;
}

void require_kind(const ordered_json& j, const std::string& kind) {
    if (!j.contains("kind") || j.at("kind").get<std::string>() != kind)
        throw std::runtime_error("schema mismatch: expected kind \"" + kind + "\"");
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::runtime_error("schema mismatch: unsupported schema_version");
}

} // namespace

ordered_json to_json(const Region& region) {
    ordered_json j;
    j["label"] = region.label;
    ordered_json sectors = ordered_json::array();
    for (const AnnularSector& sec : region.sectors) {
        ordered_json s;
        s["rho_min"] = sec.rho_min;
        s["rho_max"] = sec.rho_max;
        s["theta_min"] = sec.theta_min;
        s["theta_max"] = sec.theta_max;
        sectors.push_back(std::move(s));
    }
    j["sectors"] = std::move(sectors);
    return j;
}

Region region_from_json(const ordered_json& j) {
    Region region;
    region.label = j.value("label", std::string{});
    for (const auto& s : j.at("sectors")) {
        AnnularSector sec;
        sec.rho_min = s.at("rho_min").get<double>();
        sec.rho_max = s.at("rho_max").get<double>();
        sec.theta_min = s.at("theta_min").get<double>();
        sec.theta_max = s.at("theta_max").get<double>();
        region.sectors.push_back(sec);
    }
    return region;
}

ordered_json to_json(const BoundConfig& cfg) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bound_config";
    j["c_remez"] = cfg.c_remez;
    j["c1"] = cfg.c1;
    j["c_dprime"] = cfg.c_dprime;
    j["c_ov"] = cfg.c_ov;
    j["D_const"] = cfg.D_const;
    ordered_json prov;
    for (const auto& [field, source] : cfg.provenance) prov[field] = source;
    j["provenance"] = std::move(prov);
    return j;
}

BoundConfig bound_config_from_json(const ordered_json& j) {
    require_kind(j, "bound_config");
    BoundConfig cfg = BoundConfig::defaults();
    cfg.c_remez = j.at("c_remez").get<double>();
    cfg.c1 = j.at("c1").get<double>();
    cfg.c_dprime = j.at("c_dprime").get<double>();
    cfg.c_ov = j.at("c_ov").get<double>();
    cfg.D_const = j.at("D_const").get<double>();
    if (j.contains("provenance"))
        for (const auto& [field, source] : j.at("provenance").items())
            cfg.provenance[field] = source.get<std::string>();
    validate(cfg);
    return cfg;
}

ordered_json to_json(const DensityReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "density_report";
    j["r"] = report.r;
    j["gamma_hat"] = report.gamma_hat;
    j["gamma_hat_direction"] = "grid minimum: an upper bound for the true density";
    j["argmin_center"] = complex_to_json(report.argmin_center);
    j["grid_resolution"] = report.grid_resolution;
    return j;
}

ordered_json to_json(const CoveringReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "covering_report";
    j["r"] = report.r;
    j["measured_N"] = report.measured_N;
    j["bound_N"] = report.bound_N;
    j["covering_ok"] = report.covering_ok;
    j["uncovered_fraction"] = report.uncovered_fraction;
    return j;
}

ordered_json to_json(const SamplingResult& result) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "sampling_result";
    j["C_hat"] = result.C_hat;
    j["degree"] = result.degree;
    j["p"] = result.params.p;
    j["alpha"] = result.params.alpha;
    j["region_label"] = result.region_label;
    j["extremal_coeffs"] = coeffs_to_json(result.extremal_coeffs);
    return j;
}

ordered_json to_json(const GoodMassReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "good_mass_report";
    j["c"] = report.c;
    j["K"] = report.K;
    j["measured_N"] = report.measured_N;
    j["good_mass_fraction"] = report.good_mass_fraction;
    j["tail_fraction"] = report.tail_fraction;
    j["frame_sum_s"] = report.frame_sum_s;
    j["mass_ok"] = report.mass_ok;
    j["frame_lower_ok"] = report.frame_lower_ok;
    j["frame_upper_ok"] = report.frame_upper_ok;
    return j;
}

ordered_json to_json(const KovrijkineReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "local_sup_report";
    j["r"] = report.r;
    j["rho"] = report.rho;
    j["p"] = report.p;
    j["sup_lhs"] = report.sup_lhs;
    j["sup_E"] = report.sup_E;
    j["M"] = report.M;
    j["area_E"] = report.area_E;
    j["eta"] = report.eta;
    j["base"] = report.base;
    j["lp_lhs"] = report.lp_lhs;
    j["lp_E"] = report.lp_E;
    j["log_ratio_sup"] = report.log_ratio_sup;
    j["log_ratio_lp"] = report.log_ratio_lp;
    j["ratio_sup"] = report.ratio_sup;
    j["ratio_lp"] = report.ratio_lp;
    j["ok_sup"] = report.ok_sup;
    j["ok_lp"] = report.ok_lp;
    return j;
}

ordered_json to_json(const BoundReport& report, const BoundConfig& cfg,
                     const std::string& region_label) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "bound_report";
    j["region_label"] = region_label;
    j["gamma"] = report.gamma;
    j["r"] = report.r;
    j["p"] = report.params.p;
    j["alpha"] = report.params.alpha;
    j["L"] = report.L;
    j["eta"] = report.eta;
    j["N_bound"] = report.N_bound;
    j["K"] = report.K;
    j["M"] = report.M;
    j["C_lower_theory"] = report.C_lower_theory;
    j["C_upper_necessary"] = report.C_upper_necessary;
    if (report.C_measured) {
        j["C_measured"] = *report.C_measured;
        j["lower_ok"] = report.lower_ok;
        j["upper_ok"] = report.upper_ok;
    }
    j["bound_config"] = to_json(cfg);
    return j;
}

ordered_json to_json(const RemezSample& sample) {
    ordered_json j;
    j["degree"] = sample.degree;
    j["s"] = sample.s;
    j["boundary_sup"] = sample.boundary_sup;
    j["poly_coeffs"] = coeffs_to_json(sample.poly_coeffs);
    return j;
}

RemezSample remez_sample_from_json(const ordered_json& j) {
    RemezSample sample;
    sample.degree = j.at("degree").get<int>();
    sample.s = j.at("s").get<double>();
    sample.boundary_sup = j.at("boundary_sup").get<double>();
    sample.poly_coeffs = coeffs_from_json(j.at("poly_coeffs"));
    return sample;
}

ordered_json to_json(const RemezFit& fit) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "remez_fit";
    j["domain_radius"] = fit.domain_radius;
    j["c_fitted"] = fit.c_fitted;
    j["max_residual"] = fit.max_residual;
    j["shape_slope"] = fit.shape_slope;
    j["shape_ok"] = fit.shape_ok;
    ordered_json samples = ordered_json::array();
    for (const RemezSample& sample : fit.samples) samples.push_back(to_json(sample));
    j["samples"] = std::move(samples);
    return j;
}

RemezFit remez_fit_from_json(const ordered_json& j) {
    require_kind(j, "remez_fit");
    RemezFit fit;
    fit.domain_radius = j.at("domain_radius").get<double>();
    fit.c_fitted = j.at("c_fitted").get<double>();
    fit.max_residual = j.at("max_residual").get<double>();
    fit.shape_slope = j.at("shape_slope").get<double>();
    fit.shape_ok = j.at("shape_ok").get<bool>();
    for (const auto& item : j.at("samples")) fit.samples.push_back(remez_sample_from_json(item));
    return fit;
}

ordered_json combine_reports(const std::vector<ordered_json>& reports) {
    if (reports.empty()) throw std::invalid_argument("combine_reports: no input reports");
    ordered_json table;
    table["schema_version"] = kSchemaVersion;
    table["kind"] = "sandwich_table";
    ordered_json rows = ordered_json::array();
    for (const ordered_json& report : reports) {
        require_kind(report, "bound_report");
        ordered_json row;
        row["region_label"] = report.value("region_label", std::string{});
        row["gamma"] = report.at("gamma");
        row["r"] = report.at("r");
        row["C_lower_theory"] = report.at("C_lower_theory");
        if (report.contains("C_measured")) {
            row["C_measured"] = report.at("C_measured");
            row["lower_ok"] = report.at("lower_ok");
            row["upper_ok"] = report.at("upper_ok");
        }
        row["C_upper_necessary"] = report.at("C_upper_necessary");
        rows.push_back(std::move(row));
    }
    table["rows"] = std::move(rows);
    table["gamma_hat_direction"] = "grid minimum: an upper bound for the true density";
    table["bound_config"] = reports.front().at("bound_config");
    return table;
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ordered_json j;
    in >> j;
    return j;
}

void save_json(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

void save_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    out << std::setprecision(17);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("save_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

Region load_region(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return builtin_region(spec.substr(prefix.size()));
    return region_from_json(load_json(spec));
}

} // namespace bergsamp::io

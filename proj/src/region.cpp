#include "bergsamp/region.hpp"

#include "bergsamp/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bergsamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Reduces a sector's angular interval to one or two arcs within [0, 2*pi).
void append_reduced_arcs(double theta_min, double theta_max,
                         std::vector<std::pair<double, double>>& arcs) {
    const double width = theta_max - theta_min;
    if (width <= 0.0) return;
    if (width >= kTwoPi - 1e-15) {
        arcs.emplace_back(0.0, kTwoPi);
        return;
    }
    const double start = wrap_angle(theta_min);
    const double end = start + width;
    if (end <= kTwoPi) {
        arcs.emplace_back(start, end);
    } else {
        arcs.emplace_back(start, kTwoPi);
        arcs.emplace_back(0.0, end - kTwoPi);
    }
}

std::vector<std::pair<double, double>> merge_arcs(std::vector<std::pair<double, double>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& arc : arcs) {
        if (arc.second - arc.first <= 1e-15) continue;
        if (!merged.empty() && arc.first <= merged.back().second + 1e-15) {
            merged.back().second = std::max(merged.back().second, arc.second);
        } else {
            merged.push_back(arc);
        }
    }
    return merged;
}

} // namespace

double RadialBand::angular_width() const {
    double w = 0.0;
    for (const auto& arc : arcs) w += arc.second - arc.first;
    return w;
}

bool RadialBand::contains_angle(double theta) const {
    for (const auto& arc : arcs)
        if (theta >= arc.first && theta < arc.second) return true;
    return false;
}

void validate(const Region& region, double max_rho) {
    for (const AnnularSector& s : region.sectors) {
        if (!(s.rho_min >= 0.0 && s.rho_min < s.rho_max && s.rho_max <= max_rho))
            throw std::invalid_argument("region: sector radii must satisfy 0 <= rho_min < rho_max <= " +
                                        std::to_string(max_rho));
        const double width = s.theta_max - s.theta_min;
        if (!(width >= 0.0 && width <= kTwoPi + 1e-12))
            throw std::invalid_argument("region: sector angular width must lie in [0, 2*pi]");
    }
}

std::vector<RadialBand> disjoint_bands(const Region& region) {
    std::vector<double> breaks;
    for (const AnnularSector& s : region.sectors) {
        breaks.push_back(s.rho_min);
        breaks.push_back(s.rho_max);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [](double a, double b) { return std::abs(a - b) <= 1e-14; }),
                 breaks.end());

    std::vector<RadialBand> bands;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double lo = breaks[i];
        const double hi = breaks[i + 1];
        if (hi - lo <= 1e-15) continue;
        const double mid = 0.5 * (lo + hi);
        std::vector<std::pair<double, double>> arcs;
        for (const AnnularSector& s : region.sectors) {
            if (s.rho_min <= mid && mid < s.rho_max)
                append_reduced_arcs(s.theta_min, s.theta_max, arcs);
        }
        arcs = merge_arcs(std::move(arcs));
        if (!arcs.empty()) bands.push_back(RadialBand{lo, hi, std::move(arcs)});
    }
    return bands;
}

double region_area(const Region& region) {
    validate(region);
    double area = 0.0;
    for (const RadialBand& band : disjoint_bands(region))
        area += band.angular_width() / kTwoPi *
                (band.rho_max * band.rho_max - band.rho_min * band.rho_min);
    return area;
}

double region_area(const Region& region, double alpha) {
    validate(region);
    if (!(alpha > -1.0)) throw std::invalid_argument("region_area: alpha > -1 required");
    double area = 0.0;
    for (const RadialBand& band : disjoint_bands(region)) {
        const double lo = 1.0 - band.rho_min * band.rho_min;
        const double hi = 1.0 - band.rho_max * band.rho_max;
        area += band.angular_width() / kTwoPi *
                (std::pow(lo, alpha + 1.0) - std::pow(hi, alpha + 1.0));
    }
    return area;
}

double intersect_disk_area(const Region& region, const EuclideanDisk& disk) {
    validate(region);
    if (!(disk.radius > 0.0)) return 0.0;
    const std::vector<RadialBand> bands = disjoint_bands(region);
    if (bands.empty()) return 0.0;

    const double d = std::abs(disk.center);
    const double R = disk.radius;
    const double phase = std::arg(disk.center);
    double theta_lo, theta_hi;
    if (d <= R) {
        theta_lo = 0.0;
        theta_hi = kTwoPi;
    } else {
        const double spread = std::asin(std::min(1.0, R / d));
        theta_lo = phase - spread;
        theta_hi = phase + spread;
    }

    const auto evaluate = [&](int n_theta) {
        const double h = (theta_hi - theta_lo) / n_theta;
        double acc = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            const double theta = theta_lo + (j + 0.5) * h;
            const double delta = theta - phase;
            const double disc = R * R - d * d * std::sin(delta) * std::sin(delta);
            if (disc <= 0.0) continue;
            const double root = std::sqrt(disc);
            const double mid = d * std::cos(delta);
            const double rho_in = std::max(0.0, mid - root);
            const double rho_out = mid + root;
            if (rho_out <= rho_in) continue;
            const double wrapped = wrap_angle(theta);
            double ray = 0.0;
            for (const RadialBand& band : bands) {
                const double lo = std::max(band.rho_min, rho_in);
                const double hi = std::min(band.rho_max, rho_out);
                if (hi > lo && band.contains_angle(wrapped)) ray += hi * hi - lo * lo;
            }
            acc += 0.5 * ray;
        }
        return acc * h / std::numbers::pi;
    };

    int n = 256;
    double prev = evaluate(n);
    while (n < 65536) {
        n *= 2;
        const double next = evaluate(n);
        if (std::abs(next - prev) <= 1e-4 * std::max(std::abs(next), 1e-12)) return next;
        prev = next;
    }
    return prev;
}

DensityReport density(const Region& region, double r, int center_grid_resolution) {
    validate(region);
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("density: r in (0,1) required");
    if (center_grid_resolution < 2)
        throw std::invalid_argument("density: center_grid_resolution >= 2 required");

    const int res = center_grid_resolution;
    const double rho_max = 1.0 - 1e-3;
    struct RowResult {
        double min_ratio = 2.0;
        Complex argmin;
    };
    std::vector<RowResult> rows(res);
    parallel_for(res, [&](std::size_t i) {
        const double rho = rho_max * static_cast<double>(i) / (res - 1);
        RowResult row;
        const int n_theta = (i == 0) ? 1 : res;
        for (int j = 0; j < n_theta; ++j) {
            const double theta = kTwoPi * j / res;
            const Complex z = rho * Complex(std::cos(theta), std::sin(theta));
            const EuclideanDisk disk = phb_disk_to_euclidean(z, r);
            const double ratio = intersect_disk_area(region, disk) / (disk.radius * disk.radius);
            if (ratio < row.min_ratio) {
                row.min_ratio = ratio;
                row.argmin = z;
            }
        }
        rows[i] = row;
    });

    DensityReport report;
    report.r = r;
    report.grid_resolution = res;
    report.gamma_hat = 2.0;
    for (const RowResult& row : rows) {
        if (row.min_ratio < report.gamma_hat) {
            report.gamma_hat = row.min_ratio;
            report.argmin_center = row.argmin;
        }
    }
    report.gamma_hat = std::clamp(report.gamma_hat, 0.0, 1.0);
    return report;
}

namespace {

struct ParsedName {
    std::string base;
    std::vector<double> args;
};

ParsedName parse_region_name(const std::string& name) {
    ParsedName parsed;
    const auto open = name.find('(');
    if (open == std::string::npos) {
        parsed.base = name;
        return parsed;
    }
    if (name.back() != ')') throw std::invalid_argument("builtin_region: malformed name '" + name + "'");
    parsed.base = name.substr(0, open);
    std::string body = name.substr(open + 1, name.size() - open - 2);
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            parsed.args.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw std::invalid_argument("builtin_region: bad argument '" + token + "' in '" + name + "'");
        }
    }
    return parsed;
}

long integral_arg(double v, const char* what) {
    const long n = std::lround(v);
    if (std::abs(v - n) > 1e-9) throw std::invalid_argument(std::string("builtin_region: ") + what + " must be an integer");
    return n;
}

} // namespace

Region builtin_region(const std::string& name) {
    const ParsedName parsed = parse_region_name(name);
    const auto& args = parsed.args;
    Region region;
    region.label = name;

    if (parsed.base == "full" && args.empty()) {
        region.sectors.push_back({0.0, 1.0, 0.0, kTwoPi});
    } else if (parsed.base == "empty" && args.empty()) {
        // no sectors
    } else if (parsed.base == "annulus" && (args.size() == 1 || args.size() == 2)) {
        const double a = args[0];
        const double b = args.size() == 2 ? args[1] : 1.0;
        region.sectors.push_back({a, b, 0.0, kTwoPi});
    } else if (parsed.base == "annuli" && (args.size() == 1 || args.size() == 2)) {
        const double eps = args[0];
        if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("builtin_region: annuli eps in (0,1)");
        const long n_max = args.size() == 2 ? integral_arg(args[1], "annuli n_max") : 8;
        for (long n = 0; n <= n_max; ++n) {
            const double base = std::ldexp(1.0, -static_cast<int>(n));
            region.sectors.push_back({1.0 - base, 1.0 - (1.0 - eps) * base, 0.0, kTwoPi});
        }
    } else if (parsed.base == "grating" && args.size() == 2) {
        const long m = integral_arg(args[0], "grating count");
        const double fill = args[1];
        if (m < 1 || !(fill > 0.0 && fill <= 1.0))
            throw std::invalid_argument("builtin_region: grating needs m >= 1, fill in (0,1]");
        for (long k = 0; k < m; ++k) {
            const double start = kTwoPi * k / m;
            region.sectors.push_back({0.0, 1.0, start, start + fill * kTwoPi / m});
        }
    } else if (parsed.base == "holes" && args.size() == 3) {
        const long m = integral_arg(args[0], "holes count");
        const double rho = args[1];
        const double d = args[2];
        if (m < 1 || !(d > 0.0) || !(rho - d > 0.0) || !(rho + d < 1.0) || !(d / rho < std::numbers::pi / m))
            throw std::invalid_argument("builtin_region: holes(m,rho,d) needs disjoint holes inside the disk");
        region.sectors.push_back({0.0, rho - d, 0.0, kTwoPi});
        region.sectors.push_back({rho + d, 1.0, 0.0, kTwoPi});
        const double half = d / rho;
        for (long k = 0; k < m; ++k) {
            const double center = kTwoPi * k / m;
            region.sectors.push_back({rho - d, rho + d, center + half, center + kTwoPi / m - half});
        }
    } else if (parsed.base == "sector" && args.size() == 4) {
        region.sectors.push_back({args[0], args[1], args[2], args[3]});
    } else if (parsed.base == "random" && args.size() == 2) {
        const long count = integral_arg(args[0], "random count");
        const long seed = integral_arg(args[1], "random seed");
        if (count < 1) throw std::invalid_argument("builtin_region: random count >= 1");
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (long i = 0; i < count; ++i) {
            const double lo = 0.8 * unit(rng);
            const double hi = lo + 0.1 + 0.6 * (1.0 - lo - 0.1) * unit(rng);
            const double start = kTwoPi * unit(rng);
            const double width = (0.15 + 0.85 * unit(rng)) * kTwoPi / 3.0;
            region.sectors.push_back({lo, hi, start, start + width});
        }
    } else {
        throw std::invalid_argument("builtin_region: unknown region '" + name + "'");
    }

    validate(region);
    return region;
}

std::vector<std::string> builtin_region_names() {
    return {"full",
            "empty",
            "annulus(a)",
            "annulus(a,b)",
            "annuli(eps)",
            "annuli(eps,n_max)",
            "grating(m,fill)",
            "holes(m,rho,d)",
            "sector(rho_min,rho_max,theta_min,theta_max)",
            "random(count,seed)"};
}

} // namespace bergsamp

#include "bergsamp/analysis.hpp"

#include "bergsamp/quadrature.hpp"
#include "bergsamp/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergsamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
    if (coeffs.empty()) return 0.0;
    Complex acc = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

// (phi_a')^q with the fixed branch: phi_a' = (1-|a|^2) e^{i pi} (1 - conj(a) z)^{-2}
// and the principal logarithm of 1 - conj(a) z (real part positive on the disk).
Complex jacobian_branch(Complex a, Complex z, double q) {
    const Complex log_constant(std::log(1.0 - std::norm(a)), std::numbers::pi);
    const Complex log_den = std::log(1.0 - std::conj(a) * z);
    return std::exp(q * (log_constant - 2.0 * log_den));
}

Complex evaluate_unchecked(const AnalyticFunction& f, Complex z) {
    Complex w = z;
    Complex jac = 1.0;
    if (f.mobius_center) {
        const Complex a = *f.mobius_center;
        w = (a - z) / (1.0 - std::conj(a) * z);
        if (f.jacobian_power != 0.0) jac = jacobian_branch(a, z, f.jacobian_power);
    }
    return f.scalar * horner(f.coeffs, w) * jac;
}

double abs_p(const AnalyticFunction& f, Complex z, double p) {
    const double sq = std::norm(evaluate_unchecked(f, z));
    if (p == 2.0) return sq;
    return std::pow(sq, 0.5 * p);
}

bool is_nonneg_integer(double v) { return v >= 0.0 && v == std::floor(v); }

// Quadrature is exact (no refinement needed) when the integrand is a genuine
// polynomial in (x, y): plain polynomial, even integer p, integer alpha >= 0.
bool exact_integrand(const AnalyticFunction& f, const SpaceParams& sp) {
    return f.plain() && is_nonneg_integer(sp.p) && std::fmod(sp.p, 2.0) == 0.0 &&
           is_nonneg_integer(sp.alpha);
}

bool full_circle(const RadialBand& band) {
    return band.arcs.size() == 1 && band.arcs[0].first == 0.0 && band.arcs[0].second == kTwoPi;
}

// Zeros of the analytic factor. Transported functions pull the coefficient
// roots through the (involutive) automorphism; the jacobian factor never
// vanishes inside the disk.
std::vector<Complex> function_zeros(const AnalyticFunction& f) {
    std::vector<Complex> zeros;
    for (Complex r : polynomial_roots(f.coeffs)) {
        if (f.mobius_center) {
            const Complex a = *f.mobius_center;
            const Complex den = 1.0 - std::conj(a) * r;
            if (std::abs(den) < 1e-14) continue;
            r = (a - r) / den;
        }
        zeros.push_back(r);
    }
    return zeros;
}

// |f|^p is real-analytic only for even integer p; otherwise each zero of f is
// an algebraic singularity, and tensor Gauss rules converge fast only when the
// zeros sit at panel corners: cut the radial direction at the zero distances
// and the angular direction at the zero directions, both relative to `center`.
struct PolarCuts {
    std::vector<double> radii;
    std::vector<double> angles;
};

void sort_and_merge(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> merged; // conjugate or clustered roots give duplicates
    for (const double s : v)
        if (merged.empty() || s - merged.back() > 1e-9) merged.push_back(s);
    v = std::move(merged);
}

PolarCuts polar_cuts(const AnalyticFunction& f, const SpaceParams& sp, Complex center,
                     double hi) {
    PolarCuts cuts;
    if (is_nonneg_integer(sp.p) && std::fmod(sp.p, 2.0) == 0.0) return cuts;
    for (const Complex z : function_zeros(f)) {
        const Complex d = z - center;
        const double s = std::abs(d);
        // a zero exactly at the pole is already a panel endpoint and has no
        // angular direction; zeros far outside leave the integrand smooth
        if (s <= 1e-9 || s >= 1.25 * hi) continue;
        if (s < hi - 1e-9) cuts.radii.push_back(s);
        // zeros on or just beyond the rim still imprint a cusp-like dip on the
        // circles near them, so they keep their angular cut even without a
        // radial one
        double th = std::atan2(d.imag(), d.real());
        if (th < 0.0) th += kTwoPi;
        cuts.angles.push_back(th);
    }
    sort_and_merge(cuts.radii);
    sort_and_merge(cuts.angles);
    return cuts;
}

// Insert the cut angles into each band's arcs so zero directions become arc
// endpoints; a full circle degrades to a chain of Gauss panels.
void split_arcs(RadialBand& band, const std::vector<double>& angles) {
    std::vector<std::pair<double, double>> arcs;
    for (const auto& arc : band.arcs) {
        double lo = arc.first;
        for (const double th : angles) {
            if (th > lo + 1e-9 && th < arc.second - 1e-9) {
                arcs.push_back({lo, th});
                lo = th;
            }
        }
        arcs.push_back({lo, arc.second});
    }
    band.arcs = std::move(arcs);
}

struct Nodes {
    std::vector<double> a;
    std::vector<double> w;
};

// Radial nodes for one band with the weight (1-rho^2)^alpha rho folded in.
// Bands touching rho = 1 route the (1-rho)^alpha factor through the Jacobi rule.
Nodes radial_nodes(const RadialBand& band, double alpha, int n) {
    Nodes nodes;
    nodes.a.reserve(n);
    nodes.w.reserve(n);
    if (band.rho_max >= 1.0 - 1e-12) {
        const quad::Rule rule = quad::gauss_jacobi01(n, alpha);
        const double lo = band.rho_min;
        const double span = 1.0 - lo;
        const double scale = std::pow(span, alpha + 1.0);
        for (int i = 0; i < n; ++i) {
            const double rho = lo + span * rule.x[i];
            nodes.a.push_back(rho);
            nodes.w.push_back(scale * rule.w[i] * std::pow(1.0 + rho, alpha) * rho);
        }
    } else {
        const quad::Rule rule = quad::gauss_legendre_on(n, band.rho_min, band.rho_max);
        for (int i = 0; i < n; ++i) {
            const double rho = rule.x[i];
            nodes.a.push_back(rho);
            nodes.w.push_back(rule.w[i] * std::pow(1.0 - rho * rho, alpha) * rho);
        }
    }
    return nodes;
}

Nodes angular_nodes(const RadialBand& band, int n) {
    Nodes nodes;
    if (full_circle(band)) {
        const quad::Rule rule = quad::periodic_trapezoid(n);
        nodes.a = rule.x;
        nodes.w = rule.w;
        return nodes;
    }
    for (const auto& arc : band.arcs) {
        const double width = arc.second - arc.first;
        const int n_arc = std::max(8, static_cast<int>(std::ceil(n * width / kTwoPi)) + 4);
        const quad::Rule rule = quad::gauss_legendre_on(n_arc, arc.first, arc.second);
        nodes.a.insert(nodes.a.end(), rule.x.begin(), rule.x.end());
        nodes.w.insert(nodes.w.end(), rule.w.begin(), rule.w.end());
    }
    return nodes;
}

double bands_integral_at(const AnalyticFunction& f, const SpaceParams& sp,
                         const std::vector<RadialBand>& bands, int n_rad, int n_ang) {
    double acc = 0.0;
    for (const RadialBand& band : bands) {
        const Nodes rad = radial_nodes(band, sp.alpha, n_rad);
        const Nodes ang = angular_nodes(band, n_ang);
        double band_acc = 0.0;
        for (std::size_t i = 0; i < rad.a.size(); ++i) {
            const double rho = rad.a[i];
            double ring = 0.0;
            for (std::size_t j = 0; j < ang.a.size(); ++j) {
                const Complex z = rho * Complex(std::cos(ang.a[j]), std::sin(ang.a[j]));
                ring += ang.w[j] * abs_p(f, z, sp.p);
            }
            band_acc += rad.w[i] * ring;
        }
        acc += band_acc;
    }
    return acc * (sp.alpha + 1.0) / std::numbers::pi;
}

// integral over the bands of |f|^p dA_alpha, with doubling refinement to
// 1e-10 relative unless the integrand is exactly resolvable.
double bands_integral(const AnalyticFunction& f, const SpaceParams& sp,
                      const std::vector<RadialBand>& bands) {
    if (bands.empty()) return 0.0;
    const int deg = f.degree();
    const double pdeg = sp.p * deg + 2.0 * std::max(sp.alpha, 0.0);

    const bool all_full = std::all_of(bands.begin(), bands.end(), full_circle);
    if (exact_integrand(f, sp) && all_full) {
        const int n_rad = static_cast<int>(pdeg) / 2 + 2;
        const int n_ang = static_cast<int>(pdeg) + 1;
        return bands_integral_at(f, sp, bands, n_rad, n_ang);
    }

    const int base_rad = std::max(24, static_cast<int>(std::ceil(pdeg / 2.0)) + 6);
    const int base_ang = std::max(48, static_cast<int>(std::ceil(pdeg)) + 8);

    // cut each band at the zero radii and directions so the fractional-p
    // singularities land on panel corners
    const PolarCuts cuts = polar_cuts(f, sp, 0.0, 1.0);
    std::vector<RadialBand> panels;
    for (const RadialBand& band : bands) {
        double lo = band.rho_min;
        for (const double s : cuts.radii) {
            if (s > lo + 1e-9 && s < band.rho_max - 1e-9) {
                panels.push_back({lo, s, band.arcs});
                lo = s;
            }
        }
        panels.push_back({lo, band.rho_max, band.arcs});
    }
    if (!cuts.angles.empty())
        for (RadialBand& band : panels) split_arcs(band, cuts.angles);

    return refine_doubling(
        [&](int level) {
            return bands_integral_at(f, sp, panels, base_rad << level, base_ang << level);
        },
        5, 1e-10, "bergman_norm: quadrature refinement stalled above tolerance");
}

double disk_integral_at(const AnalyticFunction& f, const SpaceParams& sp,
                        const EuclideanDisk& disk, const PolarCuts& cuts, int n_rad,
                        int n_ang) {
    quad::Rule ang;
    if (cuts.angles.empty()) {
        ang = quad::periodic_trapezoid(n_ang);
    } else {
        std::vector<double> bounds = {0.0};
        for (const double th : cuts.angles) bounds.push_back(th);
        bounds.push_back(kTwoPi);
        for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
            const double width = bounds[k + 1] - bounds[k];
            const int n_arc =
                std::max(8, static_cast<int>(std::ceil(n_ang * width / kTwoPi)) + 4);
            const quad::Rule piece = quad::gauss_legendre_on(n_arc, bounds[k], bounds[k + 1]);
            ang.x.insert(ang.x.end(), piece.x.begin(), piece.x.end());
            ang.w.insert(ang.w.end(), piece.w.begin(), piece.w.end());
        }
    }
    std::vector<double> edges = {0.0};
    for (const double s : cuts.radii) edges.push_back(s);
    edges.push_back(disk.radius);

    double acc = 0.0;
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const quad::Rule rad = quad::gauss_legendre_on(n_rad, edges[seg], edges[seg + 1]);
        for (int i = 0; i < n_rad; ++i) {
            const double s = rad.x[i];
            double ring = 0.0;
            for (std::size_t j = 0; j < ang.x.size(); ++j) {
                const Complex z =
                    disk.center + s * Complex(std::cos(ang.x[j]), std::sin(ang.x[j]));
                const double nz = std::max(0.0, 1.0 - std::norm(z));
                if (nz == 0.0 && sp.alpha < 0.0) continue;
                ring += ang.w[j] * std::pow(nz, sp.alpha) * abs_p(f, z, sp.p);
            }
            acc += rad.w[i] * s * ring;
        }
    }
    return acc * (sp.alpha + 1.0) / std::numbers::pi;
}

double disk_integral(const AnalyticFunction& f, const SpaceParams& sp, const EuclideanDisk& disk) {
    if (!(disk.radius > 0.0)) return 0.0;
    if (std::abs(disk.center) + disk.radius > 1.0 + 1e-9)
        throw std::domain_error("bergman_norm_disk: disk must lie inside the unit disk");
    const int deg = f.degree();
    const double pdeg = sp.p * deg + 2.0 * std::max(sp.alpha, 0.0);

    if (exact_integrand(f, sp)) {
        const int n_rad = static_cast<int>(pdeg) / 2 + 2;
        const int n_ang = static_cast<int>(pdeg) + 1;
        return disk_integral_at(f, sp, disk, PolarCuts{}, n_rad, n_ang);
    }

    const PolarCuts cuts = polar_cuts(f, sp, disk.center, disk.radius);
    const int base_rad = std::max(24, static_cast<int>(std::ceil(pdeg / 2.0)) + 6);
    const int base_ang = std::max(48, static_cast<int>(std::ceil(pdeg)) + 8);
    return refine_doubling(
        [&](int level) {
            return disk_integral_at(f, sp, disk, cuts, base_rad << level, base_ang << level);
        },
        5, 1e-10, "bergman_norm_disk: quadrature refinement stalled above tolerance");
}

std::vector<RadialBand> full_disk_bands() {
    return {RadialBand{0.0, 1.0, {{0.0, kTwoPi}}}};
}

// Radial moments integral rho^{m+1} (1-rho^2)^alpha d rho over the band,
// m = 0..m_max, refined to 1e-12 relative.
std::vector<double> radial_moments(const RadialBand& band, double alpha, int m_max) {
    const auto compute = [&](int n) {
        const Nodes rad = radial_nodes(band, alpha, n);
        std::vector<double> mom(m_max + 1, 0.0);
        for (std::size_t i = 0; i < rad.a.size(); ++i) {
            double power = rad.w[i]; // rho^0 * folded weight (already includes one rho)
            for (int m = 0; m <= m_max; ++m) {
                mom[m] += power;
                power *= rad.a[i];
            }
        }
        return mom;
    };

    int n = std::max(48, m_max / 2 + 16);
    std::vector<double> prev = compute(n);
    for (int level = 0; level < 4; ++level) {
        n *= 2;
        std::vector<double> cur = compute(n);
        double worst = 0.0;
        for (int m = 0; m <= m_max; ++m) {
            const double scale = std::max(std::abs(cur[m]), 1e-250);
            worst = std::max(worst, std::abs(cur[m] - prev[m]) / scale);
        }
        if (worst <= 1e-12) return cur;
        prev = std::move(cur);
    }
    throw ConvergenceError("gram_matrix: radial moment refinement stalled");
}

} // namespace

void validate(const SpaceParams& params) {
    if (!(params.p >= 1.0)) throw std::invalid_argument("SpaceParams: p >= 1 required");
    if (!(params.alpha > -1.0)) throw std::invalid_argument("SpaceParams: alpha > -1 required");
}

AnalyticFunction polynomial(std::vector<Complex> coeffs) {
    AnalyticFunction f;
    f.coeffs = std::move(coeffs);
    return f;
}

Complex evaluate(const AnalyticFunction& f, Complex z) {
    // plain polynomials are entire; only the automorphism restricts the domain
    if (!f.plain() && std::abs(z) >= 1.0 - kBoundaryTol)
        throw std::domain_error("evaluate: point outside the open unit disk");
    return evaluate_unchecked(f, z);
}

double monomial_norm_p2(int n, double alpha) {
    if (n < 0) throw std::invalid_argument("monomial_norm_p2: n >= 0 required");
    if (!(alpha > -1.0)) throw std::invalid_argument("monomial_norm_p2: alpha > -1 required");
    return std::exp(std::lgamma(alpha + 2.0) + std::lgamma(n + 1.0) - std::lgamma(n + alpha + 2.0));
}

double bergman_norm(const AnalyticFunction& f, const SpaceParams& params) {
    validate(params);
    if (f.plain() && params.p == 2.0) {
        double sum = 0.0;
        for (std::size_t n = 0; n < f.coeffs.size(); ++n)
            sum += std::norm(f.coeffs[n]) * monomial_norm_p2(static_cast<int>(n), params.alpha);
        return std::abs(f.scalar) * std::sqrt(sum);
    }
    return bergman_norm_quadrature(f, params);
}

double bergman_norm_quadrature(const AnalyticFunction& f, const SpaceParams& params) {
    validate(params);
    return std::pow(bands_integral(f, params, full_disk_bands()), 1.0 / params.p);
}

double bergman_norm(const AnalyticFunction& f, const SpaceParams& params, const Region& E) {
    validate(params);
    validate(E);
    return std::pow(bands_integral(f, params, disjoint_bands(E)), 1.0 / params.p);
}

double bergman_norm_disk(const AnalyticFunction& f, const SpaceParams& params,
                         const EuclideanDisk& disk) {
    validate(params);
    return std::pow(disk_integral(f, params, disk), 1.0 / params.p);
}

Eigen::MatrixXcd gram_matrix(const Region& E, int degree, double alpha) {
    if (degree < 0) throw std::invalid_argument("gram_matrix: degree >= 0 required");
    if (!(alpha > -1.0)) throw std::invalid_argument("gram_matrix: alpha > -1 required");
    validate(E);

    const int size = degree + 1;
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(size, size);
    for (const RadialBand& band : disjoint_bands(E)) {
        const std::vector<double> mom = radial_moments(band, alpha, 2 * degree);
        std::vector<Complex> ang(degree + 1);
        for (int k = 0; k <= degree; ++k) {
            Complex sum = 0.0;
            for (const auto& arc : band.arcs) {
                if (k == 0) {
                    sum += arc.second - arc.first;
                } else {
                    const Complex ik(0.0, static_cast<double>(k));
                    sum += (std::exp(ik * arc.second) - std::exp(ik * arc.first)) / ik;
                }
            }
            ang[k] = sum;
        }
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j <= i; ++j) {
                G(i, j) += mom[i + j] * ang[i - j];
            }
        }
    }
    G *= (alpha + 1.0) / std::numbers::pi;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) G(i, j) = std::conj(G(j, i));
    return G;
}

GramPencil gram_pencil(const Region& E, int degree, double alpha) {
    GramPencil pencil;
    pencil.G_E = gram_matrix(E, degree, alpha);
    pencil.G_full_diag = Eigen::VectorXd(degree + 1);
    for (int n = 0; n <= degree; ++n) pencil.G_full_diag(n) = monomial_norm_p2(n, alpha);
    pencil.degree = degree;
    pencil.params = SpaceParams{2.0, alpha};
    return pencil;
}

AnalyticFunction change_of_variable(const AnalyticFunction& f, Complex a,
                                    const SpaceParams& params) {
    validate(params);
    if (!f.plain())
        throw std::invalid_argument("change_of_variable: composition does not stack");
    if (std::abs(a) >= 1.0 - kBoundaryTol)
        throw std::domain_error("change_of_variable: center outside the open unit disk");
    AnalyticFunction g = f;
    g.mobius_center = a;
    g.jacobian_power = (2.0 + params.alpha) / params.p;
    return g;
}

} // namespace bergsamp

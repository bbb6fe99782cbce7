#include "bergsamp/fock.hpp"

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
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// integral_lo^hi rho^{m+1} e^{-alpha rho^2} drho, exact via incomplete gamma.
double radial_gaussian_moment(int m, double lo, double hi, double alpha) {
    const double a = 0.5 * m + 1.0;
    const double q_lo = gamma_q(a, alpha * lo * lo);
    const double q_hi = gamma_q(a, alpha * hi * hi);
    return 0.5 * std::exp(std::lgamma(a) - a * std::log(alpha)) * (q_lo - q_hi);
}

// integral of e^{i k theta} over the band's arcs.
Complex angular_factor(const RadialBand& band, int k) {
    const bool full =
        band.arcs.size() == 1 && band.arcs[0].first == 0.0 && band.arcs[0].second == kTwoPi;
    if (k == 0) return band.angular_width();
    if (full) return 0.0;
    Complex sum = 0.0;
    for (const auto& arc : band.arcs) {
        const Complex ik(0.0, static_cast<double>(k));
        sum += (std::exp(ik * arc.second) - std::exp(ik * arc.first)) / ik;
    }
    return sum;
}

double band_power_integral(const FockFunction& f, const FockParams& params,
                           const std::vector<RadialBand>& bands) {
    const int deg = f.degree();

    // |f|^p is real-analytic only for even integer p; otherwise every zero of
    // the polynomial factor is an algebraic singularity, and the tensor rules
    // converge fast only when the zeros sit at panel corners
    double hi = 0.0;
    for (const RadialBand& band : bands) hi = std::max(hi, band.rho_max);
    std::vector<double> cut_radii, cut_angles;
    const bool even_p = params.p == std::floor(params.p) && std::fmod(params.p, 2.0) == 0.0;
    if (!even_p) {
        for (Complex z : polynomial_roots(f.coeffs)) {
            z += f.translation;
            const double s = std::abs(z);
            if (s <= 1e-9 || s >= 1.25 * hi) continue;
            if (s < hi - 1e-9) cut_radii.push_back(s);
            // zeros just past the outer rim still dent the nearby circles, so
            // they keep an angular cut even without a radial one
            double th = std::atan2(z.imag(), z.real());
            if (th < 0.0) th += kTwoPi;
            cut_angles.push_back(th);
        }
        const auto sort_and_merge = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            std::vector<double> merged;
            for (const double s : v)
                if (merged.empty() || s - merged.back() > 1e-9) merged.push_back(s);
            v = std::move(merged);
        };
        sort_and_merge(cut_radii);
        sort_and_merge(cut_angles);
    }
    std::vector<RadialBand> panels;
    for (const RadialBand& band : bands) {
        double lo = band.rho_min;
        for (const double s : cut_radii) {
            if (s > lo + 1e-9 && s < band.rho_max - 1e-9) {
                panels.push_back({lo, s, band.arcs});
                lo = s;
            }
        }
        panels.push_back({lo, band.rho_max, band.arcs});
    }
    if (!cut_angles.empty()) {
        for (RadialBand& band : panels) {
            std::vector<std::pair<double, double>> arcs;
            for (const auto& arc : band.arcs) {
                double lo = arc.first;
                for (const double th : cut_angles) {
                    if (th > lo + 1e-9 && th < arc.second - 1e-9) {
                        arcs.push_back({lo, th});
                        lo = th;
                    }
                }
                arcs.push_back({lo, arc.second});
            }
            band.arcs = std::move(arcs);
        }
    }

    const auto at = [&](int n_rad, int n_ang) {
        double total = 0.0;
        for (const RadialBand& band : panels) {
            const quad::Rule rad = quad::gauss_legendre_on(n_rad, band.rho_min, band.rho_max);
            std::vector<double> theta, wt;
            const bool full = band.arcs.size() == 1 && band.arcs[0].first == 0.0 &&
                              band.arcs[0].second == kTwoPi;
            if (full) {
                const quad::Rule rule = quad::periodic_trapezoid(n_ang);
                theta = rule.x;
                wt = rule.w;
            } else {
                for (const auto& arc : band.arcs) {
                    const double width = arc.second - arc.first;
                    const int n_arc =
                        std::max(8, static_cast<int>(std::ceil(n_ang * width / kTwoPi)) + 4);
                    const quad::Rule rule = quad::gauss_legendre_on(n_arc, arc.first, arc.second);
                    theta.insert(theta.end(), rule.x.begin(), rule.x.end());
                    wt.insert(wt.end(), rule.w.begin(), rule.w.end());
                }
            }
            for (int i = 0; i < n_rad; ++i) {
                for (std::size_t j = 0; j < theta.size(); ++j) {
                    const Complex z =
                        rad.x[i] * Complex(std::cos(theta[j]), std::sin(theta[j]));
                    const double v = fock_weighted_modulus(f, z);
                    total += rad.w[i] * wt[j] * rad.x[i] * std::pow(v, params.p);
                }
            }
        }
        return total;
    };

    const double T = params.truncation_radius;
    const int base_rad = std::max(48, static_cast<int>(std::ceil(params.p * deg / 2.0)) +
                                          static_cast<int>(std::ceil(params.alpha * T * T / 4.0)) + 8);
    const int base_ang = std::max(32, static_cast<int>(std::ceil(params.p * deg)) + 8);
    return refine_doubling(
        [&](int level) { return at(base_rad << level, base_ang << level); }, 5, 1e-10,
        "fock_norm: quadrature did not stabilize");
}

} // namespace

void validate(const FockParams& params) {
    if (!(params.p >= 1.0)) throw std::invalid_argument("FockParams: p >= 1 required");
    if (!(params.alpha > 0.0)) throw std::invalid_argument("FockParams: alpha > 0 required");
    if (!(params.truncation_radius > 0.0))
        throw std::invalid_argument("FockParams: truncation_radius > 0 required");
}

double fock_default_truncation(double alpha, int degree) {
    if (!(alpha > 0.0)) throw std::invalid_argument("fock_default_truncation: alpha > 0 required");
    if (degree < 0) throw std::invalid_argument("fock_default_truncation: degree >= 0 required");
    double T = std::max(6.0 / std::sqrt(alpha),
                        2.0 * std::sqrt(std::max(degree, 1) / alpha));
    for (int i = 0; i < 60 && gamma_q(degree + 1.0, alpha * T * T) >= 1e-13; ++i) T *= 1.1;
    return T;
}

FockFunction fock_function(std::vector<Complex> coeffs, double alpha) {
    FockFunction f;
    f.coeffs = std::move(coeffs);
    f.alpha = alpha;
    return f;
}

FockFunction fock_translate(const FockFunction& f, Complex a) {
    if (f.translation != Complex(0.0))
        throw std::invalid_argument("fock_translate: translations do not stack");
    FockFunction out = f;
    out.translation = a;
    return out;
}

Complex fock_evaluate(const FockFunction& f, Complex z) {
    if (f.translation == Complex(0.0)) return horner(f.coeffs, z);
    const Complex a = f.translation;
    const Complex phase = std::exp(f.alpha * std::conj(a) * z - 0.5 * f.alpha * std::norm(a));
    return phase * horner(f.coeffs, z - a);
}

double fock_weighted_modulus(const FockFunction& f, Complex z) {
    const Complex w = z - f.translation;
    return std::abs(horner(f.coeffs, w)) * std::exp(-0.5 * f.alpha * std::norm(w));
}

double fock_norm(const FockFunction& f, const FockParams& params) {
    validate(params);
    if (f.translation != Complex(0.0) && f.alpha != params.alpha)
        throw std::invalid_argument("fock_norm: translated function alpha must match params");
    FockFunction g = f;
    g.alpha = params.alpha;
    const std::vector<RadialBand> bands = {
        RadialBand{0.0, params.truncation_radius, {{0.0, kTwoPi}}}};
    return std::pow(band_power_integral(g, params, bands), 1.0 / params.p);
}

double fock_norm(const FockFunction& f, const FockParams& params, const Region& E) {
    validate(params);
    validate(E, params.truncation_radius);
    if (f.translation != Complex(0.0) && f.alpha != params.alpha)
        throw std::invalid_argument("fock_norm: translated function alpha must match params");
    FockFunction g = f;
    g.alpha = params.alpha;
    const std::vector<RadialBand> bands = disjoint_bands(E);
    if (bands.empty()) return 0.0;
    return std::pow(band_power_integral(g, params, bands), 1.0 / params.p);
}

Complex fock_lattice(int n, int k) { return Complex(n, k); }

int fock_overlap(double r, int window) {
    if (!(r > 0.0)) throw std::domain_error("fock_overlap: r > 0 required");
    if (window <= 0) window = static_cast<int>(std::ceil(r)) + 2;
    const int grid = 100;
    const double r_sq = r * r * (1.0 + 1e-12);
    int best = 0;
    for (int ix = 0; ix <= grid; ++ix) {
        for (int iy = 0; iy <= grid; ++iy) {
            const double x = static_cast<double>(ix) / grid;
            const double y = static_cast<double>(iy) / grid;
            int count = 0;
            for (int n = -window; n <= window; ++n) {
                const double dx = x - n;
                for (int k = -window; k <= window; ++k) {
                    const double dy = y - k;
                    if (dx * dx + dy * dy <= r_sq) ++count;
                }
            }
            best = std::max(best, count);
        }
    }
    return best;
}

bool fock_covering_ok(double r, int window) {
    if (!(r > 0.0)) throw std::domain_error("fock_covering_ok: r > 0 required");
    if (window <= 0) window = static_cast<int>(std::ceil(r)) + 2;
    const int grid = 100;
    const double r_sq = r * r * (1.0 + 1e-12);
    for (int ix = 0; ix <= grid; ++ix) {
        for (int iy = 0; iy <= grid; ++iy) {
            const double x = static_cast<double>(ix) / grid;
            const double y = static_cast<double>(iy) / grid;
            double best = r_sq + 1.0;
            for (int n = -window; n <= window && best > r_sq; ++n) {
                const double dx = x - n;
                for (int k = -window; k <= window; ++k) {
                    const double dy = y - k;
                    best = std::min(best, dx * dx + dy * dy);
                }
            }
            if (best > r_sq) return false;
        }
    }
    return true;
}

double fock_monomial_norm_p2(int n, double alpha) {
    if (n < 0) throw std::invalid_argument("fock_monomial_norm_p2: n >= 0 required");
    if (!(alpha > 0.0)) throw std::invalid_argument("fock_monomial_norm_p2: alpha > 0 required");
    return std::exp(0.5 * (std::log(std::numbers::pi) + std::lgamma(n + 1.0) -
                           (n + 1.0) * std::log(alpha)));
}

Eigen::MatrixXcd fock_gram_matrix(const Region& E, int degree, double alpha) {
    if (degree < 0) throw std::invalid_argument("fock_gram_matrix: degree >= 0 required");
    if (!(alpha > 0.0)) throw std::invalid_argument("fock_gram_matrix: alpha > 0 required");
    const int size = degree + 1;
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(size, size);
    for (const RadialBand& band : disjoint_bands(E)) {
        std::vector<double> mom(2 * degree + 1);
        for (int m = 0; m <= 2 * degree; ++m)
            mom[m] = radial_gaussian_moment(m, band.rho_min, band.rho_max, alpha);
        std::vector<Complex> ang(degree + 1);
        for (int k = 0; k <= degree; ++k) ang[k] = angular_factor(band, k);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j <= i; ++j) G(i, j) += mom[i + j] * ang[i - j];
    }
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) G(i, j) = std::conj(G(j, i));
    return G;
}

SamplingResult fock_optimal_constant_p2(const Region& E, int degree, double alpha,
                                        double truncation_radius) {
    if (!(truncation_radius > 0.0))
        throw std::invalid_argument("fock_optimal_constant_p2: truncation_radius > 0 required");
    validate(E, truncation_radius);
    const Eigen::MatrixXcd G_E = fock_gram_matrix(E, degree, alpha);
    const int size = degree + 1;

    Eigen::VectorXd inv_sqrt(size);
    for (int n = 0; n < size; ++n) {
        const double norm = fock_monomial_norm_p2(n, alpha);
        inv_sqrt(n) = 1.0 / norm;
    }
    Eigen::MatrixXcd whitened = G_E;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) whitened(i, j) *= inv_sqrt(i) * inv_sqrt(j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(whitened);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("fock_optimal_constant_p2: eigensolver failed");

    SamplingResult result;
    result.C_hat = std::sqrt(std::max(0.0, solver.eigenvalues()(0)));
    result.degree = degree;
    result.params = SpaceParams{2.0, alpha};
    result.region_label = E.label;
    result.extremal_coeffs.resize(size);
    for (int n = 0; n < size; ++n)
        result.extremal_coeffs[n] = solver.eigenvectors()(n, 0) * inv_sqrt(n);
    return result;
}

double fock_bound(double gamma, double r, const FockParams& params, const BoundConfig& cfg) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("fock_bound: gamma in (0,1] required");
    if (!(r > std::numbers::sqrt2)) throw std::domain_error("fock_bound: r > sqrt(2) required");
    if (!(params.p >= 1.0 && params.alpha > 0.0))
        throw std::invalid_argument("fock_bound: p >= 1 and alpha > 0 required");
    validate(cfg);
    const double ln_M = 8.0 * params.alpha * r * r * std::log(r) + 2.0 / params.p * std::log(r);
    const double eta = cfg.c_dprime * 16.0 * std::numbers::ln2;
    const double value = std::exp(-2.0 * params.alpha * r * r) *
                         std::pow(gamma / cfg.c1, eta * ln_M + 1.0 / params.p);
    return std::clamp(value, 0.0, 1.0);
}

} // namespace bergsamp

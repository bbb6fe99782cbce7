#include "bergsamp/analysis.hpp"
#include "bergsamp/bounds.hpp"
#include "bergsamp/covering.hpp"
#include "bergsamp/fock.hpp"
#include "bergsamp/geometry.hpp"
#include "bergsamp/region.hpp"
#include "bergsamp/remez.hpp"
#include "bergsamp/sampling.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

bergsamp::Region resolve_region(const std::string& name) { return bergsamp::builtin_region(name); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sampling constants for weighted Bergman and Fock spaces";

    m.def("phb_distance", &bergsamp::phb_distance, py::arg("z"), py::arg("w"),
          "pseudohyperbolic distance |z-w| / |1 - conj(z) w|");
    m.def("phb_double", &bergsamp::phb_double, py::arg("r"),
          "radius of the doubled pseudohyperbolic disk: 2r/(1+r^2)");
    m.def("automorphism", &bergsamp::automorphism, py::arg("a"), py::arg("z"),
          "disk automorphism (a - z)/(1 - conj(a) z)");
    m.def("reference_covering_radius", &bergsamp::reference_covering_radius);

    m.def("monomial_norm_p2", &bergsamp::monomial_norm_p2, py::arg("n"), py::arg("alpha"),
          "squared norm of z^n in the weighted p=2 space");
    m.def(
        "bergman_norm",
        [](std::vector<bergsamp::Complex> coeffs, double p, double alpha) {
            return bergsamp::bergman_norm(bergsamp::polynomial(std::move(coeffs)),
                                          bergsamp::SpaceParams{p, alpha});
        },
        py::arg("coeffs"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);
    m.def(
        "bergman_norm_region",
        [](std::vector<bergsamp::Complex> coeffs, const std::string& region, double p,
           double alpha) {
            return bergsamp::bergman_norm(bergsamp::polynomial(std::move(coeffs)),
                                          bergsamp::SpaceParams{p, alpha},
                                          resolve_region(region));
        },
        py::arg("coeffs"), py::arg("region"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);

    m.def("builtin_region_names", &bergsamp::builtin_region_names);
    m.def(
        "region_area", [](const std::string& region) { return bergsamp::region_area(resolve_region(region)); },
        py::arg("region"), "normalized area (unit disk = 1) of a builtin region");
    m.def(
        "density",
        [](const std::string& region, double r, int resolution) {
            return bergsamp::density(resolve_region(region), r, resolution).gamma_hat;
        },
        py::arg("region"), py::arg("r"), py::arg("resolution") = 64);
    m.def(
        "optimal_constant_p2",
        [](const std::string& region, int degree, double alpha) {
            return bergsamp::optimal_constant_p2(resolve_region(region), degree, alpha).C_hat;
        },
        py::arg("region"), py::arg("degree"), py::arg("alpha") = 0.0);
    m.def(
        "extremal_search",
        [](const std::string& region, int degree, double p, double alpha, int restarts,
           std::uint64_t seed) {
            return bergsamp::extremal_search(resolve_region(region), degree,
                                             bergsamp::SpaceParams{p, alpha}, restarts, seed)
                .C_hat;
        },
        py::arg("region"), py::arg("degree"), py::arg("p") = 2.0, py::arg("alpha") = 0.0,
        py::arg("restarts") = 4, py::arg("seed") = 1);

    m.def(
        "theoretical_lower",
        [](double gamma, double r, double p, double alpha) {
            return bergsamp::theoretical_lower(gamma, r, bergsamp::SpaceParams{p, alpha},
                                               bergsamp::BoundConfig::defaults());
        },
        py::arg("gamma"), py::arg("r"), py::arg("p") = 2.0, py::arg("alpha") = 0.0);
    m.def("necessary_upper", &bergsamp::necessary_upper, py::arg("gamma"), py::arg("p"),
          py::arg("k_nec") = 1.0);

    m.def(
        "sublevel_measure",
        [](std::vector<bergsamp::Complex> coeffs, double radius, double level) {
            return bergsamp::sublevel_measure(bergsamp::polynomial(std::move(coeffs)), radius,
                                              level);
        },
        py::arg("coeffs"), py::arg("radius") = 1.0, py::arg("level") = 1.0);

    m.def("fock_monomial_norm_p2", &bergsamp::fock_monomial_norm_p2, py::arg("n"),
          py::arg("alpha"), "norm of z^n in the Gaussian p=2 space");
    m.def("fock_overlap", &bergsamp::fock_overlap, py::arg("r"), py::arg("window") = 0);
    m.def("fock_covering_ok", &bergsamp::fock_covering_ok, py::arg("r"), py::arg("window") = 0);
    m.def(
        "fock_norm",
        [](std::vector<bergsamp::Complex> coeffs, double p, double alpha, double truncation) {
            if (truncation <= 0.0)
                truncation = bergsamp::fock_default_truncation(
                    alpha, coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1);
            return bergsamp::fock_norm(bergsamp::fock_function(std::move(coeffs), alpha),
                                       bergsamp::FockParams{p, alpha, truncation});
        },
        py::arg("coeffs"), py::arg("p") = 2.0, py::arg("alpha") = 1.0,
        py::arg("truncation_radius") = 0.0);
}

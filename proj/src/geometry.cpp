#include "bergsamp/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bergsamp {

namespace {

void require_in_disk(Complex z, const char* what) {
    if (std::abs(z) >= 1.0 - kBoundaryTol)
        throw std::domain_error(std::string(what) + ": point outside the open unit disk");
}

} // namespace

double phb_distance(Complex z, Complex w) {
    require_in_disk(z, "phb_distance");
    require_in_disk(w, "phb_distance");
    return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
}

Complex automorphism(Complex a, Complex z) {
    require_in_disk(a, "automorphism");
    require_in_disk(z, "automorphism");
    return (a - z) / (1.0 - std::conj(a) * z);
}

Complex automorphism_derivative(Complex a, Complex z) {
    require_in_disk(a, "automorphism_derivative");
    require_in_disk(z, "automorphism_derivative");
    const Complex den = 1.0 - std::conj(a) * z;
    return -(1.0 - std::norm(a)) / (den * den);
}

EuclideanDisk phb_disk_to_euclidean(Complex center, double r) {
    require_in_disk(center, "phb_disk_to_euclidean");
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("phb_disk_to_euclidean: radius must lie in (0,1)");
    const double x = std::abs(center);
    const double den = 1.0 - r * r * x * x;
    const double c = x * (1.0 - r * r) / den;
    const double R = r * (1.0 - x * x) / den;
    const Complex phase = (x == 0.0) ? Complex(1.0, 0.0) : center / x;
    return EuclideanDisk{phase * c, R};
}

double phb_double(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("phb_double: radius must lie in (0,1)");
    return 2.0 * r / (1.0 + r * r);
}

PhbDisk make_phb_disk(Complex center, double r) {
    return PhbDisk{center, r, phb_disk_to_euclidean(center, r)};
}

} // namespace bergsamp

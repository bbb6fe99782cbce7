import cmath
import math

import bergsamp as bs


def test_geometry():
    assert bs.phb_distance(0, 0.5) == 0.5
    assert abs(bs.phb_double(0.5) - 0.8) < 1e-15
    a = 0.3 + 0.4j
    # involution: applying the automorphism twice returns the argument
    z = 0.1 - 0.2j
    assert abs(bs.automorphism(a, bs.automorphism(a, z)) - z) < 1e-14
    # distance is invariant under the automorphism
    w = -0.5 + 0.1j
    d0 = bs.phb_distance(z, w)
    d1 = bs.phb_distance(bs.automorphism(a, z), bs.automorphism(a, w))
    assert abs(d0 - d1) < 1e-13


def test_norms():
    # ||z^3||^2 = 3! Gamma(2) / Gamma(5) = 1/4 for alpha = 0
    assert abs(bs.monomial_norm_p2(3, 0.0) - 0.25) < 1e-14
    n = bs.bergman_norm([0, 1], p=2.0, alpha=0.0)
    assert abs(n - math.sqrt(0.5)) < 1e-12
    # restriction to a sub-region can only shrink the norm
    nr = bs.bergman_norm_region([0, 1], "annulus(0.5)", p=2.0, alpha=0.0)
    assert nr <= n + 1e-12


def test_density_and_constant():
    assert abs(bs.density("full", 0.5, 32) - 1.0) < 1e-12
    assert abs(bs.optimal_constant_p2("full", 5, 0.0) - 1.0) < 1e-9
    c = bs.optimal_constant_p2("annulus(0.5)", 3, 0.0)
    assert 0.0 < c < 1.0
    # the random search agrees with the eigenvalue route on a small case
    c2 = bs.extremal_search("annulus(0.5)", 3, p=2.0, alpha=0.0, restarts=2, seed=7)
    assert abs(c2 - c) < 1e-3


def test_bounds_order():
    gamma = 0.4
    r = 0.5
    lo = bs.theoretical_lower(gamma, r, p=2.0, alpha=0.0)
    hi = bs.necessary_upper(gamma, p=2.0)
    assert 0.0 <= lo <= 1.0
    assert lo <= hi + 1e-12


def test_sublevel():
    # p(z) = z on the unit disk: |p| <= 1/2 on a disk of radius 1/2
    assert abs(bs.sublevel_measure([0, 1], 1.0, 0.5) - math.pi / 4) < 1e-3


def test_fock():
    assert abs(bs.fock_monomial_norm_p2(0, 1.0) - math.pi ** 0.5) < 1e-12
    assert abs(bs.fock_norm([1], p=2.0, alpha=1.0) - math.pi ** 0.5) < 1e-8
    n = bs.fock_overlap(2.0)
    assert 1.0 <= n / 4.0 <= 8.0
    assert bs.fock_covering_ok(1.5)

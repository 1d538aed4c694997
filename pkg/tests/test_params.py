"""Scalar parameters: every constant has at least two independent routes."""

import cmath
import math

import pytest

from scherk import (DivisionDegenerate, angle_parameter, h_prime,
                    moebius_center, moebius_center_vertex_form, scherk_data,
                    unimodular_factor, vertex_form_E)
from scherk.geometry import HyperbolicCoords
from scherk.params import normalized_vertices

# frozen reference constants for (m, s, t) = (0.3, 1.0, 0.3)
CASE1 = {
    "p": 2.45546163398541501401184006488,
    "z0": 0.0202061551871584461071569978628 - 0.34751944355239529287763974146j,
    "X": 0.640361754362596160287858475298 + 0.768073449319567390992579611268j,
    "sqrtX": -0.90563838102263426551011916956 - 0.424050849331423836798200824676j,
    "B": 0.201146415295434377478046253192 - 0.41988159212577323511033625085j,
    "C": -0.3602170596562282510744419181 + 0.294964577067991082148674430641j,
}
# and for (m, s, t) = (0.3, 1.0, -0.3)
CASE2 = {
    "p": 1.92451313567723999319770536683,
    "z0": 0.0189741181861685821708841230317 - 0.229032861850705769619881277046j,
    "X": 0.246447518166708300339802777377 + 0.969156138498575461751935449925j,
    "sqrtX": -0.789445222345004853326525700265 - 0.61382101700466875577028084559j,
    "B": -0.221978978958655250708725584259 - 0.699773910637523793244906028309j,
    "C": -0.254295689100926298320048564771 + 0.688688533092533260471049319672j,
}


@pytest.mark.parametrize("case,frozen", [("case1", CASE1), ("case2", CASE2)])
def test_frozen_reference_constants(case, frozen, request):
    _, _, _, d = request.getfixturevalue(case)
    assert abs(d.p - frozen["p"]) < 1e-14
    assert abs(d.z0 - frozen["z0"]) < 1e-14
    assert abs(d.X - frozen["X"]) < 1e-14
    assert abs(d.sqrtX - frozen["sqrtX"]) < 1e-14
    assert abs(d.B - frozen["B"]) < 1e-14
    assert abs(d.C - frozen["C"]) < 1e-14


def test_angle_parameter_forms(sweep_cases):
    for _, _, c, d in sweep_cases:
        # cosine route vs half-angle exponential route (j > 0)
        ej = math.exp(c.j)
        assert abs(d.e_ip - ((1j + ej) / (1j - ej)) ** 2) < 1e-12
        assert abs(d.p - 4.0 * math.atan(math.exp(-c.j))) < 1e-13
        sin_p = 2.0 * math.sinh(c.j) / math.cosh(c.j) ** 2
        assert abs(d.e_ip.imag - sin_p) < 1e-14
        assert d.e_ip.imag > 0.0


def test_angle_parameter_degenerates():
    from scherk import EqualRapidities
    flat = HyperbolicCoords(0.5, 20.0, -20.0, 20.0, 0.0)
    with pytest.raises(EqualRapidities):
        angle_parameter(flat)   # p -> 0 as j -> infinity


def test_vertex_form_E_matches_rapidity_form(sweep_cases):
    for _, frame, c, d in sweep_cases:
        E = math.cos(d.p)
        assert abs(vertex_form_E(frame.z, frame.w) - E) < 1e-9


def test_vertex_form_E_degenerate_for_conjugate_pair():
    from conftest import build_case
    _, frame, _, _ = build_case(0.4, 0.8, -0.8)   # t = -s: y + v = 0
    with pytest.raises(DivisionDegenerate):
        vertex_form_E(frame.z, frame.w)


def test_moebius_center_two_routes(sweep_cases):
    for _, frame, c, d in sweep_cases:
        direct = moebius_center(c)
        vertex = moebius_center_vertex_form(frame.z, frame.w, d.p)
        assert abs(direct - vertex) < 1e-9
        assert abs(d.z0 - direct) == 0.0


def test_moebius_center_modulus_squared_law(sweep_cases):
    for _, _, c, d in sweep_cases:
        ratio = (math.cosh(c.k) - math.cos(c.m)) / (math.cosh(c.k) + math.cos(c.m))
        assert abs(abs(d.z0) ** 2 - ratio) < 1e-13
        assert abs(d.z0) < 1.0


def test_unimodular_factor_three_routes(sweep_cases):
    for _, frame, c, d in sweep_cases:
        assert abs(abs(d.X) - 1.0) < 1e-13
        # rapidity half-angle route
        route2 = ((1j * cmath.exp(c.s / 2) + cmath.exp(c.t / 2)) ** 2
                  * (1 + cmath.exp(1j * c.m + c.k)) ** 2
                  / ((cmath.exp(c.s / 2) + 1j * cmath.exp(c.t / 2)) ** 2
                     * (cmath.exp(1j * c.m) + cmath.exp(c.k)) ** 2))
        assert abs(d.X - route2) < 1e-11
        # vertex-coordinate route through the arc angle p
        x, y = frame.z.real, frame.z.imag
        u, v = frame.w.real, frame.w.imag
        cp, sp = cmath.cos(d.p / 2), cmath.sin(d.p / 2)
        route3 = -(4 * cmath.exp(-1j * d.p) / cmath.sin(d.p) ** 2
                   * (2 * cp + (1j * u + v - 1j * x - y) * sp) ** 2
                   * (2 * cp + (-1j * u - v + 1j * x + y) * sp)) \
            / ((u - 1j * (v + 1j * x + y)) ** 2
               * (2 * cp + (-1j * u + v + 1j * x - y) * sp))
        assert abs(d.X - route3) < 1e-9


def test_sqrt_sign_rule(sweep_cases):
    for _, frame, c, d in sweep_cases:
        assert abs(d.sqrtX ** 2 - d.X) < 1e-14
        # the chosen root makes the kernel residue at z = 1 point along +i
        c1 = (1.0 - frame.w) / (2j * math.pi)
        q1 = d.sqrtX * (1.0 - d.z0) / (1.0 - d.z0.conjugate())
        assert (c1 * q1).imag >= 0.0


def test_constants_algebra(sweep_cases):
    for _, _, c, d in sweep_cases:
        assert d.Z == d.X
        assert abs(d.A - d.B * d.Z) < 1e-14
        assert abs(d.C - d.B * d.sqrtX) < 1e-14
        assert abs(d.C ** 2 - d.A * d.B) < 1e-13


def test_scale_constant_ties_to_h_prime(sweep_cases):
    # B is e^{2ip} h'(0); guards against the inline residue table drifting
    # from the one in the harmonic-map module
    for _, _, c, d in sweep_cases:
        assert abs(d.B - d.e_2ip * h_prime(0.0 + 0.0j, d)) < 1e-13


def test_kernel_scale_identity(sweep_cases):
    for _, _, c, d in sweep_cases:
        lhs = d.C / (d.e_2ip - 1.0)
        rhs = -1j * math.cosh(c.j) * (math.cos(c.m) + math.cosh(c.k)) \
            / (2.0 * math.pi)
        assert abs(lhs - rhs) < 1e-12


def test_compact_scale_closed_form(sweep_cases):
    for _, _, c, d in sweep_cases:
        compact = (2.0 / math.pi) * math.tanh(c.j) \
            * (math.cos(c.m) + math.cosh(c.k)) * d.e_ip
        assert abs(d.C - compact) < 1e-12 * abs(d.C)


def test_poles_property(case1):
    _, _, _, d = case1
    poles = d.poles
    assert poles[0] == 1.0 and poles[2] == -1.0
    assert abs(poles[1] - d.e_ip) == 0.0
    assert abs(poles[3] + d.e_ip) == 0.0
    assert abs(d.e_2ip - d.e_ip ** 2) < 1e-16


def test_normalized_vertices_match_frame(case1):
    _, frame, c, _ = case1
    b1, b2, b3, b4 = normalized_vertices(c)
    assert b1 == -1.0 and b3 == 1.0
    assert abs(b2 - frame.z) < 1e-14
    assert abs(b4 - frame.w) < 1e-14

"""Quadrilateral validation, normalization, and hyperbolic coordinates.

The pipeline starts here: an arbitrary Pitot quadrilateral (opposite
side-length sums equal) is validated, oriented counterclockwise, and mapped
by a similarity onto the canonical frame (-1, z, 1, w) in which the two
free vertices z and w lie on a hyperbola with foci +-1.  On that hyperbola
each point is sin(m) cosh(tau) + i cos(m) sinh(tau), so the quadrilateral
is coded by three real numbers (m, s, t).
"""

import cmath
import math
from dataclasses import dataclass

from .errors import (DegenerateRightAngle, DegenerateVertices, EqualRapidities,
                     FociCoincide, NotPitot, SelfIntersecting, ZeroArea)

# Absolute floor below which sin(m) (resp. cos(m)) counts as degenerate.
TOL_M = 1e-8
# Rapidity gap below which the two free vertices coincide on the hyperbola.
TOL_RAPIDITY = 1e-8
DEFAULT_TOL_PITOT = 1e-9


@dataclass(frozen=True)
class PitotQuad:
    """Four validated vertices, counterclockwise, with the Pitot certificate.

    pitot_residual is the signed defect (|b1b2|+|b3b4|) - (|b2b3|+|b4b1|);
    reversed_input records whether the input order had to be reversed to
    make the signed area positive.
    """
    b1: complex
    b2: complex
    b3: complex
    b4: complex
    pitot_residual: float
    reversed_input: bool = False

    @property
    def vertices(self):
        return (self.b1, self.b2, self.b3, self.b4)

    def perimeter(self):
        b = self.vertices
        return sum(abs(b[i] - b[(i + 1) % 4]) for i in range(4))


@dataclass(frozen=True)
class NormalizedFrame:
    """Similarity data mapping the quadrilateral onto (-1, z, 1, w).

    The forward map is T(u) = scale * (u - shift).  relabeled records
    whether the vertex labels were rotated by two places (a 180-degree
    rotation of the canonical frame) to land on the sin(m) > 0 branch of
    the hyperbola.
    """
    scale: complex
    shift: complex
    z: complex
    w: complex
    relabeled: bool = False

    def apply(self, u):
        return self.scale * (u - self.shift)

    def invert(self, u):
        return u / self.scale + self.shift


@dataclass(frozen=True)
class HyperbolicCoords:
    """Hyperbola parameters (m, s, t) and the derived half-sum/difference.

    m in (0, pi/2) is the angle fixing the hyperbola axes (sin m, cos m);
    t and s are the rapidities of the normalized vertices z and w.
    j = (s - t)/2 and k = (s + t)/2 appear in every closed form downstream.
    """
    m: float
    s: float
    t: float
    j: float
    k: float


def _shoelace(pts):
    """Twice the signed area of the closed polygon through pts."""
    acc = 0.0
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        acc += a.real * b.imag - b.real * a.imag
    return acc


def _orient(a, b, c):
    return (b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real)


def _segments_cross(p1, p2, p3, p4, eps):
    """True when open segments p1p2 and p3p4 properly intersect or overlap."""
    d1 = _orient(p3, p4, p1)
    d2 = _orient(p3, p4, p2)
    d3 = _orient(p1, p2, p3)
    d4 = _orient(p1, p2, p4)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    # collinear-overlap degeneracies
    if abs(d1) <= eps and abs(d2) <= eps and abs(d3) <= eps and abs(d4) <= eps:
        # all four points on one line: overlap iff projections overlap
        dx = p2 - p1
        axis = dx if abs(dx) > 0 else (p4 - p3)
        tvals = sorted(((u - p1) / axis).real for u in (p1, p2))
        uvals = sorted(((u - p1) / axis).real for u in (p3, p4))
        return not (tvals[1] < uvals[0] or uvals[1] < tvals[0])
    return False


def validate_quadrilateral(vertices, tol_pitot=DEFAULT_TOL_PITOT):
    """Check the Pitot condition and basic sanity; canonicalize orientation.

    vertices: iterable of four complex numbers (or (x, y) pairs).
    tol_pitot: relative tolerance; the side-sum defect must not exceed
        tol_pitot times the perimeter.

    Returns a PitotQuad whose vertex order is counterclockwise (the input
    order is reversed when its signed area is negative).
    """
    b = []
    for v in vertices:
        if isinstance(v, (tuple, list)):
            v = complex(v[0], v[1])
        v = complex(v)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("vertices must be finite")
        b.append(v)
    if len(b) != 4:
        raise ValueError("exactly four vertices required")

    diam = max(abs(b[i] - b[j]) for i in range(4) for j in range(i + 1, 4))
    if diam == 0.0:
        raise DegenerateVertices("all vertices coincide")
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(b[i] - b[j]) <= 1e-12 * diam:
                raise DegenerateVertices(f"vertices {i + 1} and {j + 1} coincide")

    area2 = _shoelace(b)
    if abs(area2) <= 1e-12 * diam ** 2:
        raise ZeroArea("quadrilateral has zero signed area")
    reversed_input = False
    if area2 < 0.0:
        b = [b[0], b[3], b[2], b[1]]
        reversed_input = True

    eps = 1e-12 * diam ** 2
    if _segments_cross(b[0], b[1], b[2], b[3], eps) or \
       _segments_cross(b[1], b[2], b[3], b[0], eps):
        raise SelfIntersecting("nonadjacent sides intersect")

    residual = (abs(b[0] - b[1]) + abs(b[2] - b[3])) - (abs(b[1] - b[2]) + abs(b[3] - b[0]))
    perimeter = sum(abs(b[i] - b[(i + 1) % 4]) for i in range(4))
    if abs(residual) > tol_pitot * perimeter:
        raise NotPitot(f"side-sum defect {residual:.3e} exceeds "
                       f"{tol_pitot:.1e} * perimeter = {tol_pitot * perimeter:.3e}")
    return PitotQuad(b[0], b[1], b[2], b[3], residual, reversed_input)


def normalize(q):
    """Map a PitotQuad onto the canonical frame (-1, z, 1, w).

    Returns (frame, similarity, inverse_similarity) where the similarity is
    T(u) = 2 (u - (b1+b3)/2)/(b3-b1).  When the image of b2 lands on the
    sin(m) < 0 branch of the focal hyperbola, the labels are rotated by two
    places (b3,b4,b1,b2), which negates the frame and restores sin(m) > 0;
    the returned frame has relabeled=True in that case.
    """
    b1, b2, b3, b4 = q.vertices
    scale = 2.0 / (b3 - b1)
    shift = (b1 + b3) / 2.0
    z = scale * (b2 - shift)
    w = scale * (b4 - shift)
    relabeled = False
    kappa = (abs(z + 1) - abs(z - 1)) / 2.0
    if kappa < 0.0:
        scale = -scale
        z, w = -w, -z
        relabeled = True
    frame = NormalizedFrame(scale, shift, z, w, relabeled)
    return frame, frame.apply, frame.invert


def hyperbola_point(m, tau):
    """Point sin(m) cosh(tau) + i cos(m) sinh(tau) on the focal hyperbola."""
    if not 0.0 < m < math.pi / 2:
        raise ValueError("m must lie in (0, pi/2)")
    return complex(math.sin(m) * math.cosh(tau), math.cos(m) * math.sinh(tau))


def hyperbolic_coordinates(z, w, tol=1e-8):
    """Recover (m, s, t) from the normalized free vertices z and w.

    Both points must lie on a common hyperbola with foci +-1 (which is the
    normalized form of the Pitot condition), on the sin(m) > 0 branch as
    produced by normalize().  tol bounds the acceptable mismatch of the two
    focal differences; inputs within tol are projected onto the averaged
    hyperbola.
    """
    z, w = complex(z), complex(w)
    kz = (abs(z + 1) - abs(z - 1)) / 2.0
    kw = (abs(w + 1) - abs(w - 1)) / 2.0
    if abs(kz - kw) > tol:
        raise NotPitot("z and w do not share a confocal hyperbola")
    kappa = (kz + kw) / 2.0
    if abs(kappa) < TOL_M:
        raise FociCoincide("hyperbola degenerates to the imaginary axis (sin m ~ 0)")
    if 1.0 - abs(kappa) < TOL_M:
        raise DegenerateRightAngle("hyperbola degenerates to the real axis (cos m ~ 0)")
    if kappa < 0.0:
        raise ValueError("z lies on the sin(m) < 0 branch; use normalize() "
                         "to obtain the canonical (relabeled) frame first")
    m = math.asin(kappa)
    cm = math.cos(m)
    t = math.asinh(z.imag / cm)
    s = math.asinh(w.imag / cm)
    roundtrip_tol = max(1e-6, 10.0 * tol)
    for point, tau, name in ((z, t, "z"), (w, s, "w")):
        if abs(hyperbola_point(m, tau) - point) > roundtrip_tol * (1.0 + abs(point)):
            raise ValueError(f"{name} does not round-trip through the hyperbola "
                             "parametrization")
    if abs(s - t) < TOL_RAPIDITY:
        raise EqualRapidities("s = t: free vertices coincide in rapidity")
    return HyperbolicCoords(m, s, t, (s - t) / 2.0, (s + t) / 2.0)


def construct_quad(m, s, t, tol_pitot=DEFAULT_TOL_PITOT):
    """Build the canonical quadrilateral (-1, z, 1, w) from (m, s, t).

    The inverse workflow of normalize + hyperbolic_coordinates; the result
    is Pitot by construction (side sums telescope along the hyperbola).
    Orientation is fixed to counterclockwise, so passing s < t yields the
    same quadrilateral with the roles of the two free vertices exchanged.
    """
    if abs(s - t) < TOL_RAPIDITY:
        raise EqualRapidities("s = t produces a degenerate (triangle) input")
    z = hyperbola_point(m, t)
    w = hyperbola_point(m, s)
    return validate_quadrilateral([-1.0 + 0.0j, z, 1.0 + 0.0j, w], tol_pitot)

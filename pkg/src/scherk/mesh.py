"""Triangulated samples of the surface and radial boundary traces."""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import IoError
from .harmonic import harmonic_map
from .weierstrass import height_T


@dataclass(frozen=True)
class SurfaceMesh:
    """Triangle mesh with 0-based faces and sampling metadata."""
    vertices: list
    faces: list
    metadata: dict = field(default_factory=dict)


def sample_disk(d, frame=None, n_r=24, n_theta=48, r_max=0.995, h_max=5.0):
    """Sample the surface over concentric rings of the unit disk.

    Radii follow r_i = r_max sin(pi i / (2 n_r)), clustering rings near the
    rim where the height varies fastest.  Heights are clamped to
    [-h_max, h_max] (the surface is unbounded near the four boundary
    poles); the number of clamped vertices is recorded in the metadata.
    """
    if n_r < 1 or n_theta < 3:
        raise ValueError("need n_r >= 1 and n_theta >= 3")
    if not 0.0 < r_max < 1.0:
        raise ValueError("r_max must lie in (0, 1)")

    radii = r_max * np.sin(np.pi * np.arange(1, n_r + 1) / (2.0 * n_r))
    thetas = 2.0 * np.pi * np.arange(n_theta) / n_theta
    zs = np.concatenate(
        [[0.0 + 0.0j]] + [r * np.exp(1j * thetas) for r in radii])

    fz = harmonic_map(zs, d, frame)
    hs = height_T(zs, d)
    if frame is not None:
        hs = hs / abs(frame.scale)
    xs, ys = np.real(fz), np.imag(fz)
    clamped = int(np.count_nonzero(np.abs(hs) > h_max))
    hs = np.clip(hs, -h_max, h_max)
    vertices = [(float(x), float(y), float(h)) for x, y, h in zip(xs, ys, hs)]

    def vid(ring, a):
        return 1 + ring * n_theta + a % n_theta

    faces = []
    for a in range(n_theta):
        faces.append((0, vid(0, a), vid(0, a + 1)))
    for ring in range(n_r - 1):
        for a in range(n_theta):
            faces.append((vid(ring, a), vid(ring + 1, a), vid(ring + 1, a + 1)))
            faces.append((vid(ring, a), vid(ring + 1, a + 1), vid(ring, a + 1)))

    c = d.coords
    metadata = {
        "m": c.m, "s": c.s, "t": c.t, "p": d.p,
        "n_r": n_r, "n_theta": n_theta, "r_max": r_max, "h_max": h_max,
        "clamped": clamped,
    }
    return SurfaceMesh(vertices=vertices, faces=faces, metadata=metadata)


def radial_trace(d, pole_index, r_list):
    """Heights along the ray toward one boundary pole.

    pole_index is 1..4 for the poles (1, e^{ip}, -1, -e^{ip}); returns a
    list of (r, height) pairs.  Along these rays the height grows like
    a multiple of -log(1 - r).
    """
    if pole_index not in (1, 2, 3, 4):
        raise ValueError("pole_index must be 1, 2, 3, or 4")
    zeta = d.poles[pole_index - 1]
    return [(float(r), float(height_T(r * zeta, d))) for r in r_list]


def export_obj(mesh, path):
    """Write the mesh as a Wavefront OBJ file (1-based face indices)."""
    lines = []
    for x, y, z in mesh.vertices:
        lines.append(f"v {x:.17g} {y:.17g} {z:.17g}")
    for i, j, k in mesh.faces:
        lines.append(f"f {i + 1} {j + 1} {k + 1}")
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write OBJ file {path}: {exc}") from exc


def export_csv(trace, path):
    """Write a radial trace as CSV with header r,T."""
    lines = ["r,T"]
    for r, t in trace:
        lines.append(f"{r:.17g},{t:.17g}")
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write CSV file {path}: {exc}") from exc

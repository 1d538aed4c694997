import numpy as np
import pytest

from scherk import (construct_quad, hyperbolic_coordinates, normalize,
                    scherk_data)

SEED = 20260825


def build_case(m, s, t):
    """Full pipeline for a canonical quadrilateral: (quad, frame, coords, data)."""
    q = construct_quad(m, s, t)
    frame, _, _ = normalize(q)
    coords = hyperbolic_coordinates(frame.z, frame.w)
    return q, frame, coords, scherk_data(coords)


def sample_triples(rng, n, m_range=(0.05, 1.5), tau=2.5, gap=(0.05, 2.5)):
    """(m, s, t) samples kept clear of the degenerate boundaries."""
    ms = rng.uniform(*m_range, n)
    ts = rng.uniform(-tau, tau, n)
    ss = ts + rng.uniform(*gap, n) * rng.choice([-1.0, 1.0], n)
    return np.column_stack([ms, ss, ts])


@pytest.fixture(scope="session")
def case1():
    return build_case(0.3, 1.0, 0.3)


@pytest.fixture(scope="session")
def case2():
    return build_case(0.3, 1.0, -0.3)


@pytest.fixture()
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def sweep_cases():
    """150 random nondegenerate cases shared by the identity sweeps."""
    gen = np.random.default_rng(SEED + 1)
    return [build_case(m, s, t) for m, s, t in sample_triples(gen, 150)]

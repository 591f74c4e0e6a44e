import random

import pytest

from ghomalg.algebra import GradedRing, RingMap, monomials_of_degree
from ghomalg.field import GF, QQ
from ghomalg.modules import FPModule, Matrix

F101 = GF(101)


@pytest.fixture(scope="session")
def hyper():
    """Q[u,v]/(uv)."""
    return GradedRing(QQ, ["u", "v"], ["u*v"])


@pytest.fixture(scope="session")
def hyper101():
    return GradedRing(F101, ["u", "v"], ["u*v"])


@pytest.fixture(scope="session")
def cubic():
    """F_101[x]/(x^3)."""
    return GradedRing(F101, ["x"], ["x^3"])


@pytest.fixture(scope="session")
def nongor():
    """F_101[x,y]/(x^2, xy, y^2)."""
    return GradedRing(F101, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="session")
def qxy():
    return GradedRing(QQ, ["x", "y"])


@pytest.fixture(scope="session")
def poly_pair():
    """phi: F_101[x] -> F_101[x,y], the inclusion."""
    A = GradedRing(F101, ["x"])
    S = GradedRing(F101, ["x", "y"])
    return A, S, RingMap(A, S, ["x"])


def random_homogeneous(ring, deg, rng, density=0.7):
    """A random homogeneous element of degree ``deg`` (possibly zero)."""
    if deg < 0:
        return ring.zero()
    F = ring.field
    f = ring.zero()
    for m in monomials_of_degree(ring.degrees, deg):
        if rng.random() < density:
            c = F.random_element(rng, 3)
            if c:
                f = f + ring.monomial(m, c)
    return ring.reduce(f)


def random_matrix(ring, row_degrees, col_degrees, rng, density=0.7):
    rows = [[random_homogeneous(ring, c - r, rng, density) if c > r else ring.zero()
             for c in col_degrees] for r in row_degrees]
    return Matrix.from_rows(ring, rows, row_degrees, col_degrees)


def random_module(ring, rng, max_gens=2, max_rels=3, max_shift=2):
    """Cokernel of a random homogeneous matrix with entries in m."""
    g = rng.randint(1, max_gens)
    r = rng.randint(1, max_rels)
    degs = sorted(rng.randint(0, 1) for _ in range(g))
    cdeg = [rng.randint(min(degs) + 1, max(degs) + max_shift) for _ in range(r)]
    return FPModule(ring, tuple(degs), random_matrix(ring, degs, cdeg, rng))


@pytest.fixture
def rng():
    return random.Random(20261019)


# -- acceptance reporting -------------------------------------------------------------

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])

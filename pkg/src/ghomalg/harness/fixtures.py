"""Fixture registry: shipped ``.gfd`` files and the oracles that replay them."""

import math
import os
from functools import cached_property
from importlib import resources

from ..algebra import RingMap
from ..complexes import restrict_scalars
from ..invariants import (UNKNOWN, depth, fd_bounded, gdim, gfd_bounded, supp_member_max,
                          tor_complex)
from ..modules import FPModule
from .parser import ParseError, parse_session

__all__ = ["Fixture", "load_fixture", "list_fixtures", "fixture_path", "ORACLES",
           "replay_expectation", "FixtureError", "gfd_for", "ParseError"]

INF = math.inf


class FixtureError(ValueError):
    pass


def _shipped_dir():
    return resources.files("ghomalg") / "fixtures"


def list_fixtures():
    """Names of the shipped fixtures, sorted."""
    return sorted(p.name for p in _shipped_dir().iterdir() if p.name.endswith(".gfd"))


def fixture_path(name):
    """Resolve a path on disk or the name of a shipped fixture."""
    if os.path.exists(name):
        return name
    cand = name if name.endswith(".gfd") else name + ".gfd"
    p = _shipped_dir() / cand
    if p.is_file():
        return str(p)
    raise FixtureError(f"no such fixture: {name!r} (shipped: {', '.join(list_fixtures())})")


def load_fixture(name, field=None):
    path = fixture_path(name)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return Fixture(os.path.basename(path), text, field)


class Fixture:
    """A parsed fixture with convenience access to its roles."""

    def __init__(self, name, text, field=None):
        self.name = name
        self.text = text
        self.session = parse_session(text, field)

    def __repr__(self):
        return f"Fixture({self.name!r})"

    @property
    def expectations(self):
        return self.session.expectations

    def module(self, name):
        try:
            return self.session.modules[name]
        except KeyError:
            raise FixtureError(f"fixture {self.name} has no module {name!r}") from None

    def _handle(self, decl):
        M = self.module(decl.module)
        phi = self.session.maps[decl.map] if decl.map else RingMap.identity(M.ring)
        return restrict_scalars(phi, M)

    def role(self, name):
        decl = self.session.roles.get(name)
        if decl is None:
            raise FixtureError(f"fixture {self.name} has no role {name!r}")
        return self._handle(decl)

    @cached_property
    def subject(self):
        """The module under study: role ``X`` if present, else role ``N``."""
        for key in ("X", "N"):
            if key in self.session.roles:
                return self.role(key)
        raise FixtureError(f"fixture {self.name} declares no role N or X")

    @property
    def R(self):
        return self.subject.ring

    @property
    def is_absolute(self):
        return self.subject.phi.is_identity()

    @cached_property
    def locals(self):
        return {name: self._handle(d) for name, d in sorted(self.session.locals.items())}

    def prime_tests(self):
        """User-supplied injective test modules over R, or None for the default."""
        if not self.session.prime_tests:
            return None
        from ..duality import injective_hull_truncation
        out = []
        for name, d in sorted(self.session.prime_tests.items()):
            if d.module is not None:
                out.append((name, self.module(d.module)))
            else:
                out.append((name, injective_hull_truncation(self.session.rings[d.ring], d.t)))
        return out


# -- Gfd with the test set appropriate to a handle ----------------------------------------

def gfd_for(h, tests=None, tmax=4, B=8):
    """Gfd report using explicit tests, ``E(k)`` itself, or the ``E_t`` exhaustion."""
    if tests is not None:
        return gfd_bounded(h, tests, tmax, B)
    if not h.ring.is_artinian() and h.phi.is_identity():
        return gfd_bounded(h, "pairing", tmax, B)
    return gfd_bounded(h, None, tmax, B)


# -- oracles -------------------------------------------------------------------------------

def _k(ring):
    return FPModule.residue_field(ring)


def _value(rep):
    if rep.status == UNKNOWN:
        return "unknown"
    return _norm(rep.value)


def _norm(v):
    if isinstance(v, bool):
        return v
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return v


def _oracle_tor_balance(fx, key, B, tmax):
    """Betti numbers as ``dim_k Tor_i(k, N)``, resolving k instead of N."""
    h = fx.subject
    C, _ = tor_complex(_k(h.ring), h, B)
    return tuple(C.homology_dim(i) for i in range(B + 1))


def _oracle_ext_k(fx, key, B, tmax):
    h = fx.subject
    if key == "depth_R":
        return _value(depth(FPModule.free(h.ring, (0,)), B))
    return _value(depth(h, B))


def _oracle_gdim(fx, key, B, tmax):
    return _value(gdim(fx.subject.module, B))


def _oracle_injective(fx, key, B, tmax):
    h = fx.subject
    return _value(gfd_for(h, fx.prime_tests(), tmax, B))


def _oracle_pairing(fx, key, B, tmax):
    return _value(gfd_bounded(fx.subject, "pairing", tmax, B))


def _oracle_depth_difference(fx, key, B, tmax):
    h = fx.subject
    a = depth(FPModule.free(h.ring, (0,)), B)
    b = depth(h, B)
    if a.status == UNKNOWN or b.status == UNKNOWN:
        return "unknown"
    return _norm(a.value - b.value)


def _oracle_tor_k(fx, key, B, tmax):
    return _value(fd_bounded(fx.subject, B))


def _oracle_nakayama(fx, key, B, tmax):
    return supp_member_max(fx.subject).value


def _oracle_factorwise(fx, key, B, tmax):
    """Gfd computed on each supplied localized stand-in; the max for ``*_local_max``."""
    vals = [_value(gfd_for(h, None, tmax, B)) for h in fx.locals.values()]
    if key == "gfd_global" and not vals:
        return _value(gfd_for(fx.subject, fx.prime_tests(), tmax, B))
    if "unknown" in vals:
        return "unknown"
    nums = [{"inf": INF, "-inf": -INF}.get(v, v) for v in vals]
    return _norm(max(nums)) if nums else "-inf"


def _oracle_trivial(fx, key, B, tmax):
    h = fx.subject
    table = {
        "depth_N": lambda: _value(depth(h, B)),
        "depth_R": lambda: _value(depth(FPModule.free(h.ring, (0,)), B)),
        "gfd": lambda: _value(gfd_for(h, fx.prime_tests(), tmax, B)),
        "fd": lambda: _value(fd_bounded(h, B)),
        "m_in_supp": lambda: supp_member_max(h).value,
        "gdim": lambda: _value(gdim(h.module, B)),
    }
    if key not in table:
        raise FixtureError(f"no trivial replay for key {key!r}")
    return table[key]()


ORACLES = {
    "tor-balance": _oracle_tor_balance,
    "ext-against-k": _oracle_ext_k,
    "ext-sup-and-reflexive-syzygy": _oracle_gdim,
    "tor-against-injective-tests": _oracle_injective,
    "matlis-pairing": _oracle_pairing,
    "depth-difference": _oracle_depth_difference,
    "tor-k": _oracle_tor_k,
    "nakayama": _oracle_nakayama,
    "factorwise": _oracle_factorwise,
}


def replay_expectation(fx, exp, B=8, tmax=4):
    """``(computed, expected)`` for one expectation, using its named oracle."""
    if exp.provenance == "trivial" and not exp.oracle:
        fn = _oracle_trivial
    else:
        fn = ORACLES.get(exp.oracle)
        if fn is None:
            raise FixtureError(f"{fx.name}: unknown oracle {exp.oracle!r} for {exp.key}")
    if exp.key == "betti":
        B = len(exp.value) - 1
    computed = fn(fx, exp.key, B, tmax)
    return computed, exp.value

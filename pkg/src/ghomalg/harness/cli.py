"""Command-line front end.

Exit status: 0 when every check passed, 1 on a verification failure, 2 on an
input error, 3 when a bound was exhausted and some outcome is unknown.
"""

import argparse
import json
import re
import sys

from ..field import QQ, Field
from ..invariants import UNKNOWN, as_handle, depth, ext_complex, fd_bounded, gdim, tor_complex
from ..modules import FPModule
from ..resolution import free_resolution
from .fixtures import FixtureError, gfd_for, list_fixtures, load_fixture
from .parser import ParseError
from .verify import (FAIL, PASS, UNK, Report, verify_expectations, verify_window, verify_loc,
                     verify_main, verify_many, verify_supp)

__all__ = ["run_cli", "main", "build_parser", "InputError"]

EXIT_INPUT = 2


class InputError(ValueError):
    pass


def _field(text):
    if text is None:
        return None
    if text == "QQ":
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)", text.replace(" ", ""))
    if not m:
        raise argparse.ArgumentTypeError(f"field must be QQ or GF(p), got {text!r}")
    try:
        return Field.GF(int(m.group(1)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--bound", "-B", type=_positive, default=8, help="homological bound B")
    common.add_argument("--tmax", type=_positive, default=4, help="largest E_t used for Gfd")
    common.add_argument("--field", type=_field, default=None, help="override coefficients: QQ or GF(p)")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--fixture", help="fixture path or shipped fixture name")

    p = _Parser(prog="ghomalg", description="Exact homological algebra over graded-local rings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def module_cmd(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--module", help="module name (default: the fixture's subject)")
        return sp

    module_cmd("resolve", "minimal free resolution up to the bound")
    module_cmd("betti", "graded Betti table")
    module_cmd("depth", "depth over the base ring")
    for name, what in (("ext", "Ext^i(M, N), N defaults to the ring"),
                       ("tor", "Tor_i(M, N), N defaults to the residue field")):
        sp = module_cmd(name, what)
        sp.add_argument("--degree", "-i", type=int, required=True)
        sp.add_argument("--with", dest="other", help="second module (same ring)")
    module_cmd("gdim", "G-dimension with bounded certificate")
    module_cmd("gfd", "Gorenstein flat dimension with bounded certificate")
    module_cmd("fd", "flat dimension")
    sp = module_cmd("approximate", "approximation triangle N -> P -> H -> ΣN")
    sp.add_argument("--n", type=int, default=0)

    v = sub.add_parser("verify", help="theorem verification over fixtures")
    vsub = v.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("main", "loc", "supp", "expectations", "window"):
        vsub.add_parser(kind, parents=[common])
    f = sub.add_parser("fixtures", help="shipped fixtures")
    fsub = f.add_subparsers(dest="action", required=True, parser_class=_Parser)
    fsub.add_parser("list", parents=[common])
    return p


# -- module-level commands -------------------------------------------------------------

def _subject(args):
    if not args.fixture:
        raise InputError("this command needs --fixture")
    fx = load_fixture(args.fixture, args.field)
    if args.module is None:
        return fx, fx.subject
    M = fx.module(args.module)
    if fx.session.roles:
        sub = fx.subject
        if sub.module is M:
            return fx, sub
    return fx, as_handle(M)


def _other(fx, args, default):
    if getattr(args, "other", None) is None:
        return default
    return fx.module(args.other)


def _invariant_check(rep, r, **extra):
    rep.add(r.name, UNK if r.status == UNKNOWN else PASS, str(r), report=r.to_dict(), **extra)


def _expectation(rep, fx, key, value, h):
    """Compare with the fixture's recorded value when the command ran on the subject."""
    exp = fx.expectations.get(key)
    if exp is None or h is not _subject_or_none(fx):
        return
    if value == "unknown" and exp.value != "unknown":
        rep.add(f"expect {key}", UNK, f"computed unknown, expected {exp.value}")
    else:
        rep.add(f"expect {key}", PASS if value == exp.value else FAIL,
                f"computed {value}, expected {exp.value}")


def _subject_or_none(fx):
    try:
        return fx.subject
    except FixtureError:
        return None


def _norm(r):
    from .fixtures import _value
    return _value(r)


def _command(args):
    fx, h = _subject(args)
    B, tmax = args.bound, args.tmax
    label = args.command + (f" {args.module}" if args.module else "")
    rep = Report(label, fx.name, {"B": B, "tmax": tmax})
    M = h.module
    if args.command in ("resolve", "betti"):
        if not h.phi.is_identity():
            rep.notes.append("resolution over the ring of the module, not over the base ring")
        res = free_resolution(M, B)
        try:
            res.check()
            problems = []
        except AssertionError as exc:
            problems = [str(exc)]
        ranks = res.ranks()
        detail = f"ranks {list(ranks)}" + (" (terminates)" if res.terminated else f" (to bound {B})")
        rep.add("resolution", FAIL if problems else PASS, detail, ranks=list(ranks),
                terminated=res.terminated, problems=problems)
        if args.command == "betti":
            bt = res.betti_table()
            rep.add("betti_table", PASS, "\n" + bt.format(), table=bt.to_dict())
            exp = fx.expectations.get("betti")
            if exp is not None and len(exp.value) <= len(ranks):
                _expectation(rep, fx, "betti", tuple(ranks[:len(exp.value)]), h)
    elif args.command == "depth":
        r = depth(h, B)
        _invariant_check(rep, r)
        _expectation(rep, fx, "depth_N", _norm(r), h)
    elif args.command == "fd":
        r = fd_bounded(h, B)
        _invariant_check(rep, r)
        _expectation(rep, fx, "fd", _norm(r), h)
    elif args.command == "gdim":
        if not h.phi.is_identity():
            raise InputError("gdim needs a module finite over its base ring (no map)")
        r = gdim(M, B)
        _invariant_check(rep, r)
        _expectation(rep, fx, "gdim", _norm(r), h)
    elif args.command == "gfd":
        r = gfd_for(h, fx.prime_tests() if h is _subject_or_none(fx) else None, tmax, B)
        stab = r.certificate.get("stabilized", True)
        outcome = UNK if r.status == UNKNOWN or not stab else PASS
        rep.add(r.name, outcome, str(r), report=r.to_dict())
        _expectation(rep, fx, "gfd", _norm(r), h)
    elif args.command in ("ext", "tor"):
        i = args.degree
        if i < 0:
            raise InputError("--degree must be nonnegative")
        if args.command == "ext":
            N = _other(fx, args, FPModule.free(M.ring, (0,)))
            C, _ = ext_complex(M, N, i)
            H = C.homology(-i)
        else:
            N = _other(fx, args, FPModule.residue_field(h.ring))
            if args.other is None:
                C, _ = tor_complex(N, h, i)
            else:
                C, _ = tor_complex(M, N, i)
            H = C.homology(i)
        finite = H.has_finite_length()
        detail = (f"{args.command} {i}: {H.ngens} generators, degrees {list(H.degrees)}"
                  + (f", k-dimension {H.dim()}" if finite else ""))
        rep.add(f"{args.command}_{i}", PASS, detail, ngens=H.ngens, degrees=list(H.degrees),
                dim=H.dim() if finite else None, zero=H.is_zero())
    elif args.command == "approximate":
        from ..approximation import ApproximationError, approximation_triangle, rotate_triangle
        if not h.phi.is_identity():
            raise InputError("approximate needs a module finite over its base ring (no map)")
        g = gdim(M, B)
        if g.status == UNKNOWN:
            _invariant_check(rep, g)
            rep.notes.append("no finite G-dimension certificate within the bound")
            return rep
        try:
            res = approximation_triangle(M, args.n, B, g, check=False)
        except ApproximationError as exc:
            raise InputError(str(exc)) from None
        for name, ok in res.checks.items():
            rep.add(name, PASS if ok else FAIL)
        rot = rotate_triangle(res, check=False)
        for name, ok in rot.checks.items():
            rep.add(f"rotated {name}", PASS if ok else FAIL)
        rep.add("summary", PASS, f"n = {args.n}, Gdim = {res.d}", **res.summary())
    return rep


# -- verification ----------------------------------------------------------------------

_VERIFY = {
    "main": lambda fx, a: verify_main(fx, a.bound, a.tmax),
    "loc": lambda fx, a: verify_loc(fx, a.bound, a.tmax),
    "supp": lambda fx, a: verify_supp(fx, a.bound),
    "expectations": lambda fx, a: verify_expectations(fx, a.bound, a.tmax),
}


def _applicable(kind, fx):
    if kind == "loc":
        return bool(fx.locals)
    if kind == "main":
        return not fx.locals
    return True


def _verify(args):
    if args.kind == "window":
        fx = load_fixture(args.fixture, args.field) if args.fixture else None
        return [verify_window(fx, args.bound)]
    if args.fixture:
        fx = load_fixture(args.fixture, args.field)
        return [_VERIFY[args.kind](fx, args)]
    fixtures = [load_fixture(n, args.field) for n in list_fixtures()]
    fixtures = [fx for fx in fixtures if _applicable(args.kind, fx)]
    return verify_many(args.kind, fixtures, args.bound, args.tmax)


def _emit(reports, fmt, out):
    if fmt == "json":
        docs = [r.to_dict() for r in reports]
        json.dump(docs[0] if len(docs) == 1 else docs, out, indent=2)
        out.write("\n")
    else:
        out.write("\n\n".join(r.to_text() for r in reports) + "\n")


def run_cli(argv=None, out=None, err=None):
    """Run the command line; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InputError as exc:
        err.write(f"ghomalg: error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "fixtures":
            names = list_fixtures()
            if args.format == "json":
                json.dump(names, out)
                out.write("\n")
            else:
                out.write("\n".join(names) + "\n")
            return 0
        reports = _verify(args) if args.command == "verify" else [_command(args)]
    except (InputError, FixtureError, ParseError, OSError) as exc:
        err.write(f"ghomalg: error: {exc}\n")
        return EXIT_INPUT
    _emit(reports, args.format, out)
    statuses = [r.exit_status for r in reports]
    if 1 in statuses:
        return 1
    if 3 in statuses:
        return 3
    return 0


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

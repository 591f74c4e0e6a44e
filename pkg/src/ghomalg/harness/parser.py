"""Parser and pretty-printer for the fixture/session language.

Statements end with ``;`` and ``#`` starts a comment::

    ring R = GF(101)[x] / (x^3);
    ring S = GF(101)[x,y];
    map phi : R -> S = [x];
    module N over S = coker [[x]] degrees [0];
    prime_test E2 = matlis_trunc(R, 2);

Fixture files add three statement kinds on top of these::

    role N = N via phi;                 # the module under study, over R via phi
    local L1 = N via phi;               # an explicit localized stand-in
    expect gfd = 1 derived "Tor against E_t";
"""

import re
from dataclasses import dataclass, field as dc_field

from ..algebra import GradedRing, Polynomial, RingMap
from ..field import Field
from ..modules import FPModule, Matrix


class ParseError(ValueError):
    def __init__(self, message, line=0, col=0, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        where = f"line {line}, column {col}: " if line else ""
        exp = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(where + message + exp)


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<string>"[^"\n]*")
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[;=\[\]\(\),/:+\-*^])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, col, i = 1, 1, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                tokens.append(Token("sym" if kind == "arrow" else kind, s, line, col))
            col += len(s)
        i = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


# -- statement records ---------------------------------------------------------

@dataclass
class RingDecl:
    name: str
    field: Field
    names: list
    ideal: list            # Polynomial over the ring


@dataclass
class MapDecl:
    name: str
    source: str
    target: str
    images: list


@dataclass
class ModuleDecl:
    name: str
    ring: str
    rows: list             # list of lists of Polynomial
    degrees: list
    explicit_degrees: bool = True


@dataclass
class PrimeTestDecl:
    name: str
    ring: str = None
    t: int = None
    module: str = None


@dataclass
class RoleDecl:
    kind: str              # "role" or "local"
    name: str
    module: str
    map: str = None


@dataclass
class Expectation:
    key: str
    value: object          # int, "inf", "-inf", "unknown", or tuple of ints
    provenance: str
    oracle: str = ""


@dataclass
class Session:
    statements: list = dc_field(default_factory=list)
    rings: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    modules: dict = dc_field(default_factory=dict)
    prime_tests: dict = dc_field(default_factory=dict)
    roles: dict = dc_field(default_factory=dict)
    locals: dict = dc_field(default_factory=dict)
    expectations: dict = dc_field(default_factory=dict)

    def module_ring_name(self, name):
        for st in self.statements:
            if isinstance(st, ModuleDecl) and st.name == name:
                return st.ring
        raise KeyError(name)


PROVENANCE = ("paper", "derived", "trivial")


class _Parser:
    def __init__(self, text, field_override=None):
        self.toks = tokenize(text)
        self.i = 0
        self.field_override = field_override
        self.session = Session()

    # -- token helpers -------------------------------------------------------
    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, expected=(), tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col, expected)

    def accept(self, text):
        if self.tok.text == text and self.tok.kind in ("sym", "name"):
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            self.error(f"found {found!r}", [repr(text)])

    def name(self, what="name"):
        t = self.tok
        if t.kind != "name":
            self.error(f"found {t.text or 'end of input'!r}", [what])
        self.i += 1
        return t.text

    def integer(self):
        t = self.tok
        if t.kind != "int":
            self.error(f"found {t.text or 'end of input'!r}", ["integer"])
        self.i += 1
        return int(t.text)

    # -- polynomials -----------------------------------------------------------
    def poly(self, ring):
        neg = self.accept("-")
        out = self.term(ring)
        if neg:
            out = -out
        while True:
            if self.accept("+"):
                out = out + self.term(ring)
            elif self.accept("-"):
                out = out - self.term(ring)
            else:
                return out

    def term(self, ring):
        out = self.factor(ring)
        while True:
            if self.accept("*"):
                out = out * self.factor(ring)
            elif self.tok.text == "/" and self.toks[self.i + 1].kind == "int":
                self.i += 1
                d = self.integer()
                if d == 0 or (ring.field.p and d % ring.field.p == 0):
                    self.error("division by zero")
                out = out * ring.constant(ring.field.inv(ring.field(d)))
            else:
                return out

    def factor(self, ring):
        if self.accept("-"):
            return -self.factor(ring)
        t = self.tok
        if t.kind == "int":
            self.i += 1
            base = ring.constant(int(t.text))
        elif t.kind == "name":
            if t.text not in ring.names:
                self.error(f"unknown variable {t.text!r} in ring with variables {list(ring.names)}", tok=t)
            self.i += 1
            base = ring.var(t.text)
        elif self.accept("("):
            base = self.poly(ring)
            self.expect(")")
        else:
            self.error(f"found {t.text or 'end of input'!r}", ["polynomial"])
        if self.accept("^"):
            base = base ** self.integer()
        return base

    def poly_list(self, ring, close):
        out = []
        if self.accept(close):
            return out
        out.append(self.poly(ring))
        while self.accept(","):
            out.append(self.poly(ring))
        self.expect(close)
        return out

    # -- statements --------------------------------------------------------------
    def parse(self):
        while self.tok.kind != "eof":
            kw = self.tok
            if kw.kind != "name":
                self.error(f"found {kw.text!r}", ["statement keyword"])
            handler = getattr(self, "st_" + kw.text, None)
            if handler is None:
                self.error(f"unknown statement {kw.text!r}",
                           ["ring", "map", "module", "prime_test", "role", "local", "expect"])
            self.i += 1
            handler(kw)
            self.expect(";")
        return self.session

    def _fresh(self, name, tok):
        s = self.session
        if name in s.rings or name in s.maps or name in s.modules or name in s.prime_tests:
            self.error(f"name {name!r} already defined", tok=tok)

    def st_ring(self, kw):
        ntok = self.tok
        name = self.name("ring name")
        self._fresh(name, ntok)
        self.expect("=")
        if self.accept("QQ"):
            fld = Field(0)
        elif self.accept("GF"):
            self.expect("(")
            ptok = self.tok
            p = self.integer()
            self.expect(")")
            try:
                fld = Field(p)
            except ValueError as exc:
                self.error(str(exc), tok=ptok)
        else:
            self.error(f"found {self.tok.text!r}", ["QQ", "GF(p)"])
        if self.field_override is not None:
            fld = self.field_override
        self.expect("[")
        names = [self.name("variable")]
        while self.accept(","):
            names.append(self.name("variable"))
        self.expect("]")
        try:
            ring = GradedRing(fld, names)
        except ValueError as exc:
            self.error(f"ring {name}: {exc}", tok=ntok)
        ideal = []
        if self.accept("/"):
            self.expect("(")
            ideal = self.poly_list(ring, ")")
            try:
                ring = GradedRing(fld, names, ideal)
            except ValueError as exc:
                self.error(f"ring {name}: {exc}", tok=ntok)
            ideal = [Polynomial._raw(ring, dict(g.coeffs)) for g in ideal]
        self.session.rings[name] = ring
        self.session.statements.append(RingDecl(name, fld, names, ideal))

    def _lookup(self, table, what):
        t = self.tok
        name = self.name(what)
        obj = getattr(self.session, table).get(name)
        if obj is None:
            self.error(f"undefined {what} {name!r}", tok=t)
        return name, obj

    def st_map(self, kw):
        ntok = self.tok
        name = self.name("map name")
        self._fresh(name, ntok)
        self.expect(":")
        sname, src = self._lookup("rings", "ring")
        self.expect("->")
        tname, tgt = self._lookup("rings", "ring")
        self.expect("=")
        self.expect("[")
        images = self.poly_list(tgt, "]")
        try:
            phi = RingMap(src, tgt, images)
        except ValueError as exc:
            self.error(f"map {name}: {exc}", tok=ntok)
        self.session.maps[name] = phi
        self.session.statements.append(MapDecl(name, sname, tname, images))

    def st_module(self, kw):
        ntok = self.tok
        name = self.name("module name")
        self._fresh(name, ntok)
        self.expect("over")
        rname, ring = self._lookup("rings", "ring")
        self.expect("=")
        self.expect("coker")
        self.expect("[")
        rows = []
        if not self.accept("]"):
            self.expect("[")
            rows.append(self.poly_list(ring, "]"))
            while self.accept(","):
                self.expect("[")
                rows.append(self.poly_list(ring, "]"))
            self.expect("]")
        explicit = False
        degrees = [0] * len(rows)
        if self.accept("degrees"):
            explicit = True
            self.expect("[")
            degrees = []
            if not self.accept("]"):
                degrees.append(self._signed_int())
                while self.accept(","):
                    degrees.append(self._signed_int())
                self.expect("]")
            if len(degrees) != len(rows):
                self.error(f"module {name}: {len(degrees)} degrees for {len(rows)} generators", tok=ntok)
        width = {len(r) for r in rows}
        if len(width) > 1:
            self.error(f"module {name}: rows of different lengths", tok=ntok)
        try:
            M = FPModule(ring, degrees, Matrix.from_rows(ring, rows, degrees))
        except ValueError as exc:
            self.error(f"module {name}: {exc}", tok=ntok)
        self.session.modules[name] = M
        self.session.statements.append(ModuleDecl(name, rname, rows, degrees, explicit))

    def _signed_int(self):
        neg = self.accept("-")
        v = self.integer()
        return -v if neg else v

    def st_prime_test(self, kw):
        ntok = self.tok
        name = self.name("test name")
        self._fresh(name, ntok)
        self.expect("=")
        if self.accept("matlis_trunc"):
            self.expect("(")
            rname, ring = self._lookup("rings", "ring")
            self.expect(",")
            t = self.integer()
            self.expect(")")
            if t < 1:
                self.error("matlis_trunc needs t >= 1", tok=ntok)
            decl = PrimeTestDecl(name, ring=rname, t=t)
        else:
            mname, _ = self._lookup("modules", "module")
            decl = PrimeTestDecl(name, module=mname)
        self.session.prime_tests[name] = decl
        self.session.statements.append(decl)

    def _role(self, kind):
        name = self.name("role name")
        self.expect("=")
        mname, mod = self._lookup("modules", "module")
        mapname = None
        if self.accept("via"):
            mapname, phi = self._lookup("maps", "map")
            if phi.target is not mod.ring:
                self.error(f"{kind} {name}: module {mname} is not over the target of {mapname}")
        decl = RoleDecl(kind, name, mname, mapname)
        table = self.session.roles if kind == "role" else self.session.locals
        table[name] = decl
        self.session.statements.append(decl)

    def st_role(self, kw):
        self._role("role")

    def st_local(self, kw):
        self._role("local")

    def st_expect(self, kw):
        key = self.name("expectation key")
        self.expect("=")
        value = self._value()
        prov = self.name("provenance")
        if prov not in PROVENANCE:
            self.error(f"unknown provenance {prov!r}", list(PROVENANCE), tok=self.toks[self.i - 1])
        oracle = ""
        if self.tok.kind == "string":
            oracle = self.tok.text[1:-1]
            self.i += 1
        if prov == "derived" and not oracle:
            self.error(f"derived expectation {key!r} must name its oracle", ['"oracle"'])
        exp = Expectation(key, value, prov, oracle)
        self.session.expectations[key] = exp
        self.session.statements.append(exp)

    def _value(self):
        if self.accept("("):
            vals = [self._signed_int()]
            while self.accept(","):
                vals.append(self._signed_int())
            self.expect(")")
            return tuple(vals)
        if self.accept("inf"):
            return "inf"
        if self.accept("unknown"):
            return "unknown"
        if self.accept("true"):
            return True
        if self.accept("false"):
            return False
        if self.tok.text == "-" and self.toks[self.i + 1].text == "inf":
            self.i += 2
            return "-inf"
        return self._signed_int()


def parse_session(text, field=None):
    """Parse a session; ``field`` overrides the coefficient field of every ring."""
    return _Parser(text, field).parse()


def parse_polynomial(text, ring):
    p = _Parser(text)
    out = p.poly(ring)
    if p.tok.kind != "eof":
        p.error(f"trailing input {p.tok.text!r}")
    return out


# -- pretty printing -------------------------------------------------------------

def _fmt_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return "(" + ", ".join(str(x) for x in v) + ")"
    return str(v)


def format_session(session):
    lines = []
    for st in session.statements:
        if isinstance(st, RingDecl):
            fld = f"GF({st.field.p})" if st.field.p else "QQ"
            s = f"ring {st.name} = {fld}[{','.join(st.names)}]"
            if st.ideal:
                s += " / (" + ", ".join(str(g) for g in st.ideal) + ")"
        elif isinstance(st, MapDecl):
            s = f"map {st.name} : {st.source} -> {st.target} = [" + ", ".join(str(f) for f in st.images) + "]"
        elif isinstance(st, ModuleDecl):
            rows = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in st.rows)
            s = f"module {st.name} over {st.ring} = coker [{rows}]"
            if st.explicit_degrees:
                s += " degrees [" + ", ".join(str(d) for d in st.degrees) + "]"
        elif isinstance(st, PrimeTestDecl):
            if st.module is not None:
                s = f"prime_test {st.name} = {st.module}"
            else:
                s = f"prime_test {st.name} = matlis_trunc({st.ring}, {st.t})"
        elif isinstance(st, RoleDecl):
            s = f"{st.kind} {st.name} = {st.module}" + (f" via {st.map}" if st.map else "")
        elif isinstance(st, Expectation):
            s = f"expect {st.key} = {_fmt_value(st.value)} {st.provenance}"
            if st.oracle:
                s += f' "{st.oracle}"'
        else:  # pragma: no cover
            raise TypeError(st)
        lines.append(s + ";")
    return "\n".join(lines) + "\n"


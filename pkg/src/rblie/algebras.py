"""Finite-dimensional algebras given by structure constants, and their laws.

A StructureAlgebra is a basis (names declared in decreasing order), a
kind tag, and sparse tables:

  * kind "pre":  a bilinear product x.y satisfying the left pre-Lie law
      (x.y).z - x.(y.z) = (y.x).z - y.(x.z);
  * kind "post": a product x.y and a Lie bracket [x,y] satisfying
      (x.y).z - x.(y.z) - (y.x).z + y.(x.z) = [y,x].z   and
      x.[y,z] = [x.y, z] + [y, x.z];
  * kind "lie":  a Lie bracket alone.

Validators check the defining laws exhaustively over basis triples and
report every violating triple.  `RBView` packages any product/operator
pair so the Rota-Baxter identity can be checked on sample elements, and
`derived_structure` builds the pre-Lie (weight 0) or post-Lie (weight 1)
operations x.y = [R(x), y] induced by such a view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .expr import ExprError, parse_expr
from .lincomb import LinComb
from .terms import Alphabet, Gen

__all__ = [
    "Report", "StructureAlgebra", "check_lie", "check_pre_lie", "check_post_lie",
    "abelianize", "derivation_prelie_example",
    "RBView", "check_rb", "DerivedOps", "derived_structure",
    "pre_lie_residue", "jacobi_residue", "post_lie_residues",
    "pre_lie_violations", "post_lie_violations", "jacobi_violations",
    "parse_algebra_text", "load_algebra", "format_algebra",
]

KINDS = ("pre", "post", "lie")


@dataclass
class Report:
    """Outcome of one property check."""

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def line(self):
        if self.passed:
            return "PASS %s checked=%d" % (self.name, self.checked)
        return "FAIL %s checked=%d witness=%s" % (self.name, self.checked, self.violations[0])

    def merge(self, other):
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self


class StructureAlgebra:

    def __init__(self, names, kind, dot=None, bracket=None):
        if kind not in KINDS:
            raise ValueError("kind must be one of %s" % (KINDS,))
        self.alphabet = Alphabet(names)
        self.names = self.alphabet.names
        self.kind = kind
        self.dot = self._check_table(dot or {})
        self.bracket = self._check_table(bracket or {})
        if kind == "pre" and self.bracket:
            raise ValueError("a pre-Lie table has no bracket entries")
        if kind == "lie" and self.dot:
            raise ValueError("a Lie table has no dot entries")

    def _check_table(self, table):
        out = {}
        for (a, b), comb in table.items():
            if a not in self.alphabet or b not in self.alphabet:
                raise ValueError("table entry over unknown name (%r,%r)" % (a, b))
            entry = LinComb()
            for name, coeff in comb.items():
                if name not in self.alphabet:
                    raise ValueError("table value uses unknown name %r" % (name,))
                entry.iadd(name, coeff)
            if entry:
                out[(a, b)] = entry
        return out

    @property
    def dim(self):
        return len(self.names)

    def basis_vectors(self):
        return [LinComb.single(n) for n in self.names]

    def _table_comb(self, table, x, y):
        out = LinComb()
        for a, ca in x.items():
            for b, cb in y.items():
                entry = table.get((a, b))
                if entry:
                    out.iadd_comb(entry, ca * cb)
        return out

    def dot_comb(self, x, y):
        return self._table_comb(self.dot, x, y)

    def bracket_comb(self, x, y):
        return self._table_comb(self.bracket, x, y)

    def validate(self):
        if self.kind == "pre":
            return check_pre_lie(self)
        if self.kind == "post":
            return check_post_lie(self)
        return check_lie(self)

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.names == other.names
            and self.kind == other.kind
            and self.dot == other.dot
            and self.bracket == other.bracket
        )


def _fmt(comb, order=None):
    if not comb:
        return "0"
    keys = sorted(comb, key=lambda k: order.index(k) if order else k)
    parts = []
    for k in keys:
        c = comb[k]
        mag = str(k) if abs(c) == 1 else "%s*%s" % (abs(c), k)
        if not parts:
            parts.append(mag if c > 0 else "-" + mag)
        else:
            parts.append("%s %s" % ("+" if c > 0 else "-", mag))
    return " ".join(parts)


def _witness(label, elems, diff, order=None):
    return "%s=(%s) residue=%s" % (label, ",".join(str(e) for e in elems), _fmt(diff, order))


def pre_lie_residue(dot, x, y, z):
    """Left-hand minus right-hand side of the pre-Lie law; zero iff it holds."""
    lhs = dot(dot(x, y), z) - dot(x, dot(y, z))
    rhs = dot(dot(y, x), z) - dot(y, dot(x, z))
    return lhs - rhs


def jacobi_residue(bracket, x, y, z):
    return (bracket(bracket(x, y), z) + bracket(bracket(y, z), x)
            + bracket(bracket(z, x), y))


def post_lie_residues(dot, bracket, x, y, z):
    """Residues of the two post-Lie laws, as a pair of combinations."""
    lhs = (
        dot(dot(x, y), z) - dot(x, dot(y, z))
        - dot(dot(y, x), z) + dot(y, dot(x, z))
    )
    first = lhs - dot(bracket(y, x), z)
    second = dot(x, bracket(y, z)) - bracket(dot(x, y), z) - bracket(y, dot(x, z))
    return first, second


def pre_lie_violations(dot, elems, order=None):
    """Violating triples of the left pre-Lie law among the given elements."""
    report = Report("pre-lie identity")
    for x, y, z in iproduct(elems, repeat=3):
        diff = pre_lie_residue(dot, x, y, z)
        report.checked += 1
        if diff:
            report.violations.append(_witness("triple", (x, y, z), diff, order))
    return report


def jacobi_violations(bracket, elems, name="jacobi", order=None):
    report = Report(name)
    for x, y, z in iproduct(elems, repeat=3):
        s = jacobi_residue(bracket, x, y, z)
        report.checked += 1
        if s:
            report.violations.append(_witness("triple", (x, y, z), s, order))
    return report


def _antisym_violations(bracket, elems, order=None):
    report = Report("antisymmetry")
    for x, y in iproduct(elems, repeat=2):
        s = bracket(x, y) + bracket(y, x)
        report.checked += 1
        if s:
            report.violations.append(_witness("pair", (x, y), s, order))
    return report


def post_lie_violations(dot, bracket, elems, order=None):
    """Violations of the two post-Lie laws tying the product to the bracket."""
    report = Report("post-lie identities")
    for x, y, z in iproduct(elems, repeat=3):
        diff1, diff2 = post_lie_residues(dot, bracket, x, y, z)
        report.checked += 1
        if diff1:
            report.violations.append(_witness("product-law triple", (x, y, z), diff1, order))
        if diff2:
            report.violations.append(_witness("bracket-law triple", (x, y, z), diff2, order))
    return report


def check_pre_lie(algebra):
    vecs = algebra.basis_vectors()
    report = pre_lie_violations(algebra.dot_comb, _named(vecs), order=algebra.names)
    report.name = "pre-lie(%s)" % ",".join(algebra.names)
    return report


def check_lie(algebra):
    vecs = _named(algebra.basis_vectors())
    report = _antisym_violations(algebra.bracket_comb, vecs, order=algebra.names)
    report.merge(jacobi_violations(algebra.bracket_comb, vecs, order=algebra.names))
    report.name = "lie(%s)" % ",".join(algebra.names)
    return report


def check_post_lie(algebra):
    vecs = _named(algebra.basis_vectors())
    report = _antisym_violations(algebra.bracket_comb, vecs, order=algebra.names)
    report.merge(jacobi_violations(algebra.bracket_comb, vecs, order=algebra.names))
    report.merge(post_lie_violations(algebra.dot_comb, algebra.bracket_comb, vecs,
                                     order=algebra.names))
    report.name = "post-lie(%s)" % ",".join(algebra.names)
    return report


class _NamedComb(LinComb):
    """A combination that prints as its defining basis name (witness texts)."""

    __slots__ = ("label",)

    def __str__(self):
        return self.label


def _named(vecs):
    out = []
    for v in vecs:
        nv = _NamedComb(v)
        nv.label = next(iter(v))
        out.append(nv)
    return out


def abelianize(algebra):
    """The same basis with every product and bracket set to zero."""
    return StructureAlgebra(algebra.names, algebra.kind)


def derivation_prelie_example(n, m):
    """The pre-Lie algebra of derivations sum f_i d_i with polynomial
    coefficients in n variables, truncated above total degree m.

    Basis: x^a d_i for multi-indices a with 1 <= |a| <= m and 1 <= i <= n,
    named like x21d1 (exponents, then the derivation index).  The product
    (x^a d_i) . (x^b d_j) = b_i * x^(a+b-e_i) d_j, dropped when the
    resulting degree exceeds m.  Degrees never drop below 1, so the
    truncation kills an ideal and the law survives; the constructor
    validates and refuses a failing table.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")

    def monomials(total):
        if n == 1:
            yield (total,)
            return
        def rec(prefix, left, slots):
            if slots == 1:
                yield prefix + (left,)
                return
            for k in range(left + 1):
                yield from rec(prefix + (k,), left - k, slots - 1)
        yield from rec((), total, n)

    basis = []
    for degree in range(1, m + 1):
        for alpha in sorted(monomials(degree)):
            for i in range(1, n + 1):
                basis.append((alpha, i))

    def name_of(alpha, i):
        return "x%sd%d" % ("".join(str(e) for e in alpha), i)

    names = [name_of(alpha, i) for alpha, i in basis]
    dot = {}
    for alpha, i in basis:
        for beta, j in basis:
            bi = beta[i - 1]
            if bi == 0:
                continue
            gamma = tuple(
                a + b - (1 if k == i - 1 else 0) for k, (a, b) in enumerate(zip(alpha, beta))
            )
            if sum(gamma) > m:
                continue
            dot[(name_of(alpha, i), name_of(beta, j))] = {name_of(gamma, j): Fraction(bi)}
    algebra = StructureAlgebra(names, "pre", dot=dot)
    report = algebra.validate()
    if not report.passed:
        raise AssertionError("truncated derivation table failed its law: %s" % report.line())
    return algebra


# -- Rota-Baxter views and derived operations -----------------------------


@dataclass
class RBView:
    """A product and an operator on some space of LinCombs, with a weight."""

    mult: object
    operator: object
    weight: int


def check_rb(view, pairs):
    """The Rota-Baxter identity on the given element pairs.

    [R(x),R(y)] = R([R(x),y] + [x,R(y)] + weight*[x,y]) for each (x,y).
    """
    report = Report("rota-baxter weight %d" % view.weight)
    for x, y in pairs:
        rx = view.operator(x)
        ry = view.operator(y)
        inner = view.mult(rx, y) + view.mult(x, ry)
        if view.weight:
            inner = inner + view.mult(x, y)
        diff = view.mult(rx, ry) - view.operator(inner)
        report.checked += 1
        if diff:
            report.violations.append("pair=(%s | %s) residue-terms=%d" % (x, y, len(diff)))
    return report


@dataclass
class DerivedOps:
    """Operations induced on a Rota-Baxter view: x.y = [R(x),y], and for
    weight 1 also the ambient bracket."""

    kind: str
    dot: object
    bracket: object = None


def derived_structure(view):
    def dot(x, y):
        return view.mult(view.operator(x), y)

    if view.weight == 0:
        return DerivedOps("pre", dot)
    return DerivedOps("post", dot, view.mult)


# -- text format -----------------------------------------------------------


def parse_algebra_text(text):
    """Read a structure-constant file.

    Lines: optional "kind pre|post|lie", one "basis e1 e2 ..." (decreasing
    order), then "dot ei ej = <expr>" / "bracket ei ej = <expr>" entries;
    omitted pairs are zero; "#" starts a comment line.  Without a kind
    line the tables decide: dot only -> pre, bracket only -> lie, both ->
    post.
    """
    kind = None
    names = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        head = parts[0]
        rest = parts[1] if len(parts) > 1 else ""
        if head == "kind":
            if kind is not None:
                raise ValueError("line %d: duplicate kind line" % lineno)
            if rest not in KINDS:
                raise ValueError("line %d: kind must be one of %s" % (lineno, KINDS))
            kind = rest
        elif head == "basis":
            if names is not None:
                raise ValueError("line %d: duplicate basis line" % lineno)
            names = rest.split()
            if not names:
                raise ValueError("line %d: empty basis" % lineno)
        elif head in ("dot", "bracket"):
            fields = rest.split(None, 2)
            if len(fields) != 3 or not fields[2].startswith("="):
                raise ValueError("line %d: expected '%s ei ej = expr'" % (lineno, head))
            entries.append((lineno, head, fields[0], fields[1], fields[2][1:].strip()))
        else:
            raise ValueError("line %d: unknown directive %r" % (lineno, head))
    if names is None:
        raise ValueError("missing basis line")
    alphabet = Alphabet(names)
    tables = {"dot": {}, "bracket": {}}
    for lineno, table, a, b, rhs in entries:
        for nm in (a, b):
            if nm not in alphabet:
                raise ValueError("line %d: unknown basis element %r" % (lineno, nm))
        if (a, b) in tables[table]:
            raise ValueError("line %d: duplicate %s entry (%s,%s)" % (lineno, table, a, b))
        try:
            comb = parse_expr(rhs, alphabet)
        except ExprError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from None
        entry = {}
        for w, c in comb.items():
            if not isinstance(w, Gen):
                raise ValueError("line %d: entries must be combinations of basis elements"
                                 % lineno)
            entry[w.name] = c
        tables[table][(a, b)] = entry
    if kind is None:
        kind = "post" if (tables["dot"] and tables["bracket"]) else (
            "lie" if tables["bracket"] else "pre")
    return StructureAlgebra(names, kind, dot=tables["dot"], bracket=tables["bracket"])


def load_algebra(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def format_algebra(algebra):
    """Canonical text form; parse_algebra_text inverts it exactly."""
    lines = ["kind %s" % algebra.kind, "basis %s" % " ".join(algebra.names)]
    for label, table in (("dot", algebra.dot), ("bracket", algebra.bracket)):
        for a in algebra.names:
            for b in algebra.names:
                entry = table.get((a, b))
                if entry:
                    lines.append("%s %s %s = %s" % (label, a, b, _fmt(entry, algebra.names)))
    return "\n".join(lines) + "\n"

"""Enveloping operator Lie algebras of pre-Lie and post-Lie structures.

Given a finite-dimensional pre-Lie algebra (weight 0) or post-Lie algebra
(weight 1) with basis X, the construction is spanned by a set E of
words built from X and the operator letter R.  A word lies in E when

  * it is a generator, or
  * it is R(w) for some w in E, or
  * it is a bracket word whose letters are generators and R-letters
    R(w) with w in E but not a generator, shaped like a partially
    commutative basis word for the graph that joins every pair of
    R-letters; for weight 1 every bracket node must contain at least
    one R symbol.

Products of E-words straighten back into E through the generic engine plus
three letter rules: R-against-R is the Rota-Baxter composition, [R(x), y]
for generators x, y is the stored product x.y, and for weight 1 [x, y] on
generators is the stored bracket.  Bracket words excluded from E are
exactly the ones those rules rewrite, so reduction terminates in E and
`reduce_to_env` evaluates any expression to coordinates.
"""

from __future__ import annotations

from collections import Counter

from .free_rb import FreeRBContext
from .lincomb import LinComb
from .lyndon import ls_shape_ok
from .terms import Gen, RApp

__all__ = [
    "EnvContext", "is_env_basis", "enum_env_basis", "env_mult",
    "reduce_to_env", "embed", "pbw_table",
]


class EnvContext(FreeRBContext):
    """Straightening context for the enveloping algebra of a structure table.

    The table is validated on construction: a table violating its own
    law would poison every downstream identity, so this fails closed.
    """

    def __init__(self, algebra, fuel_limit=None, validate=True):
        if algebra.kind not in ("pre", "post"):
            raise ValueError("enveloping construction needs a pre or post table, got %r"
                             % (algebra.kind,))
        if validate:
            report = algebra.validate()
            if not report.passed:
                raise ValueError("refusing a table that fails its law: %s" % report.line())
        weight = 0 if algebra.kind == "pre" else 1
        super().__init__(algebra.alphabet, weight=weight, fuel_limit=fuel_limit)
        self.algebra = algebra
        self.kind = algebra.kind

    def _lift(self, entry):
        out = LinComb()
        if entry:
            for name, coeff in entry.items():
                out.iadd(self.alphabet.gen(name), coeff)
        return out

    def letter_rule(self, u, v, fuel):
        if isinstance(v, RApp):
            return super().letter_rule(u, v, fuel)
        if isinstance(u, RApp):
            if isinstance(u.arg, Gen):
                return self._lift(self.algebra.dot.get((u.arg.name, v.name)))
            return None
        if self.kind == "post":
            return self._lift(self.algebra.bracket.get((u.name, v.name)))
        return None

    def interior_r_ok(self, argword):
        return not isinstance(argword, Gen)

    def _atom_ok(self, a):
        if isinstance(a, Gen):
            return a.name in self.alphabet
        return (isinstance(a, RApp) and not isinstance(a.arg, Gen)
                and self.is_basis_word(a.arg))

    def _node_has_r(self, node):
        return node.degr > 0

    def _basis_check(self, w):
        if isinstance(w, Gen):
            return w.name in self.alphabet
        if isinstance(w, RApp):
            return self.is_basis_word(w.arg)
        node_ok = self._node_has_r if self.weight else None
        return ls_shape_ok(w, self.adjacent, self._atom_ok, node_ok)


def is_env_basis(ctx, w):
    return ctx.is_basis_word(w)


def enum_env_basis(ctx, max_deg, max_rdeg):
    from .straighten import enumerate_basis

    return enumerate_basis(ctx, max_deg, max_rdeg)


def env_mult(ctx, u, v):
    return ctx.mult(u, v)


def reduce_to_env(ctx, x):
    """Coordinates in E of any word or combination over generators and R."""
    return ctx.evaluate(x)


def embed(ctx, x):
    """The generator-level copy of an element of the underlying algebra,
    given as a basis name or a LinComb over names."""
    if isinstance(x, str):
        return LinComb.single(ctx.alphabet.gen(x))
    return ctx._lift(x)


def pbw_table(ctx, max_deg, max_rdeg):
    """Counter mapping (generator-degree, operator-degree) to the number of
    basis words of that bidegree."""
    table = Counter()
    for w in enum_env_basis(ctx, max_deg, max_rdeg):
        table[(w.xdeg, w.degr)] += 1
    return table

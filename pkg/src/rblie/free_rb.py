"""The free Lie algebra with a Rota-Baxter operator of weight 0 or 1.

The operator R satisfies

    [R(x), R(y)] = R([R(x), y] + [x, R(y)] + weight * [x, y]).

Basis words are built in layers: Lyndon-Shirshov words over the
generators, then admissible words over the alphabet enlarged by letters
R(z) for every basis word z, where any two R-letters are declared to
commute... except they do not commute to zero: a bracket of two
R-letters is instead resolved by the identity above, which is why the
admissibility filter treats the R-letters as a mutually "adjacent"
clique.  The resulting basis does not depend on the weight.

Generators are smaller than all R-letters; R-letters compare by their
arguments (see `terms`).
"""

from __future__ import annotations

from .lincomb import LinComb
from .lyndon import ls_shape_ok
from .straighten import BasisContext, enumerate_basis
from .terms import Gen, RApp

__all__ = ["FreeRBContext", "is_free_basis", "enum_free_basis", "rb_mult", "apply_R"]


class FreeRBContext(BasisContext):

    supports_operator = True

    def __init__(self, alphabet, weight=0, fuel_limit=None):
        if weight not in (0, 1):
            raise ValueError("weight must be 0 or 1, got %r" % (weight,))
        super().__init__(alphabet)
        self.weight = weight
        if fuel_limit is not None:
            self.fuel_limit = fuel_limit

    def adjacent(self, a, b):
        # distinct R-letters only: a clique has no loops, and a letter
        # repeated next to itself ([R(a),[R(a),a]]) stays a basis word
        return isinstance(a, RApp) and isinstance(b, RApp) and a != b

    def letter_rule(self, u, v, fuel):
        if isinstance(u, RApp) and isinstance(v, RApp):
            inner = self._mult(u, v.arg, fuel) + self._mult(u.arg, v, fuel)
            if self.weight:
                inner.iadd_comb(self._mult(u.arg, v.arg, fuel))
            return self.apply_r(inner)
        return None

    def _atom_ok(self, a):
        if isinstance(a, Gen):
            return a.name in self.alphabet
        return self.is_basis_word(a.arg)

    def _basis_check(self, w):
        if isinstance(w, Gen):
            return w.name in self.alphabet
        if isinstance(w, RApp):
            return self.is_basis_word(w.arg)
        return ls_shape_ok(w, adjacent=self.adjacent, atom_ok=self._atom_ok)


def is_free_basis(w, alphabet):
    """Membership of w in the standard basis of the free Rota-Baxter Lie
    algebra over the alphabet.  The weight plays no role here."""
    return FreeRBContext(alphabet).is_basis_word(w)


def enum_free_basis(alphabet, max_deg, max_rdeg):
    """Basis words with at most max_deg generator occurrences and max_rdeg
    R symbols, greatest first.  Independent of the weight."""
    return enumerate_basis(FreeRBContext(alphabet), max_deg, max_rdeg)


def rb_mult(ctx, u, v):
    """Bracket of two basis words, straightened over the standard basis."""
    return ctx.mult_comb(u, v)


def apply_R(ctx, x):
    """The operator applied to a combination of basis words."""
    return ctx.apply_r(x)

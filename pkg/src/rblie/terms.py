"""Bracketed words over an ordered alphabet extended by a unary operator R.

A word is a binary tree: leaves are generators, `R(...)` nodes wrap a
complete word, and `[u,v]` nodes pair two words.  An R-node counts as a
*single letter* of the extended alphabet, so `[[R(R(a)),b],[R(c),d]]` has
four letters (R(R(a)), b, R(c), d) and three R symbols overall.

Order convention, used everywhere downstream:

  * generators are declared in DECREASING order: the first declared name
    is the greatest letter (rank 0);
  * every generator is smaller than every R-letter;
  * two R-letters compare by comparing their argument words;
  * sequences of letters compare letterwise from the left, and a proper
    prefix is GREATER than any of its extensions ("a" > "ab").

The prefix rule is what makes "w greater than every rotation" a sensible
definition of a Lyndon-Shirshov word with the greatest letter in front.

Three size measures on a word w:

  * ``w.deg``  - number of letters of the extended alphabet (an R-node
    counts as one letter regardless of its contents);
  * ``w.degr`` - number of R symbols written anywhere in w;
  * ``w.xdeg`` - number of generator occurrences written anywhere in w,
    including inside R arguments.  This is the measure that keeps
    enumeration up to a bound finite: there are infinitely many words
    with deg 1 (every R(z) has deg 1) but only finitely many with
    bounded xdeg and degr.
"""

from __future__ import annotations

import re
from functools import cmp_to_key

__all__ = [
    "Word", "Gen", "RApp", "Br", "Alphabet",
    "atoms", "compare_letters", "compare_words", "total_cmp",
    "descending_key", "sort_words_descending",
]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Word:
    """Base class; instances are immutable and hashable."""

    __slots__ = ("deg", "degr", "xdeg", "_hash", "_atoms")

    def __eq__(self, other):
        raise NotImplementedError

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return str(self)


class Gen(Word):
    """A generator letter.  Lower rank means greater letter (rank 0 is top)."""

    __slots__ = ("name", "rank")

    def __init__(self, name, rank):
        self.name = name
        self.rank = rank
        self.deg = 1
        self.degr = 0
        self.xdeg = 1
        self._atoms = None
        self._hash = hash(("g", name, rank))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Gen
            and self._hash == other._hash
            and self.name == other.name
            and self.rank == other.rank
        )

    __hash__ = Word.__hash__

    def __str__(self):
        return self.name


class RApp(Word):
    """The operator applied to a word; a single letter of the extended alphabet."""

    __slots__ = ("arg",)

    def __init__(self, arg):
        if not isinstance(arg, Word):
            raise TypeError("R argument must be a Word")
        self.arg = arg
        self.deg = 1
        self.degr = 1 + arg.degr
        self.xdeg = arg.xdeg
        self._atoms = None
        self._hash = hash(("R", arg))

    def __eq__(self, other):
        if self is other:
            return True
        return type(other) is RApp and self._hash == other._hash and self.arg == other.arg

    __hash__ = Word.__hash__

    def __str__(self):
        return "R(%s)" % self.arg


class Br(Word):
    """A bracket of two words."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        if not isinstance(left, Word) or not isinstance(right, Word):
            raise TypeError("bracket halves must be Words")
        self.left = left
        self.right = right
        self.deg = left.deg + right.deg
        self.degr = left.degr + right.degr
        self.xdeg = left.xdeg + right.xdeg
        self._atoms = None
        self._hash = hash(("b", left, right))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Br
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Word.__hash__

    def __str__(self):
        return "[%s,%s]" % (self.left, self.right)


def atoms(w):
    """The flattening of w: a tuple of its letters (Gen and RApp nodes), left to right."""
    if isinstance(w, tuple):
        return w
    got = w._atoms
    if got is None:
        if isinstance(w, Br):
            got = atoms(w.left) + atoms(w.right)
        else:
            got = (w,)
        w._atoms = got
    return got


def compare_letters(a, b):
    """Three-way comparison of two letters of the extended alphabet.

    Returns negative/zero/positive as a </=/> b.  Generators compare by
    rank (rank 0 greatest); any generator is below any R-letter; R-letters
    compare by their argument words.
    """
    a_gen = isinstance(a, Gen)
    b_gen = isinstance(b, Gen)
    if a_gen and b_gen:
        return b.rank - a.rank
    if a_gen:
        return -1
    if b_gen:
        return 1
    return compare_words(a.arg, b.arg)


def compare_words(u, v):
    """Three-way comparison of word flattenings; a proper prefix is greater.

    Accepts Words or tuples of letters.  Distinct bracketings of the same
    letter sequence compare equal here; use total_cmp for a total order.
    """
    su = atoms(u)
    sv = atoms(v)
    for a, b in zip(su, sv):
        c = compare_letters(a, b)
        if c:
            return c
    if len(su) == len(sv):
        return 0
    return 1 if len(su) < len(sv) else -1


def _structure_cmp(u, v):
    ku = 0 if isinstance(u, Gen) else (1 if isinstance(u, RApp) else 2)
    kv = 0 if isinstance(v, Gen) else (1 if isinstance(v, RApp) else 2)
    if ku != kv:
        return ku - kv
    if ku == 0:
        return v.rank - u.rank
    if ku == 1:
        return total_cmp(u.arg, v.arg)
    c = total_cmp(u.left, v.left)
    if c:
        return c
    return total_cmp(u.right, v.right)


def total_cmp(u, v):
    """compare_words refined by a structural tie-break, total on all Words."""
    if u == v:
        return 0
    c = compare_words(u, v)
    if c:
        return c
    return _structure_cmp(u, v)


def descending_key():
    """Sort key putting greater words first."""
    return cmp_to_key(lambda a, b: -total_cmp(a, b))


def sort_words_descending(words):
    return sorted(words, key=descending_key())


class Alphabet:
    """A finite ordered set of generator names, declared greatest first."""

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet must declare at least one generator")
        seen = set()
        for n in names:
            if not _NAME_RE.match(n):
                raise ValueError("bad generator name %r" % (n,))
            if n == "R":
                raise ValueError("the name R is reserved for the operator")
            if n in seen:
                raise ValueError("duplicate generator name %r" % (n,))
            seen.add(n)
        self.names = names
        self._gens = {n: Gen(n, i) for i, n in enumerate(names)}

    @classmethod
    def from_spec(cls, spec):
        """Parse a comma-separated declaration like "a,b,c" (decreasing order)."""
        return cls([p.strip() for p in spec.split(",") if p.strip()])

    def gen(self, name):
        try:
            return self._gens[name]
        except KeyError:
            raise ValueError("unknown generator %r" % (name,)) from None

    def gens(self):
        """All generators, greatest first."""
        return tuple(self._gens[n] for n in self.names)

    def __contains__(self, name):
        if isinstance(name, Gen):
            return self._gens.get(name.name) == name
        return name in self._gens

    def __len__(self):
        return len(self.names)

    def __repr__(self):
        return "Alphabet(%s)" % (",".join(self.names))

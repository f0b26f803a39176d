"""Free and partially commutative Lie algebra bases.

A commutation graph on the generators declares which pairs of letters
are required to commute (bracket to zero).  The admissible words are the
Lyndon-Shirshov words in which, at every bracket node, the first letter
of the right half fails to commute with at least one letter of the left
half; they form a linear basis of the Lie algebra with relations
[x,y] = 0 for each edge (x,y).  The empty graph gives back the classical
Lyndon-Shirshov basis of the free Lie algebra.

Products are computed by the straightening engine with one extra letter
rule: the bracket of two adjacent generators is zero.
"""

from __future__ import annotations

from .lincomb import LinComb
from .lyndon import ls_shape_ok
from .straighten import BasisContext, enumerate_basis
from .terms import Gen

__all__ = [
    "CommGraph", "PCLSContext", "LSContext",
    "is_pcls", "enum_pcls", "pc_mult",
    "enum_ls", "lie_mult",
    "parse_graph_text", "load_graph", "format_graph",
]


class CommGraph:
    """A loop-free undirected graph on generator names, stored as a set of edges."""

    def __init__(self, vertices, edges=()):
        self.vertices = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertex")
        pairs = set()
        for a, b in edges:
            if a not in vset:
                raise ValueError("unknown vertex %r in edge" % (a,))
            if b not in vset:
                raise ValueError("unknown vertex %r in edge" % (b,))
            if a == b:
                raise ValueError("loop edge at %r" % (a,))
            pairs.add(frozenset((a, b)))
        self.edges = frozenset(pairs)

    @classmethod
    def empty(cls, alphabet):
        return cls(alphabet.names)

    @classmethod
    def complete(cls, alphabet):
        names = alphabet.names
        return cls(names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:]])

    def adjacent(self, a, b):
        if a not in self.vertices or b not in self.vertices:
            raise ValueError("letter not in vertex set: %r" % (a if a not in self.vertices else b,))
        return frozenset((a, b)) in self.edges


def parse_graph_text(text, alphabet):
    """Read a graph over the alphabet: one "edge <name> <name>" per line.

    Blank lines and lines starting with "#" are skipped; unknown names
    and malformed lines are errors.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "edge":
            raise ValueError("line %d: expected 'edge <name> <name>'" % lineno)
        for name in parts[1:]:
            if name not in alphabet:
                raise ValueError("line %d: unknown generator %r" % (lineno, name))
        edges.append((parts[1], parts[2]))
    return CommGraph(alphabet.names, edges)


def load_graph(path, alphabet):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), alphabet)


def format_graph(graph):
    lines = []
    index = {n: i for i, n in enumerate(graph.vertices)}
    for pair in sorted(graph.edges, key=lambda p: sorted(index[x] for x in p)):
        a, b = sorted(pair, key=index.get)
        lines.append("edge %s %s" % (a, b))
    return "\n".join(lines) + ("\n" if lines else "")


class PCLSContext(BasisContext):
    """Basis of the Lie algebra over an alphabet with a commutation graph."""

    def __init__(self, alphabet, graph=None):
        super().__init__(alphabet)
        self.graph = graph if graph is not None else CommGraph.empty(alphabet)
        for v in self.graph.vertices:
            if v not in alphabet:
                raise ValueError("graph vertex %r not in alphabet" % (v,))

    def adjacent(self, a, b):
        return (
            isinstance(a, Gen)
            and isinstance(b, Gen)
            and frozenset((a.name, b.name)) in self.graph.edges
        )

    def letter_rule(self, u, v, fuel):
        if self.adjacent(u, v):
            return LinComb()
        return None

    def _atom_ok(self, a):
        if not isinstance(a, Gen):
            return False
        if a.name not in self.graph.vertices:
            raise ValueError("letter not in vertex set: %r" % a.name)
        return a.name in self.alphabet

    def _basis_check(self, w):
        return ls_shape_ok(w, adjacent=self.adjacent, atom_ok=self._atom_ok)


class LSContext(PCLSContext):
    """The free Lie algebra: a commutation graph with no edges."""

    def __init__(self, alphabet):
        super().__init__(alphabet, CommGraph.empty(alphabet))


def is_pcls(w, alphabet, graph):
    """Admissibility of w for the given commutation graph."""
    return PCLSContext(alphabet, graph).is_basis_word(w)


def enum_pcls(alphabet, graph, max_deg):
    """Admissible words of degree at most max_deg, greatest first."""
    return enumerate_basis(PCLSContext(alphabet, graph), max_deg, 0)


def pc_mult(ctx, u, v):
    """Bracket of two admissible words over a commutation graph."""
    return ctx.mult_comb(u, v)


def enum_ls(alphabet, max_deg):
    """Lyndon-Shirshov basis words of the free Lie algebra, greatest first."""
    return enumerate_basis(LSContext(alphabet), max_deg, 0)


def lie_mult(ctx, u, v):
    """Bracket of two Lyndon-Shirshov words in the free Lie algebra."""
    return ctx.mult_comb(u, v)

"""Randomized and exhaustive property checks over straightening contexts.

Every check returns a Report whose line() reads PASS/FAIL with a counted
sample size and, on failure, the first witness.  Sampling uses the
in-house xorshift generator so a reported seed replays exactly.

Properties by name (the CLI exposes the same names):

  anticomm      u*v + v*u vanishes on sampled basis pairs
  jacobi        the cyclic triple sum vanishes on sampled basis triples
  rb            the operator obeys its weight-lambda composition law
  derived-pre   x.y = R(x)*y is left pre-Lie (weight 0 contexts)
  derived-post  the same product plus the ambient bracket is post-Lie
                (weight 1 contexts)
  assump        products stay inside the expected bidegree box and the
                top-degree part uses exactly the combined letters
  pbw           enveloping basis counts per bidegree match the counts
                over the abelianized table
  reduce-hom    reduction to the enveloping basis is a homomorphism from
                the free operator algebra, landing inside the basis
  enum-oracles  enumeration counts match closed-form and brute-force
                oracles
"""

from __future__ import annotations

from collections import Counter

from .algebras import (
    Report, abelianize, jacobi_residue, post_lie_residues, pre_lie_residue,
)
from .expr import format_word
from .free_rb import FreeRBContext
from .lincomb import LinComb
from .rng import XorShift64
from .straighten import enumerate_basis
from .terms import Br, RApp, atoms, compare_words

__all__ = [
    "PROPERTIES", "run_property", "sample_basis",
    "check_anticomm", "check_jacobi", "check_rb_property", "check_derived",
    "check_graded_shape", "check_pbw", "check_reduce_hom", "check_spanning",
    "check_enum_oracles", "all_operator_words", "witt_count",
]

PROPERTIES = (
    "anticomm", "jacobi", "rb", "derived-pre", "derived-post",
    "assump", "pbw", "reduce-hom", "enum-oracles",
)


def sample_basis(ctx, max_deg, max_rdeg, seed, count, arity):
    """`count` tuples of basis words, drawn with replacement."""
    words = enumerate_basis(ctx, max_deg, max_rdeg)
    if not words:
        raise ValueError("no basis words within the given bounds")
    rng = XorShift64(seed)
    return [tuple(rng.choice(words) for _ in range(arity)) for _ in range(count)]


def _wit(words):
    return "(%s)" % " | ".join(format_word(w) for w in words)


def check_anticomm(ctx, pairs):
    report = Report("anticomm")
    for u, v in pairs:
        residue = ctx.mult(u, v) + ctx.mult(v, u)
        report.checked += 1
        if residue:
            report.violations.append(_wit((u, v)))
    return report


def check_jacobi(ctx, triples):
    report = Report("jacobi")
    for u, v, w in triples:
        x, y, z = (LinComb.single(t) for t in (u, v, w))
        residue = jacobi_residue(ctx.mult_comb, x, y, z)
        report.checked += 1
        if residue:
            report.violations.append(_wit((u, v, w)))
    return report


def check_rb_property(ctx, pairs):
    report = Report("rb weight %d" % ctx.weight)
    m = ctx.mult_comb
    for u, v in pairs:
        x, y = LinComb.single(u), LinComb.single(v)
        rx, ry = ctx.apply_r(x), ctx.apply_r(y)
        inner = m(rx, y) + m(x, ry)
        if ctx.weight:
            inner.iadd_comb(m(x, y))
        residue = m(rx, ry) - ctx.apply_r(inner)
        report.checked += 1
        if residue:
            report.violations.append(_wit((u, v)))
    return report


def check_derived(ctx, triples):
    """The pre-Lie or post-Lie law for x.y = R(x)*y, per the context weight."""
    m = ctx.mult_comb

    def dot(a, b):
        return m(ctx.apply_r(a), b)

    post = bool(ctx.weight)
    report = Report("derived-post" if post else "derived-pre")
    for u, v, w in triples:
        x, y, z = (LinComb.single(t) for t in (u, v, w))
        if post:
            d1, d2 = post_lie_residues(dot, m, x, y, z)
            bad = bool(d1) or bool(d2)
        else:
            bad = bool(pre_lie_residue(dot, x, y, z))
        report.checked += 1
        if bad:
            report.violations.append(_wit((u, v, w)))
    return report


def check_graded_shape(ctx, pairs):
    """Outputs of u*v stay within (deg u + deg v, rdeg u + rdeg v); the part
    at full letter degree permutes exactly the letters of u and v, and each
    such word is a bracket whose right factor is >= the smaller operand."""
    report = Report("assump")
    for u, v in pairs:
        out = ctx.mult(u, v)
        dtop = u.deg + v.deg
        rtop = u.degr + v.degr
        expected = Counter(atoms(u)) + Counter(atoms(v))
        smaller = u if compare_words(u, v) < 0 else v
        bad = None
        for w in out:
            if w.deg > dtop or w.degr > rtop:
                bad = "overflow %s" % format_word(w)
                break
            if w.deg == dtop:
                if Counter(atoms(w)) != expected:
                    bad = "letters %s" % format_word(w)
                    break
                if not isinstance(w, Br) or compare_words(w.right, smaller) < 0:
                    bad = "leading shape %s" % format_word(w)
                    break
        report.checked += 1
        if bad:
            report.violations.append("%s %s" % (_wit((u, v)), bad))
    return report


def check_pbw(ctx, max_deg, max_rdeg):
    """Basis counts per (letter degree, operator degree) are blind to the
    structure constants: the abelianized table yields identical counts."""
    from .enveloping import EnvContext, pbw_table

    report = Report("pbw deg<=%d rdeg<=%d" % (max_deg, max_rdeg))
    flat = EnvContext(abelianize(ctx.algebra))
    ours = pbw_table(ctx, max_deg, max_rdeg)
    theirs = pbw_table(flat, max_deg, max_rdeg)
    report.checked = sum(ours.values())
    for key in sorted(set(ours) | set(theirs)):
        if ours.get(key, 0) != theirs.get(key, 0):
            report.violations.append(
                "bidegree %s: %d here, %d abelianized"
                % (key, ours.get(key, 0), theirs.get(key, 0)))
    return report


def check_reduce_hom(ctx, max_deg, max_rdeg, seed, count):
    """evaluate(u*v) == evaluate(u) * evaluate(v) across the free-to-
    enveloping reduction, with every output inside the enveloping basis."""
    free = FreeRBContext(ctx.alphabet, weight=ctx.weight)
    pairs = sample_basis(free, max_deg, max_rdeg, seed, count, 2)
    report = Report("reduce-hom")
    for u, v in pairs:
        lhs = ctx.evaluate(free.mult(u, v))
        rhs = ctx.mult_comb(ctx.evaluate(u), ctx.evaluate(v))
        report.checked += 1
        if lhs - rhs:
            report.violations.append(_wit((u, v)))
        else:
            stray = [w for w in lhs if not ctx.is_basis_word(w)]
            if stray:
                report.violations.append(
                    "%s escapes basis via %s" % (_wit((u, v)), format_word(stray[0])))
    return report


def all_operator_words(alphabet, max_deg, max_rdeg):
    """Every bracketing over generators and R with the given bidegree
    bounds, basis-shaped or not.  Grows fast; keep the bounds small."""
    gens = list(alphabet.gens())
    memo = {}

    def level(n, r):
        if (n, r) in memo:
            return memo[(n, r)]
        out = []
        if n == 1 and r == 0:
            out.extend(gens)
        if r >= 1:
            out.extend(RApp(w) for w in level(n, r - 1))
        if n >= 2:
            for i in range(1, n):
                for s in range(r + 1):
                    for left in level(i, s):
                        for right in level(n - i, r - s):
                            out.append(Br(left, right))
        memo[(n, r)] = out
        return out

    words = []
    for n in range(1, max_deg + 1):
        for r in range(max_rdeg + 1):
            words.extend(level(n, r))
    return words


def check_spanning(ctx, max_deg, max_rdeg):
    """Every operator word reduces to a combination of basis words."""
    report = Report("spanning deg<=%d rdeg<=%d" % (max_deg, max_rdeg))
    for w in all_operator_words(ctx.alphabet, max_deg, max_rdeg):
        out = ctx.evaluate(w)
        report.checked += 1
        stray = [t for t in out if not ctx.is_basis_word(t)]
        if stray:
            report.violations.append(
                "%s reduces onto non-basis %s" % (format_word(w), format_word(stray[0])))
    return report


def _mobius(n):
    result = 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_count(k, n):
    """Dimension of the degree-n slice of the free Lie algebra on k letters."""
    total = sum(_mobius(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


def check_enum_oracles():
    from .pcls import LSContext, PCLSContext, CommGraph
    from .terms import Alphabet

    report = Report("enum-oracles")
    ctx = LSContext(Alphabet(("a", "b")))
    listed_ls = enumerate_basis(ctx, 6)
    per_deg = Counter(w.deg for w in listed_ls)
    for n in range(1, 7):
        want = witt_count(2, n)
        report.checked += 1
        if per_deg.get(n, 0) != want:
            report.violations.append(
                "free Lie on 2 letters, degree %d: %d words, closed form %d"
                % (n, per_deg.get(n, 0), want))
    brute_ls = {w for w in all_operator_words(ctx.alphabet, 6, 0) if ctx.is_basis_word(w)}
    report.checked += 1
    if brute_ls != set(listed_ls):
        diff = sorted(brute_ls ^ set(listed_ls), key=lambda w: w.deg)
        report.violations.append(
            "free Lie basis, degree <= 6: filter and builder disagree on %s"
            % format_word(diff[0]))

    alphabet = Alphabet(("a", "b", "c"))
    graph = CommGraph(("a", "b", "c"), (("a", "b"),))
    pctx = PCLSContext(alphabet, graph)
    brute = {w for w in all_operator_words(alphabet, 4, 0) if pctx.is_basis_word(w)}
    listed = set(enumerate_basis(pctx, 4))
    report.checked += 1
    if brute != listed:
        diff = sorted(brute ^ listed, key=lambda w: w.deg)
        report.violations.append(
            "commuting-pair basis, degree <= 4: filter and builder disagree on %s"
            % format_word(diff[0]))
    return report


def run_property(prop, ctx, seed=1, count=200, max_deg=3, max_rdeg=2):
    """Dispatch a named property against a context; Report out."""
    if prop not in PROPERTIES:
        raise ValueError("unknown property %r" % (prop,))
    if prop == "enum-oracles":
        return check_enum_oracles()
    if ctx is None:
        raise ValueError("property %r needs a context" % (prop,))
    needs_operator = prop in ("rb", "derived-pre", "derived-post", "pbw", "reduce-hom")
    if needs_operator and not ctx.supports_operator:
        raise ValueError("property %r needs an operator context" % (prop,))
    if prop == "derived-pre" and ctx.weight != 0:
        raise ValueError("derived-pre applies to weight 0 contexts")
    if prop == "derived-post" and ctx.weight != 1:
        raise ValueError("derived-post applies to weight 1 contexts")
    if prop in ("pbw", "reduce-hom") and not hasattr(ctx, "algebra"):
        raise ValueError("property %r needs an enveloping context" % (prop,))

    if prop == "anticomm":
        return check_anticomm(ctx, sample_basis(ctx, max_deg, max_rdeg, seed, count, 2))
    if prop == "jacobi":
        return check_jacobi(ctx, sample_basis(ctx, max_deg, max_rdeg, seed, count, 3))
    if prop == "rb":
        return check_rb_property(ctx, sample_basis(ctx, max_deg, max_rdeg, seed, count, 2))
    if prop in ("derived-pre", "derived-post"):
        return check_derived(ctx, sample_basis(ctx, max_deg, max_rdeg, seed, count, 3))
    if prop == "assump":
        return check_graded_shape(ctx, sample_basis(ctx, max_deg, max_rdeg, seed, count, 2))
    if prop == "pbw":
        return check_pbw(ctx, max_deg, max_rdeg)
    return check_reduce_hom(ctx, max_deg, max_rdeg, seed, count)

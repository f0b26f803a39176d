"""
Lyndon-Shirshov word bases for free Lie algebras
================================================

Enumerate the standard monomial basis of a free Lie algebra on a
ranked alphabet, check the count against the classical necklace
formula, and multiply two basis elements.
"""

from rblie.expr import format_lincomb, format_word
from rblie.pcls import LSContext, enum_ls, lie_mult
from rblie.terms import Alphabet
from rblie.verify import witt_count

# Alphabet order is decreasing: the first name is the greatest letter.
al = Alphabet(("a", "b"))

# All basis words with at most 4 letters, greatest first.
for w in enum_ls(al, 4):
    print(format_word(w))

# Per-degree counts match the necklace formula.
print()
for n in range(1, 7):
    got = sum(1 for w in enum_ls(al, n) if w.deg == n)
    print("degree %d: %d basis words (formula says %d)" % (n, got, witt_count(2, n)))

# Products of basis words straighten back into the basis.
ctx = LSContext(al)
words = enum_ls(al, 3)
u = words[1]  # [a,[a,b]]
v = words[-1]  # b
print()
print("%s * %s = %s" % (format_word(u), format_word(v), format_lincomb(lie_mult(ctx, u, v))))

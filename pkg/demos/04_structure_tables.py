"""
Finite-dimensional algebras from structure constant files
=========================================================

Load small algebras from text files, run their defining laws, and
build the vector-field example whose product is a derivation acting
on a polynomial truncation.
"""

from rblie.algebras import (check_post_lie, check_pre_lie, derivation_prelie_example,
                            format_algebra, load_algebra)

# A two-dimensional algebra with u*u = u, u*t = t*u = t.
pre = load_algebra("demos/algebras/two_dim.alg")
print(format_algebra(pre))
print(check_pre_lie(pre).line())

# Rotations in three dimensions, packaged with a zero circle product.
post = load_algebra("demos/algebras/so3_post.alg")
print(check_post_lie(post).line())

# Derivations x^i d/dx acting on polynomials modulo x^(m+1).  The
# product table is computed, not typed in.
dv = derivation_prelie_example(1, 2)
print(check_pre_lie(dv).line())
print(format_algebra(dv))

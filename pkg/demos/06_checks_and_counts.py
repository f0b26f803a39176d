"""
Randomized law checking and graded dimension counts
===================================================

Every context exposes the same battery of property checks, driven by a
deterministic generator so failures replay.  Graded counts of the
enveloping basis match the commutative word count of the input.
"""

from rblie.algebras import load_algebra
from rblie.enveloping import EnvContext, pbw_table
from rblie.free_rb import FreeRBContext
from rblie.terms import Alphabet
from rblie.verify import check_enum_oracles, run_property

# The free context, both weights, against the operator identity.
al = Alphabet(("a", "b"))
for weight in (0, 1):
    rep = run_property("rb", FreeRBContext(al, weight=weight), seed=3, count=60)
    print("weight %d: %s" % (weight, rep.line()))

# An enveloping context against the full bracket laws.
env = EnvContext(load_algebra("demos/algebras/so3_post.alg"))
for prop in ("anticomm", "jacobi", "derived-post"):
    print(run_property(prop, env, seed=3, count=60).line())

# Counting oracles make sure the enumerators agree with closed formulas.
print(check_enum_oracles().line())

# Graded dimensions, keyed by (generator occurrences, operator count).
# The same table comes out of the abelianized input, which is the
# commutative-monomial count the construction predicts.
for key, n in sorted(pbw_table(env, 3, 2).items()):
    print("%s: %d" % (key, n))

# The command line exposes the same operations, for instance:
#   rblie basis --kind env-post --algebra demos/algebras/so3_post.alg --max-deg 3 --max-rdeg 2
#   rblie verify --kind env-post --algebra demos/algebras/so3_post.alg --property jacobi
#   rblie verify --kind env-post --algebra demos/algebras/so3_post.alg --property pbw

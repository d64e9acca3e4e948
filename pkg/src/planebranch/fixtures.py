"""Ready-made branches and semigroups used by the demos and the tests."""

from .branch import Semigroup
from .parsing import parse_poly

#: genus 2, semigroup <4, 6, 13>: the smallest tower over an ordinary cusp
#: with a nontrivial second level
BRANCH_4_6_13 = parse_poly("(y^2 - x^3)^2 - x^5*y")

#: genus 2, semigroup <6, 8, 27>
BRANCH_6_8_27 = parse_poly("(y^3 - 6*x^3*y - x^4)^2 - 9*x^9")

#: a different equation with the same semigroup <6, 8, 27>, hence the
#: same family of approximate jacobian diagrams
BRANCH_6_8_27_VARIANT = parse_poly("(y^3 - x^4)^2 + x^9 - x^7*y^2")

#: pairs of distinct semigroups whose diagram families overlap in their
#: top member; the full family still separates them
COLLIDING_PAIRS = (
    (Semigroup((4, 14, 31)), Semigroup((4, 6, 35))),
    (Semigroup((4, 6, 37)), Semigroup((6, 10, 31))),
)

"""
The Zelevinsky involution by hand
=================================

Z(m) = L(m^t): the Moeglin-Waldspurger algorithm peels one segment at a
time off the multisegment m.  Here we watch it work.
"""

from twistjac.parse import parse_multisegment
from twistjac.zelevinsky import mw_dual, mw_dual_explain, mw_dual_Lchialpha

# tau's Langlands data: two juxtaposed length-2 segments
m = parse_multisegment("{[1/2..3/2], [-3/2..-1/2]}")
dual, trace = mw_dual_explain(m)
for line in trace.lines():
    print(line)
print("m^t =", dual)

# applying it twice gives m back
assert mw_dual(dual) == m

# a single segment trades places with its singletons
print(mw_dual(parse_multisegment("{[-3/2..3/2]}")))

# the ladder family L_(chi, alpha) on G_2n has n + alpha - 1 segments
for n, alpha in [(2, 1), (2, 2), (3, 2)]:
    print(n, alpha, mw_dual_Lchialpha(n, alpha))

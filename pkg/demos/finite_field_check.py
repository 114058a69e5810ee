"""
A finite-field sanity check
===========================

Over F_2 the filtration by double cosets can be checked by brute force:
the dimension of the twisted Jacquet module of an induced representation
of GL_4(F_q) equals a sum of block dimensions weighted by coset counts.
"""

from twistjac.doublecosets import representatives
from twistjac.ff_oracle import parse_block, tjm_dim_bruteforce, tjm_dim_formula

for r, a, b in [(2, "1", "1"), (2, "st", "1"), (1, "1", "1"), (3, "1", "1")]:
    rho1, rho2 = parse_block(a, r), parse_block(b, 4 - r)
    terms = []
    brute = tjm_dim_bruteforce(2, r, rho1, rho2, 2)
    formula = tjm_dim_formula(2, r, rho1, rho2, 2, terms)
    print(f"r={r} {a} x {b}: brute {brute}, formula {formula}",
          [(t.k, t.value) for t in terms])

# the double coset representatives that index the filtration
for r in (1, 2, 3):
    print(r, [str(i) for i in representatives(2, r)])

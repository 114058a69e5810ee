"""
Twisted Jacquet modules on G_4
==============================

Every irreducible subquotient of two principal series of GL_4, with a
verdict on (pi)_{N,psi} and the result it rests on.
"""

from twistjac.jacquet import analyze_preset, table_mismatches, tjm_product
from twistjac.parse import parse_expr

for name in ("xi", "sigma"):
    rows = analyze_preset(name)
    print(f"-- {name}")
    for r in rows:
        print(f"{r.name:30s} {r.status:8s} {r.module if r.module is not None else ''}")
    print("mismatches:", table_mismatches(name, rows))

# one filtration in full: both pieces of St_2 nu x St_2 nu^-1 survive
v = tjm_product(parse_expr("St(2,nu) x St(2,nu^-1)"), 2, 2)
print("\n".join(v.lines()))

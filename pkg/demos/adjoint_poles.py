"""
Poles of the adjoint L-function
===============================

The pole criterion predicts (pi)_{N,psi} = 0 exactly when L(s, pi x pi^v)
has a pole of order at least n + 1 - s at each s = 1..n.  The outputs are
predictions, set here next to the proved verdicts.
"""

from twistjac.jacquet import analyze_preset
from twistjac.lfun import adjoint, conjecture_check, langlands_param, pole_profile
from twistjac.reps import LRep, one

# the trivial character of G_k: order k - s at s = 1..k-1
for k in range(1, 6):
    print(k, pole_profile(adjoint(langlands_param(one(k))), k))

for row in analyze_preset("xi"):
    res = conjecture_check(LRep(row.data), 2)
    pred = "zero" if res.predicted_tjm_zero else "nonzero"
    print(f"{row.name:14s} proved {row.status:8s} predicted {pred:8s} {res.profile}")

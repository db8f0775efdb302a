"""
Invariants of closed braids
===========================

Components, linking numbers, Euler characteristic of the fibre surface
and the Alexander polynomial, bundled together for comparisons.
"""

from braidforge import BraidWord, full_twist
from braidforge.invariants import (
    alexander_polynomial,
    closure_components,
    invariant_bundle,
    linking_matrix,
)

hopf = BraidWord(2, (1, 1))
trefoil = BraidWord(2, (1, 1, 1))
print("Hopf", alexander_polynomial(hopf))
print("trefoil", alexander_polynomial(trefoil))
print("figure eight", alexander_polynomial(BraidWord(3, (1, -2, 1, -2))))

w = BraidWord(3, (1, 1, 1, 1) + full_twist(3).letters)
print("components", closure_components(w).cycles)
lk = linking_matrix(w)
print(lk.matrix)
print("multiset", lk.multiset())

b = invariant_bundle(w)
print(b.to_dict())

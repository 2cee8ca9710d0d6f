"""
Symmetric units in GF(2)Q8 and GF(2)D8
======================================

Q8 and D8 both have order 8, but only in GF(2)Q8 do the symmetric
units form a group.
"""

from symunits.algebra import from_terms, render
from symunits.goodness import build_S, closure_oracle, is_good
from symunits.groups import dihedral, generalized_quaternion, involutions, center

Q8 = generalized_quaternion(8)
D8 = dihedral(8)

# the set S: involutions (the identity included) and the sums g + g^-1
for G in (Q8, D8):
    S = build_S(G)
    print(f"{G.label}: |S| = {len(S)}:", ", ".join(e.describe() for e in S))

# Q8 has a single involution, and it is central
print("involutions of Q8:", [Q8.element_names[t] for t in involutions(Q8)])
print("centre of D8:", [D8.element_names[z] for z in center(D8).elements])

# the criterion only looks at pairs of S
for G in (Q8, D8):
    r = is_good(G)
    print(G.label, "good" if r.good else "not good", end="")
    if r.witness:
        a, b = r.witness
        print(f": {a.describe()} and {b.describe()} do not commute", end="")
    print()

# brute force over all 2^8 vectors gives the same answer
for G in (Q8, D8):
    res = closure_oracle(G)
    print(f"{G.label}: {res.unit_count} symmetric units, closed under products: {res.closed} ({res.mode})")

# an explicit bad product in GF(2)D8: two reflections
s, r = D8.generator("s"), D8.generator("r")
a, b = from_terms(D8, [s]), from_terms(D8, [D8.mul(r, s)])
print(f"({render(a)})({render(b)}) = {render(a * b)}, reversed: {render(b * a)}")

"""
A census of the groups of order 16
==================================

The fourteen groups of order 16, split by the goodness criterion, with
the brute-force oracle as referee (sampled, since there are 2^16 vectors).
"""

from symunits import corpus
from symunits.goodness import closure_oracle, involutions_central, is_good, theorem_rhs
from symunits.groups import exponent, frattini_2group, quotient_coordinates

groups = [G for G in corpus.small_2groups() if G.order == 16]
print(f"{len(groups)} groups of order 16")
print(f"{'group':12} {'abelian':8} {'exp':4} {'rank':5} {'inv. central':13} {'good':5} {'rhs':5} {'oracle':7}")
for G in groups:
    rank = quotient_coordinates(G, frattini_2group(G))[1]
    good = is_good(G).good
    rhs = theorem_rhs(G).good
    oracle = closure_oracle(G, samples=50_000).closed
    print(f"{G.label:12} {str(G.is_abelian):8} {exponent(G):<4} {rank:<5} "
          f"{str(involutions_central(G)):13} {str(good):5} {str(rhs):5} {str(oracle):7}")

# nonabelian, exponent 4, two generators, all involutions central
picks = [
    G.label for G in corpus.small_2groups()
    if 16 % G.order == 0 and not G.is_abelian and exponent(G) == 4
    and quotient_coordinates(G, frattini_2group(G))[1] == 2 and involutions_central(G)
]
print("2-generator, exponent 4, involutions central, order dividing 16:", picks)

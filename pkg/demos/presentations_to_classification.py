"""
From presentations to a classification report
=============================================

Enumerate cosets for the two exponent-4 groups given by presentations,
then check goodness and locate them on the list of conditions.
"""

from pathlib import Path

from symunits.goodness import classify
from symunits.groups import exponent, frattini_2group, involutions, center
from symunits.presentation import coset_enumerate, group_from_presentation, load_presentation

here = Path(__file__).resolve().parent.parent / "presentations"

for name in ("condition_iii_factor", "h32", "h245"):
    P = load_presentation(here / f"{name}.pres")
    print(P.format())
    table = coset_enumerate(P)
    G = group_from_presentation(P, label=name)
    print(f"  -> {len(table.rows)} cosets; exponent {exponent(G)}, "
          f"Frattini order {frattini_2group(G).order}, "
          f"{len(involutions(G))} involutions, centre of order {center(G).order}")

    rep = classify(G)
    held = [k for k, v in rep.conditions.items() if v["holds"]]
    if rep.good:
        print(f"  good: {rep.is_good}; E x H with |E| = {len(rep.decomposition['E'])}, H meets {held}")
    else:
        print(f"  good: {rep.is_good}")
    print()

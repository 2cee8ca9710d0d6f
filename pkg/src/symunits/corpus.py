"""Reference groups and the corpus of all groups of order dividing 16."""

from __future__ import annotations

from functools import lru_cache

from .groups import (
    Group,
    center,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian_2,
    generalized_quaternion,
    heisenberg_3,
    involutions,
    is_isomorphic,
    modular,
    semidihedral,
    semidirect_c2m_c4,
)
from .presentation import group_from_presentation, parse_presentation

CONDITION_III_FACTOR = """\
gens: x y
x^4 = y^4 = 1
x^2 = [y,x]
"""

H32 = """\
gens: x y u
x^4 = y^4 = 1
x^2 = [y,x]
y^2 = u^2 = [u,x]
x^2 y^2 = [u,y]
"""

H245 = """\
gens: x y u v
x^4 = y^4 = [v,u] = 1
x^2 = v^2 = [y,x] = [v,y]
y^2 = u^2 = [u,x]
x^2 y^2 = [u,y] = [v,x]
"""

# SmallGroup(16,3): (C4 x C2) x| C2 with c a c = a b
C4C2_C2 = """\
gens: a b c
a^4 = b^2 = c^2 = 1
[a,b] = [b,c] = 1
c a c = a b
"""


def _unique_involution(G: Group) -> int:
    (z,) = involutions(G)
    return z


def _central_involution(G: Group) -> int:
    return next(z for z in center(G).elements if G.element_orders[z] == 2)


@lru_cache(maxsize=None)
def q8() -> Group:
    return generalized_quaternion(8)


@lru_cache(maxsize=None)
def d8() -> Group:
    return dihedral(8)


@lru_cache(maxsize=None)
def q8_x_c4() -> Group:
    return direct_product(q8(), cyclic(4), label="Q8xC4")


@lru_cache(maxsize=None)
def q8_x_q8() -> Group:
    return direct_product(q8(), q8(), label="Q8xQ8")


@lru_cache(maxsize=None)
def condition_iii_factor() -> Group:
    return group_from_presentation(parse_presentation(CONDITION_III_FACTOR), label="<x,y|x^4=y^4=1,x^2=[y,x]>")


@lru_cache(maxsize=None)
def condition_iii_group() -> Group:
    """Central product of the (x, y) factor with Q8, amalgamating x^2 y^2 with -1."""
    F = condition_iii_factor()
    x, y = F.generator("x"), F.generator("y")
    z = F.mul(F.power(x, 2), F.power(y, 2))
    Q = q8()
    return central_product(F, z, Q, _unique_involution(Q), label="FoQ8")


@lru_cache(maxsize=None)
def h32() -> Group:
    return group_from_presentation(parse_presentation(H32), label="H32")


@lru_cache(maxsize=None)
def h245() -> Group:
    return group_from_presentation(parse_presentation(H245), label="H245")


def q8_o_c4() -> Group:
    return central_product(q8(), _unique_involution(q8()), cyclic(4), 2, label="Q8oC4")


def d8_o_c4() -> Group:
    D = d8()
    return central_product(D, _central_involution(D), cyclic(4), 2, label="D8oC4")


def extraspecial_32_plus() -> Group:
    D = d8()
    z = _central_involution(D)
    return central_product(D, z, D, z, label="D8oD8")


def extraspecial_32_minus() -> Group:
    D, Q = d8(), q8()
    return central_product(D, _central_involution(D), Q, _unique_involution(Q), label="D8oQ8")


def positive_families() -> list[Group]:
    return [q8_x_c4(), q8_x_q8(), condition_iii_group(), h32(), h245()]


def negative_families() -> list[Group]:
    return [
        d8(),
        direct_product(cyclic(2), d8(), label="C2xD8"),
        extraspecial_32_plus(),
        extraspecial_32_minus(),
        q8_o_c4(),
        d8_o_c4(),
    ]


def _candidates() -> list[Group]:
    C = cyclic
    E = elementary_abelian_2
    return [
        C(1),
        C(2),
        C(4),
        E(2),
        C(8),
        direct_product(C(4), C(2), label="C4xC2"),
        E(3),
        d8(),
        q8(),
        C(16),
        direct_product(C(4), C(4), label="C4xC4"),
        direct_product(C(8), C(2), label="C8xC2"),
        direct_product(C(4), E(2), label="C4xC2^2"),
        E(4),
        dihedral(16),
        semidihedral(16),
        generalized_quaternion(16),
        modular(16),
        semidirect_c2m_c4(2),
        group_from_presentation(parse_presentation(C4C2_C2), label="(C4xC2):C2"),
        direct_product(d8(), C(2), label="D8xC2"),
        direct_product(q8(), C(2), label="Q8xC2"),
        q8_o_c4(),
        # alternative constructions; deduplication must absorb them
        dihedral(4),
        direct_product(E(2), C(4), label="C2^2xC4"),
        direct_product(C(2), d8(), label="C2xD8"),
        d8_o_c4(),
        condition_iii_factor(),
        group_from_presentation(parse_presentation("gens: r s\nr^4 = s^2 = (r s)^2 = 1"), label="<r,s>"),
    ]


def deduplicate(groups: list[Group]) -> tuple[list[Group], list[int]]:
    """Keep the first member of each isomorphism class.

    Returns the members and, for each input, the index of its member.
    """
    members: list[Group] = []
    assignment = []
    for G in groups:
        for k, M in enumerate(members):
            if is_isomorphic(G, M) is not None:
                assignment.append(k)
                break
        else:
            assignment.append(len(members))
            members.append(G)
    return members, assignment


@lru_cache(maxsize=None)
def _corpus() -> tuple[Group, ...]:
    members, _ = deduplicate(_candidates())
    return tuple(sorted(members, key=lambda G: G.order))


def small_2groups(max_order: int = 16) -> list[Group]:
    """Every group of order 1, 2, 4, 8, 16 (up to ``max_order``), one per class."""
    return [G for G in _corpus() if G.order <= max_order]


def corpus_candidates() -> list[Group]:
    return _candidates()


def odd_p_groups() -> list[Group]:
    """3-groups used for the odd-prime checks."""
    return [
        cyclic(3),
        cyclic(9),
        direct_product(cyclic(3), cyclic(3), label="C3xC3"),
        heisenberg_3(),
        direct_product(heisenberg_3(), cyclic(3), label="He3xC3"),
    ]

import itertools
import json

import numpy as np
import pytest

from symunits import corpus
from symunits.algebra import AlgebraElement, from_terms
from symunits.goodness import (
    Inapplicable,
    build_S,
    check_condition_i,
    check_conditions_ii_iii_iv,
    classify,
    closure_oracle,
    involutions_central,
    is_good,
    symmetric_unit_census,
    symmetric_units_gf2,
    theorem_rhs,
    verify_lemma1,
    verify_lemma2,
    xy_normal_form,
)
from symunits.groups import (
    OrderCapExceeded,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian_2,
    generalized_quaternion,
    heisenberg_3,
    semidirect_c2m_c4,
)
from symunits.rings import GF


def brute_good(G, ring):
    """Commutation of every pair of symmetric basis elements, from the definition."""
    S = []
    for g in range(G.order):
        if G.mul(g, g) == 0:
            S.append([g])
        elif g < G.inv(g):
            S.append([g, G.inv(g)])
    for a, b in itertools.combinations(S, 2):
        x, y = from_terms(G, a, ring), from_terms(G, b, ring)
        if not x * y == y * x:
            return False
    return True


def test_build_s_small_cases():
    assert [e.element for e in build_S(cyclic(2))] == [0, 1]
    C4 = cyclic(4)
    S = build_S(C4)
    assert [(e.kind, e.element) for e in S] == [("involution", 0), ("pair", 1), ("involution", 2)]
    assert S.entries[1].value.coeffs.tolist() == [0, 1, 0, 1]
    assert len(build_S(generalized_quaternion(8))) == 5
    assert len(build_S(dihedral(8))) == 7
    assert S.entries[1].describe() == "x + x^-1"


def test_s_spans_symmetric_elements():
    # the entries of S are a basis of the symmetric subspace
    for G in [dihedral(8), generalized_quaternion(8), cyclic(8)]:
        _, nsym = symmetric_units_gf2(G)
        assert nsym == 2 ** len(build_S(G))


@pytest.mark.parametrize("G", corpus.small_2groups(), ids=lambda G: G.label)
def test_is_good_matches_definition(G):
    assert is_good(G).good == brute_good(G, GF(2))


def test_is_good_known_verdicts():
    assert is_good(generalized_quaternion(8)).good
    r = is_good(dihedral(8))
    assert not r.good
    a, b = r.witness
    assert not (a.value * b.value == b.value * a.value)
    assert is_good(elementary_abelian_2(3)).good
    assert not is_good(heisenberg_3(), GF(3)).good
    assert is_good(corpus.q8_x_q8()).good


def test_witness_is_first_failing_pair():
    G = corpus.extraspecial_32_plus()
    r = is_good(G)
    entries = [e for e in build_S(G) if e.element != 0]
    pos = {e.element: k for k, e in enumerate(entries)}
    i, j = pos[r.witness[0].element], pos[r.witness[1].element]
    for a, b in itertools.combinations(range(len(entries)), 2):
        if (a, b) >= (i, j):
            break
        x, y = entries[a].value, entries[b].value
        assert x * y == y * x


@pytest.mark.parametrize("G", corpus.negative_families(), ids=lambda G: G.label)
def test_parallel_verdict_and_witness_match_serial(G):
    s, p = is_good(G), is_good(G, jobs=4)
    assert s.good == p.good
    assert s.to_dict() == p.to_dict()


def test_report_dict_is_json():
    d = is_good(dihedral(8)).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["good"] is False and len(d["witness"]) == 2


@pytest.mark.parametrize(
    "G, closed",
    [(cyclic(4), True), (dihedral(8), False), (generalized_quaternion(8), True), (elementary_abelian_2(3), True)],
    ids=lambda x: getattr(x, "label", str(x)),
)
def test_closure_oracle_exact(G, closed):
    res = closure_oracle(G)
    assert res.mode == "exact" and res.closed == closed
    if not closed:
        a, b = (AlgebraElement(G, GF(2), w) for w in res.witness)
        ab = (a * b).coeffs
        assert not np.array_equal(ab, ab[G.inverses])


def test_closure_oracle_sampled_is_seeded():
    G = corpus.q8_o_c4()
    a, b = closure_oracle(G, samples=20000, seed=5), closure_oracle(G, samples=20000, seed=5)
    assert a.mode == "sampled" and not a.closed
    assert a.pairs_checked == b.pairs_checked
    assert closure_oracle(semidirect_c2m_c4(2), samples=20000).closed


def test_closure_oracle_cap():
    with pytest.raises(OrderCapExceeded):
        closure_oracle(corpus.h32())


def test_unit_census():
    c = symmetric_unit_census(cyclic(4))
    assert (c.symmetric_count, c.dimension, c.unit_count) == (8, 3, 4)
    c = symmetric_unit_census(generalized_quaternion(8))
    assert c.dimension == 5 and c.unit_count == 16 and c.closure.closed


def test_involutions_central():
    assert involutions_central(generalized_quaternion(8))
    assert not involutions_central(dihedral(8))
    assert involutions_central(corpus.h245())


def test_xy_normal_form():
    G = semidirect_c2m_c4(3)
    x, y = G.generator("x"), G.generator("y")
    fx, fy = xy_normal_form(G, x, y)
    assert G.conj(fx, fy) == G.inv(fx) and G.power(fy, 4) == 0
    Q = generalized_quaternion(16)
    g, h = Q.generator("x"), Q.generator("y")
    fx, fy = xy_normal_form(Q, g, h)
    assert G is not Q and Q.conj(fx, fy) == Q.inv(fx)
    with pytest.raises(ValueError, match="commute"):
        xy_normal_form(Q, 0, g)


def test_lemma1():
    r = verify_lemma1(corpus.q8_x_c4())
    assert r.passed and r.kinds["generalized_quaternion"] > 0
    r = verify_lemma1(semidirect_c2m_c4(3))
    assert r.passed and r.kinds["c2m_c4"] > 0
    r = verify_lemma1(dihedral(8))
    assert not r.passed and r.counterexample.order == 8


def test_lemma2():
    G = semidirect_c2m_c4(3)
    A, b = verify_lemma2(G)
    assert A.order == 16 and G.element_orders[b] == 4
    with pytest.raises(Inapplicable):
        verify_lemma2(generalized_quaternion(8))  # exponent 4
    with pytest.raises(Inapplicable):
        verify_lemma2(cyclic(8))
    with pytest.raises(Inapplicable):
        verify_lemma2(dihedral(16))


def test_condition_i():
    assert check_condition_i(generalized_quaternion(16)) is not None
    assert check_condition_i(semidirect_c2m_c4(2)) is not None
    assert check_condition_i(dihedral(8)) is None
    assert check_condition_i(corpus.h32()) is None


def test_conditions_ii_iii_iv():
    assert check_conditions_ii_iii_iv(corpus.q8_x_c4())["ii"] is not None
    r = check_conditions_ii_iii_iv(corpus.h245())
    assert r["iv"] is not None and r["ii"] is None
    assert all(v is None for v in check_conditions_ii_iii_iv(corpus.extraspecial_32_plus()).values())


def test_theorem_rhs_splits_off_elementary_factor():
    rep = theorem_rhs(direct_product(elementary_abelian_2(1), generalized_quaternion(8)))
    assert rep.good and len(rep.decomposition["E"]) == 2 and len(rep.decomposition["H"]) == 8
    assert rep.conditions["i"]["holds"]
    G = direct_product(elementary_abelian_2(1), corpus.q8_x_c4())
    rep = theorem_rhs(G)
    assert rep.good and len(rep.decomposition["E"]) == 2 and len(rep.decomposition["H"]) == 32
    assert rep.conditions["ii"]["holds"] and not rep.conditions["i"]["holds"]


def test_theorem_rhs_negative_and_vacuous():
    assert not theorem_rhs(dihedral(8)).good
    rep = theorem_rhs(elementary_abelian_2(3))
    assert rep.good and "abelian" in rep.note
    assert not theorem_rhs(heisenberg_3()).good


@pytest.mark.parametrize("G", corpus.positive_families(), ids=lambda G: G.label)
def test_positive_families(G):
    rep = classify(G)
    assert rep.good and rep.is_good and rep.lemma1["passed"]
    assert json.loads(rep.to_json())["label"] == G.label


def test_classify_over_gf3():
    rep = classify(heisenberg_3())
    assert rep.ring == "GF(3)" and rep.is_good is False and rep.good is False

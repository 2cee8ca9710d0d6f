import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from symunits import corpus
from symunits.algebra import (
    AlgebraElement,
    AlgebraError,
    NotAUnit,
    augmentation,
    commute,
    embed,
    from_terms,
    gf2_batch_mul,
    inverse,
    is_symmetric,
    is_unit,
    left_matrix,
    one,
    pack_gf2,
    render,
    star,
    unpack_gf2,
    zero,
)
from symunits.groups import cyclic, dihedral, generalized_quaternion, heisenberg_3, semidirect_c2m_c4
from symunits.rings import GF, ring_from_flag

CASES = [
    (dihedral(8), GF(2)),
    (generalized_quaternion(8), GF(2, 2)),
    (semidirect_c2m_c4(2), GF(2)),
    (heisenberg_3(), GF(3)),
    (dihedral(6), GF(5)),
]


def elements(G, ring):
    return st.lists(st.integers(0, ring.size - 1), min_size=G.order, max_size=G.order).map(
        lambda c: AlgebraElement(G, ring, np.array(c))
    )


def naive_mul(a, b):
    G, r = a.group, a.ring
    out = np.zeros(G.order, dtype=np.int64)
    for g, h in itertools.product(range(G.order), repeat=2):
        out[G.mul(g, h)] = r.add[out[G.mul(g, h)], r.mul[a.coeffs[g], b.coeffs[h]]]
    return out


@pytest.mark.parametrize("G, ring", CASES, ids=lambda x: getattr(x, "label", None) or getattr(x, "name", None))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_ring_axioms(G, ring, data):
    a, b, c = (data.draw(elements(G, ring)) for _ in range(3))
    assert np.array_equal((a * b).coeffs, naive_mul(a, b))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * one(G, ring) == a == one(G, ring) * a
    assert a - a == zero(G, ring)


@pytest.mark.parametrize("G, ring", CASES, ids=lambda x: getattr(x, "label", None) or getattr(x, "name", None))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_star_is_involutive_antiautomorphism(G, ring, data):
    a, b = data.draw(elements(G, ring)), data.draw(elements(G, ring))
    assert star(star(a)) == a
    assert star(a * b) == star(b) * star(a)
    assert star(a + b) == star(a) + star(b)
    assert is_symmetric(a + star(a))


@pytest.mark.parametrize("G, ring", CASES, ids=lambda x: getattr(x, "label", None) or getattr(x, "name", None))
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_augmentation_is_ring_homomorphism(G, ring, data):
    a, b = data.draw(elements(G, ring)), data.draw(elements(G, ring))
    assert augmentation(a * b) == ring.mul[augmentation(a), augmentation(b)]
    assert augmentation(a + b) == ring.add[augmentation(a), augmentation(b)]
    assert augmentation(star(a)) == augmentation(a)


def all_elements(G, ring):
    for c in itertools.product(range(ring.size), repeat=G.order):
        yield AlgebraElement(G, ring, np.array(c))


@pytest.mark.parametrize("G", [cyclic(2), cyclic(4), dihedral(8), generalized_quaternion(8)], ids=lambda G: G.label)
def test_unit_criterion_matches_exhaustive_search(G):
    ring = GF(2)
    elems = list(all_elements(G, ring))
    mats = {i: left_matrix(a) for i, a in enumerate(elems)}
    ident = np.zeros(G.order, dtype=np.int64)
    ident[0] = 1
    for i, a in enumerate(elems):
        # a is a unit iff some b has ab = 1, i.e. ident lies in the column space of a's matrix
        has_inverse = any(np.array_equal(mats[i] @ b.coeffs % 2, ident) for b in elems)
        assert is_unit(a) == has_inverse
        if has_inverse:
            assert a * inverse(a) == one(G, ring) == inverse(a) * a


def test_inverse_over_gf3():
    G = heisenberg_3()
    a = from_terms(G, [0, 0, 1, 2, 5], GF(3))
    assert augmentation(a) == 5 % 3
    b = inverse(a)
    assert a * b == one(G, GF(3))


def test_inverse_over_gf4():
    G = generalized_quaternion(8)
    F = GF(2, 2)
    w = 2  # the generator of GF(4) over GF(2)
    c = np.zeros(8, dtype=np.int64)
    c[0], c[1], c[3] = w, 1, 1
    a = AlgebraElement(G, F, c)
    assert augmentation(a) == w and is_unit(a)
    assert a * inverse(a) == one(G, F)


def test_non_unit():
    G = cyclic(4)
    a = from_terms(G, [0, 1])
    assert not is_unit(a)
    with pytest.raises(NotAUnit):
        inverse(a)


def test_unit_criterion_needs_p_group():
    with pytest.raises(AlgebraError):
        is_unit(one(cyclic(6)))
    with pytest.raises(AlgebraError):
        is_unit(one(cyclic(4), GF(3)))


def test_pair_sums_square_to_zero_in_characteristic_two():
    # (b + b^-1)^2 = b^2 + b^-2 over GF(2); it vanishes exactly when b^2 = b^-2
    Q = generalized_quaternion(8)
    for g in range(8):
        s = from_terms(Q, [g, Q.inv(g)])
        assert (s * s).is_zero()
    D = dihedral(8)
    r = D.generator("r")
    s = from_terms(D, [r, D.inv(r)])
    assert (s * s).is_zero()
    C8 = cyclic(8)
    s = from_terms(C8, [1, 7])
    assert not (s * s).is_zero()


def test_d8_symmetric_elements_do_not_commute():
    D = dihedral(8)
    s, r = D.generator("s"), D.generator("r")
    a, b = embed(D, s), embed(D, D.mul(r, s))
    assert not commute(a, b)
    assert commute(a, from_terms(D, [r, D.inv(r)]))  # s inverts r, so fixes r + r^-1
    assert commute(embed(D, D.power(r, 2)), a)


def test_mixing_groups_or_rings_rejected():
    with pytest.raises(AlgebraError):
        one(cyclic(4)) + one(dihedral(8))
    with pytest.raises(AlgebraError):
        one(cyclic(4)) + one(cyclic(4), GF(2, 2))
    with pytest.raises(AlgebraError):
        AlgebraElement(cyclic(4), GF(2), np.array([0, 1, 2, 0]))
    with pytest.raises(AlgebraError):
        AlgebraElement(cyclic(4), GF(2), np.array([0, 1]))


def test_integer_scaling():
    G = cyclic(3)
    a = one(G, GF(3))
    assert (a * 2).coeffs.tolist() == [2, 0, 0]
    assert (4 * a) == a


def test_render():
    D = dihedral(8)
    r, s = D.generator("r"), D.generator("s")
    assert render(zero(D)) == "0"
    assert render(from_terms(D, [0, r, D.mul(r, s)])) == "1 + r + r*s"
    G = cyclic(3)
    assert render(from_terms(G, [0, 0, 1], GF(3))) == "2 + x"
    F = GF(2, 2)
    a = AlgebraElement(cyclic(2), F, np.array([3, 2]))
    assert render(a) == "(1 + w) + w*x"


def test_ring_flags():
    assert ring_from_flag("2") is GF(2)
    assert ring_from_flag("4") is GF(2, 2) is ring_from_flag("2^2")
    assert ring_from_flag("3").size == 3
    with pytest.raises(ValueError):
        ring_from_flag("6")


def test_gf4_field_axioms():
    F = GF(2, 2)
    for a in range(1, 4):
        assert F.mul[a, F.inv[a]] == 1
    assert all(F.add[a, a] == 0 for a in range(4))
    w = 2
    assert F.add[F.mul[w, w], F.add[w, 1]] == 0


@pytest.mark.parametrize("G", [dihedral(8), corpus.q8_x_c4(), semidirect_c2m_c4(3)], ids=lambda G: G.label)
def test_batch_kernel_matches_single_products(G, rng):
    n = 37
    A = rng.integers(0, 2, (n, G.order), dtype=np.uint8)
    B = rng.integers(0, 2, (n, G.order), dtype=np.uint8)
    out = unpack_gf2(gf2_batch_mul(G, pack_gf2(A), pack_gf2(B)), n)
    for k in range(n):
        a = AlgebraElement(G, GF(2), A[k])
        b = AlgebraElement(G, GF(2), B[k])
        assert out[k].tolist() == (a * b).coeffs.tolist()


def test_inverse_examples():
    Q = generalized_quaternion(8)
    g = Q.generator("i")
    assert inverse(embed(Q, g)) == embed(Q, Q.inv(g))
    C4 = cyclic(4)
    a = from_terms(C4, [0, 1, 2])
    assert a * inverse(a) == one(C4)
    # -1 + g + g^-1 with g + g^-1 central (Q8) is a symmetric unit with symmetric inverse
    u = from_terms(Q, [0, g, Q.inv(g)])
    assert augmentation(u) == 1 and is_symmetric(u) and is_unit(u)
    assert is_symmetric(inverse(u))


def test_is_symmetric_examples():
    C4 = cyclic(4)
    assert is_symmetric(embed(C4, 2))
    assert is_symmetric(from_terms(C4, [1, 3]))
    assert not is_symmetric(embed(C4, 1))

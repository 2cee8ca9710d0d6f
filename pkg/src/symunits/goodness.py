"""When do the symmetric units of KG form a group?

A p-group G is *good* when every two elements of

    S = {t : t^2 = 1} U {g + g^-1 : g^2 != 1}

commute in KG.  This module builds S, decides goodness, cross-checks it
against a brute-force closure test of the symmetric units, verifies the
structural consequences of goodness, and decides whether G has the shape
``E x H`` with E elementary abelian and H from the classification list.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Literal

import numpy as np

from . import corpus
from .algebra import AlgebraElement, convolve, from_terms, gf2_batch_mul, pack_gf2
from .groups import (
    Group,
    GroupHom,
    OrderCapExceeded,
    Subgroup,
    center,
    exponent,
    frattini_2group,
    index2_subgroups,
    involutions,
    is_isomorphic,
    is_p_group,
    quotient_coordinates,
    recognize_c2m_c4,
    recognize_generalized_quaternion,
    subgroup_generated,
)
from .rings import GF, CoefficientRing

DEFAULT_SEED = 0xB0BD1
DEFAULT_SAMPLES = 10**6
EXACT_ORACLE_LIMIT = 8
SAMPLED_ORACLE_LIMIT = 16
CLASSIFY_CAP = 64


class Inapplicable(ValueError):
    """A check whose hypotheses do not hold for the given group."""


# ---------------------------------------------------------------------------
# the set S


@dataclass(frozen=True)
class SEntry:
    kind: Literal["involution", "pair"]
    element: int
    value: AlgebraElement = field(repr=False, compare=False)

    def describe(self) -> str:
        names = self.value.group.element_names
        g = self.element
        if self.kind == "involution":
            return names[g]
        return f"{names[g]} + {names[self.value.group.inv(g)]}"


@dataclass(frozen=True)
class SymmetricSet:
    group: Group
    ring: CoefficientRing
    entries: tuple[SEntry, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def build_S(G: Group, ring: CoefficientRing | None = None) -> SymmetricSet:
    """Entries in element-index order; the identity counts as an involution-kind entry."""
    ring = ring or GF(2)
    entries = []
    for g in range(G.order):
        ginv = G.inv(g)
        if G.squares[g] == 0:
            entries.append(SEntry("involution", g, from_terms(G, [g], ring)))
        elif g < ginv:
            entries.append(SEntry("pair", g, from_terms(G, [g, ginv], ring)))
    return SymmetricSet(G, ring, tuple(entries))


# ---------------------------------------------------------------------------
# goodness


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    ring: str
    witness: tuple[SEntry, SEntry] | None = None
    group_label: str = ""

    def __post_init__(self):
        assert (self.witness is None) == self.good

    def to_dict(self) -> dict:
        d = {"label": self.group_label, "good": self.good, "ring": self.ring, "witness": None}
        if self.witness:
            a, b = self.witness
            d["witness"] = [
                {"kind": a.kind, "element": a.element, "text": a.describe()},
                {"kind": b.kind, "element": b.element, "text": b.describe()},
            ]
        return d


def _first_failure(G, ring, values, pairs) -> int | None:
    for k, (i, j) in enumerate(pairs):
        a, b = values[i], values[j]
        if not np.array_equal(convolve(G, ring, a, b), convolve(G, ring, b, a)):
            return k
    return None


def is_good(G: Group, ring: CoefficientRing | None = None, jobs: int = 1) -> GoodnessReport:
    """Test every unordered pair of non-identity S entries for commutation.

    The witness is the lexicographically first failing pair in entry order,
    whatever ``jobs`` is.
    """
    S = build_S(G, ring)
    entries = [e for e in S.entries if e.element != 0]
    values = [e.value.coeffs for e in entries]
    pairs = list(combinations(range(len(entries)), 2))
    if jobs <= 1 or len(pairs) < 64:
        hit = _first_failure(G, S.ring, values, pairs)
    else:
        size = -(-len(pairs) // (jobs * 4))
        chunks = [(start, pairs[start : start + size]) for start in range(0, len(pairs), size)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            found = pool.map(lambda c: _first_failure(G, S.ring, values, c[1]), chunks)
            hits = [start + k for (start, _), k in zip(chunks, found) if k is not None]
        hit = min(hits) if hits else None
    if hit is None:
        return GoodnessReport(True, S.ring.name, None, G.label)
    i, j = pairs[hit]
    return GoodnessReport(False, S.ring.name, (entries[i], entries[j]), G.label)


# ---------------------------------------------------------------------------
# brute-force closure of the symmetric units


@dataclass(frozen=True)
class ClosureResult:
    closed: bool
    mode: Literal["exact", "sampled"]
    symmetric_count: int
    unit_count: int
    pairs_checked: int
    witness: tuple[np.ndarray, np.ndarray] | None = None


def _all_vectors(n: int) -> np.ndarray:
    codes = np.arange(1 << n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def symmetric_units_gf2(G: Group) -> tuple[np.ndarray, int]:
    """All symmetric units of GF(2)G by exhaustive enumeration of GF(2)^|G|.

    Returns the unit rows and the number of symmetric elements.
    """
    vecs = _all_vectors(G.order)
    sym = vecs[np.all(vecs == vecs[:, G.inverses], axis=1)]
    units = sym[sym.sum(axis=1) % 2 == 1]
    return units, len(sym)


def _non_symmetric_rows(G: Group, packed: np.ndarray) -> np.ndarray:
    bad = np.zeros(packed.shape[1], dtype=np.uint8)
    for x in range(G.order):
        bad |= packed[x] ^ packed[G.inverses[x]]
    return bad


def closure_oracle(
    G: Group, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, chunk: int = 1 << 16
) -> ClosureResult:
    """Do the symmetric units of GF(2)G multiply to symmetric elements?

    Exhaustive over all pairs for |G| <= 8; for |G| = 16 all symmetric units
    are enumerated and ``samples`` random pairs are checked.
    """
    if G.order > SAMPLED_ORACLE_LIMIT:
        raise OrderCapExceeded(f"closure oracle is limited to order {SAMPLED_ORACLE_LIMIT}")
    units, nsym = symmetric_units_gf2(G)
    nu = len(units)
    exact = G.order <= EXACT_ORACLE_LIMIT
    if exact:
        total = nu * nu
        rng = None
    else:
        total = samples
        rng = np.random.default_rng(seed)
    done = 0
    while done < total:
        m = min(chunk, total - done)
        if exact:
            k = np.arange(done, done + m)
            left, right = k // nu, k % nu
        else:
            left, right = rng.integers(0, nu, m), rng.integers(0, nu, m)
        prod_ = gf2_batch_mul(G, pack_gf2(units[left]), pack_gf2(units[right]))
        bad = np.unpackbits(_non_symmetric_rows(G, prod_), count=m)
        if bad.any():
            r = int(np.argmax(bad))
            mode = "exact" if exact else "sampled"
            witness = (units[left[r]].copy(), units[right[r]].copy())
            return ClosureResult(False, mode, nsym, nu, done + r + 1, witness)
        done += m
    return ClosureResult(True, "exact" if exact else "sampled", nsym, nu, total)


@dataclass(frozen=True)
class UnitCensus:
    symmetric_count: int
    unit_count: int
    dimension: int
    s_size: int
    closure: ClosureResult


def symmetric_unit_census(G: Group, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> UnitCensus:
    closure = closure_oracle(G, samples, seed)
    dim = closure.symmetric_count.bit_length() - 1
    s_size = len(build_S(G, GF(2)))
    if dim != s_size:
        raise AssertionError(f"symmetric subspace has dimension {dim}, but |S| = {s_size}")
    return UnitCensus(closure.symmetric_count, closure.unit_count, dim, s_size, closure)


# ---------------------------------------------------------------------------
# structural consequences of goodness


def involutions_central(G: Group) -> bool:
    Z = center(G)
    return all(t in Z for t in involutions(G))


def _verify_xy(G, x, y, target) -> bool:
    return (
        G.conj(x, y) == G.inv(x)
        and G.element_orders[y] == 4
        and subgroup_generated(G, [x, y]).element_set == target
    )


def xy_normal_form(G: Group, g: int, h: int) -> tuple[int, int] | None:
    """Generators (x, y) of <g, h> with x^y = x^-1 and y of order 4.

    Follows the case analysis on which term of (g+g^-1)(h+h^-1) equals gh.
    Returns None when no case applies or the result fails verification, which
    can only happen if G is not good.
    """
    if G.mul(g, h) == G.mul(h, g):
        raise ValueError("g and h commute")
    gi, hi = G.inv(g), G.inv(h)
    gh = G.mul(g, h)
    if gh == G.mul(gi, hi):
        x, y = gh, h
    elif gh == G.mul(h, gi):
        x, y = g, h
    elif gh == G.mul(hi, g):
        x, y = h, g
    else:
        return None
    target = subgroup_generated(G, [g, h]).element_set
    if G.element_orders[y] != 4:
        cyc_y = subgroup_generated(G, [y]).element_set
        if G.mul(x, x) in cyc_y:
            # x<y> = x^-1<y>: <y> has index 2 and <x, y> is generalized
            # quaternion, where x has order 4 and inverts y
            x, y = y, x
    return (x, y) if _verify_xy(G, x, y, target) else None


@dataclass(frozen=True)
class Lemma1Result:
    passed: bool
    subgroups_checked: int
    counterexample: Subgroup | None = None
    kinds: dict = field(default_factory=dict)


def two_generator_nonabelian_subgroups(G: Group) -> list[Subgroup]:
    seen: dict[frozenset, Subgroup] = {}
    t = G.table
    for g in range(G.order):
        for h in range(g + 1, G.order):
            if t[g, h] == t[h, g]:
                continue
            K = subgroup_generated(G, [g, h])
            seen.setdefault(K.element_set, K)
    return sorted(seen.values(), key=lambda K: (K.order, K.elements))


def verify_lemma1(G: Group) -> Lemma1Result:
    """Every nonabelian 2-generator subgroup is generalized quaternion or C_{2^m} x| C_4."""
    kinds = {"generalized_quaternion": 0, "c2m_c4": 0}
    subs = two_generator_nonabelian_subgroups(G)
    for K in subs:
        H = K.as_group()
        if recognize_generalized_quaternion(H):
            kinds["generalized_quaternion"] += 1
        elif recognize_c2m_c4(H) is not None:
            kinds["c2m_c4"] += 1
        else:
            return Lemma1Result(False, len(subs), K, kinds)
    return Lemma1Result(True, len(subs), None, kinds)


def _inverts_all(G: Group, b: int, A: Subgroup) -> bool:
    return all(G.conj(a, b) == G.inv(a) for a in A.elements)


def verify_lemma2(G: Group, ring: CoefficientRing | None = None) -> tuple[Subgroup, int]:
    """Witness (A, b): A = <a : a^4 != 1> abelian of index 2, b of order 4 inverting A."""
    if G.is_abelian:
        raise Inapplicable("group is abelian")
    if exponent(G) == 4:
        raise Inapplicable("group has exponent 4")
    if not is_good(G, ring).good:
        raise Inapplicable("group is not good")
    big = [a for a in range(G.order) if G.power(a, 4) != 0]
    A = subgroup_generated(G, big)
    if not A.is_abelian:
        raise AssertionError("<a : a^4 != 1> is not abelian in a good group")
    if 2 * A.order != G.order:
        raise AssertionError("<a : a^4 != 1> does not have index 2")
    for b in range(G.order):
        if b not in A and G.element_orders[b] == 4 and _inverts_all(G, b, A):
            return A, b
    raise AssertionError("no element of order 4 inverts A")


def check_condition_i(H: Group) -> tuple[Subgroup, int] | None:
    """Abelian A of index 2 and b of order 4 with a^b = a^-1 for all a in A."""
    for A in index2_subgroups(H):
        if not A.is_abelian:
            continue
        outside = [b for b in range(H.order) if b not in A]
        for b in outside:
            if H.element_orders[b] == 4 and _inverts_all(H, b, A):
                # then every element outside A has order 4
                assert all(H.element_orders[c] == 4 for c in outside)
                return A, b
    return None


def _references() -> dict[str, list[Group]]:
    return {
        "ii": [corpus.q8_x_c4(), corpus.q8_x_q8()],
        "iii": [corpus.condition_iii_group()],
        "iv": [corpus.h32(), corpus.h245()],
    }


def check_conditions_ii_iii_iv(H: Group, cap: int = CLASSIFY_CAP) -> dict[str, GroupHom | None]:
    if H.order > cap:
        raise OrderCapExceeded(f"classification is limited to order {cap}")
    out: dict[str, GroupHom | None] = {}
    for key, refs in _references().items():
        out[key] = None
        for R in refs:
            if R.order == H.order:
                hom = is_isomorphic(H, R)
                if hom is not None:
                    out[key] = hom
                    break
    return out


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassificationReport:
    label: str
    order: int
    good: bool
    conditions: dict = field(default_factory=dict)
    decomposition: dict | None = None
    lemma1: dict | None = None
    lemma2: dict | None = None
    is_good: bool | None = None
    ring: str = "GF(2)"
    mode: str = "exact"
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "good": self.good,
            "conditions": self.conditions,
            "lemma1": self.lemma1,
            "lemma2": self.lemma2,
            "decomposition": self.decomposition,
            "is_good": self.is_good,
            "ring": self.ring,
            "mode": self.mode,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _condition_record(H: Group) -> tuple[dict, bool]:
    rec = {}
    wit = check_condition_i(H)
    rec["i"] = {"holds": wit is not None}
    if wit:
        A, b = wit
        rec["i"].update(A=list(A.elements), b=b)
    others = check_conditions_ii_iii_iv(H)
    for key, hom in others.items():
        rec[key] = {"holds": hom is not None}
        if hom is not None:
            rec[key].update(target=hom.target.label, images=hom.images.tolist())
    return rec, any(r["holds"] for r in rec.values())


def _subspaces(G: Group, elems: list[int]) -> list[frozenset]:
    """Subgroups of the elementary abelian group on ``elems`` (which contains 0)."""
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for V in frontier:
            for z in elems:
                if z in V:
                    continue
                W = frozenset(V | {G.mul(v, z) for v in V})
                if W not in found:
                    found.add(W)
                    nxt.append(W)
        frontier = nxt
    return sorted(found, key=lambda V: (len(V), sorted(V)))


def _reduce(v: int, basis: list[int]) -> int:
    for b in basis:
        v = min(v, v ^ b)
    return v


def _complements(U: list[int], d: int):
    """All complements of span(U) in GF(2)^d, as lists of basis vectors."""
    basis: list[int] = []
    for u in U:
        r = _reduce(u, basis)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    free = []
    full = list(basis)
    for i in range(d):
        r = _reduce(1 << i, full)
        if r:
            full.append(r)
            full.sort(reverse=True)
            free.append(1 << i)
    span_u = [0]
    for b in basis:
        span_u += [s ^ b for s in span_u]
    for shifts in product(span_u, repeat=len(free)):
        yield [c ^ s for c, s in zip(free, shifts)]


def theorem_rhs(G: Group, cap: int = CLASSIFY_CAP) -> ClassificationReport:
    """Decide whether G = E x H with E elementary abelian and H meeting (i)-(iv).

    Every such decomposition has E central with E n Phi(G) = 1 and H the
    preimage of a complement of E Phi(G)/Phi(G) in G/Phi(G); all of them are
    enumerated, E largest first so that H is as small as possible.
    """
    if G.order > cap:
        raise OrderCapExceeded(f"classification is limited to order {cap}")
    report = ClassificationReport(G.label, G.order, False)
    if G.is_abelian:
        report.good = True
        report.note = "abelian: criterion vacuous"
        report.decomposition = {"E": list(range(G.order)) if exponent(G) <= 2 else None, "H": None}
        return report
    if not is_p_group(G, 2):
        report.note = "not a 2-group"
        return report
    phi = frattini_2group(G)
    coords, d = quotient_coordinates(G, phi)
    omega = [z for z in center(G).elements if G.squares[z] == 0]
    for E in reversed(_subspaces(G, omega)):
        if len(E & phi.element_set) != 1:
            continue
        U = [int(coords[e]) for e in sorted(E)]
        for W in _complements(U, d):
            span_w = {0}
            for w in W:
                span_w |= {s ^ w for s in span_w}
            K = Subgroup(G, tuple(g for g in range(G.order) if int(coords[g]) in span_w))
            assert K.order * len(E) == G.order
            H = K.as_group(label=f"H<{G.label}")
            rec, ok = _condition_record(H)
            if ok:
                report.good = True
                report.conditions = rec
                report.decomposition = {"E": sorted(E), "H": list(K.elements)}
                return report
    report.conditions, _ = _condition_record(G)
    report.note = "no decomposition E x H with H satisfying (i)-(iv)"
    return report


def classify(G: Group, ring: CoefficientRing | None = None) -> ClassificationReport:
    """Theorem right-hand side plus goodness verdict and both lemma checks."""
    if ring is None:
        p = next((q for q in range(2, G.order + 1) if G.order % q == 0), 2)
        ring = GF(p)
    report = theorem_rhs(G)
    verdict = is_good(G, ring)
    report.is_good = verdict.good
    report.ring = ring.name
    report.note = (report.note + "; " if report.note else "") + (
        "'only if' direction rests on an external structural lemma; verified here on examples only"
    )
    if not G.is_abelian:
        l1 = verify_lemma1(G)
        report.lemma1 = {
            "passed": l1.passed,
            "subgroups_checked": l1.subgroups_checked,
            "counterexample": list(l1.counterexample.elements) if l1.counterexample else None,
        }
    try:
        A, b = verify_lemma2(G, ring)
        report.lemma2 = {"applicable": True, "A": list(A.elements), "b": b}
    except Inapplicable as exc:
        report.lemma2 = {"applicable": False, "reason": str(exc)}
    return report

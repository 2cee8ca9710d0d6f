"""Group algebra KG over a small finite field, with dense coefficient vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .groups import Group, is_p_group
from .rings import GF, CoefficientRing


class AlgebraError(ValueError):
    pass


class NotAUnit(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Element of KG: ``coeffs[g]`` is the coefficient of group element g."""

    group: Group
    ring: CoefficientRing
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64)
        if c.shape != (self.group.order,):
            raise AlgebraError("coefficient vector length must equal the group order")
        if c.size and (c.min() < 0 or c.max() >= self.ring.size):
            raise AlgebraError("coefficients out of range for the ring")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, negate(other))

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return scale(self, self.ring.from_int(int(other)))

    def __rmul__(self, other):
        return scale(self, self.ring.from_int(int(other)))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        _check_compatible(self, other)
        return bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    @property
    def support(self) -> np.ndarray:
        return np.nonzero(self.coeffs)[0]

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __repr__(self):
        return f"<{render(self)} in {self.ring.name}[{self.group.label}]>"


def _check_compatible(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.group is not b.group and not np.array_equal(a.group.table, b.group.table):
        raise AlgebraError("operands live in different groups")
    if a.ring is not b.ring:
        raise AlgebraError("operands use different coefficient rings")


def zero(G: Group, ring: CoefficientRing | None = None) -> AlgebraElement:
    ring = ring or GF(2)
    return AlgebraElement(G, ring, np.zeros(G.order, dtype=np.int64))


def one(G: Group, ring: CoefficientRing | None = None) -> AlgebraElement:
    return embed(G, 0, ring)


def embed(G: Group, g: int, ring: CoefficientRing | None = None) -> AlgebraElement:
    ring = ring or GF(2)
    c = np.zeros(G.order, dtype=np.int64)
    c[g] = 1
    return AlgebraElement(G, ring, c)


def from_terms(G: Group, terms: Iterable[int], ring: CoefficientRing | None = None) -> AlgebraElement:
    """Sum of group elements, with multiplicity (``[g, g]`` gives ``2g``)."""
    ring = ring or GF(2)
    c = np.zeros(G.order, dtype=np.int64)
    for g in terms:
        c[g] = ring.add[c[g], 1]
    return AlgebraElement(G, ring, c)


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_compatible(a, b)
    return AlgebraElement(a.group, a.ring, a.ring.add[a.coeffs, b.coeffs])


def negate(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.group, a.ring, a.ring.neg[a.coeffs])


def scale(a: AlgebraElement, c: int) -> AlgebraElement:
    return AlgebraElement(a.group, a.ring, a.ring.mul[c, a.coeffs])


def convolve(G: Group, ring: CoefficientRing, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Coefficient vector of ``ab``: shift b by each g in supp(a) and accumulate."""
    supp = np.nonzero(a)[0]
    if supp.size == 0:
        return np.zeros_like(b)
    shifted = b[G.translations[supp]]
    if ring.is_gf2:
        return np.bitwise_xor.reduce(shifted, axis=0)
    if ring.degree == 1:
        return (a[supp, None] * shifted).sum(axis=0) % ring.p
    terms = ring.mul[a[supp, None], shifted]
    acc = terms[0]
    for row in terms[1:]:
        acc = ring.add[acc, row]
    return acc


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_compatible(a, b)
    return AlgebraElement(a.group, a.ring, convolve(a.group, a.ring, a.coeffs, b.coeffs))


def star(a: AlgebraElement) -> AlgebraElement:
    """Linear extension of ``g -> g^-1``."""
    # inverses is an involution, so gathering by it permutes coefficients
    return AlgebraElement(a.group, a.ring, a.coeffs[a.group.inverses])


def augmentation(a: AlgebraElement) -> int:
    r = a.ring
    if r.degree == 1:
        return int(a.coeffs.sum() % r.p)
    acc = 0
    for c in a.coeffs:
        acc = int(r.add[acc, c])
    return acc


def is_symmetric(a: AlgebraElement) -> bool:
    return bool(np.array_equal(a.coeffs, a.coeffs[a.group.inverses]))


def _require_local(a: AlgebraElement) -> None:
    if not is_p_group(a.group, a.ring.p):
        raise AlgebraError(
            f"unit criterion needs |G| a power of {a.ring.p}; got order {a.group.order}"
        )


def is_unit(a: AlgebraElement) -> bool:
    """For a p-group over characteristic p, units are exactly the elements of nonzero augmentation."""
    _require_local(a)
    return augmentation(a) != 0


def inverse(a: AlgebraElement) -> AlgebraElement:
    """Inverse via the finite geometric series of a nilpotent element.

    With ``c = aug(a)`` and ``n = 1 - a/c`` (augmentation zero, hence nilpotent),
    ``a^-1 = c^-1 * (1 + n + n^2 + ...)``.
    """
    _require_local(a)
    r = a.ring
    c = augmentation(a)
    if c == 0:
        raise NotAUnit("element has zero augmentation")
    cinv = int(r.inv[c])
    G = a.group
    ident = np.zeros(G.order, dtype=np.int64)
    ident[0] = 1
    n = r.sub(ident, r.mul[cinv, a.coeffs])
    total = ident.copy()
    power = ident
    for _ in range(G.order):
        power = convolve(G, r, n, power)
        if not power.any():
            return AlgebraElement(G, r, r.mul[cinv, total])
        total = r.add[total, power]
    raise RuntimeError("nilpotent series did not terminate within |G| terms")


def commute(a: AlgebraElement, b: AlgebraElement) -> bool:
    return mul(a, b) == mul(b, a)


def left_matrix(a: AlgebraElement) -> np.ndarray:
    """Matrix M with ``(a*b).coeffs == M @ b.coeffs`` (mod p, prime fields only)."""
    G = a.group
    M = np.zeros((G.order, G.order), dtype=np.int64)
    for g in np.nonzero(a.coeffs)[0]:
        # column y receives a_g at row g*y
        M[G.table[g], np.arange(G.order)] += a.coeffs[g]
    return M % a.ring.p


def render(a: AlgebraElement) -> str:
    """Formal sum such as ``1 + x + x*y^2`` using generator words."""
    names = a.group.element_names
    r = a.ring
    parts = []
    for g in np.nonzero(a.coeffs)[0]:
        c = int(a.coeffs[g])
        if c == 1:
            parts.append(names[g])
            continue
        if r.degree == 1:
            coef = str(c)
        else:
            lo, hi = c % r.p, c // r.p
            terms = [t for t in (str(lo) if lo else "", "w" if hi == 1 else f"{hi}*w" if hi else "") if t]
            coef = terms[0] if len(terms) == 1 else "(" + " + ".join(terms) + ")"
        parts.append(coef if names[g] == "1" else f"{coef}*{names[g]}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# bit-sliced GF(2) kernels


def pack_gf2(rows: np.ndarray) -> np.ndarray:
    """Pack a (N, |G|) 0/1 matrix column-wise: result[g] is a bitset over the N rows."""
    return np.packbits(np.asarray(rows, dtype=np.uint8).T, axis=1)


def unpack_gf2(packed: np.ndarray, count: int) -> np.ndarray:
    return np.unpackbits(packed, axis=1, count=count).T


def gf2_batch_mul(G: Group, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Row-wise products of packed batches over GF(2).

    ``A`` and ``B`` are packed as by :func:`pack_gf2`; the output row x is
    ``XOR_g A[g] & B[g^-1 x]``, i.e. N products computed 8 at a time per byte.
    """
    out = np.zeros_like(A)
    trans = G.translations
    for g in range(G.order):
        ag = A[g]
        if not ag.any():
            continue
        out ^= ag[None, :] & B[trans[g]]
    return out

"""Small finite coefficient fields GF(p) and GF(p^2) given by lookup tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True, eq=False)
class CoefficientRing:
    """Finite field with elements ``0..size-1``; 0 and 1 are the additive and
    multiplicative identities.  Arithmetic is by table lookup, so all
    operations broadcast over numpy arrays.
    """

    p: int
    degree: int
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)
    name: str = ""

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int:
        return self.p**self.degree

    @property
    def is_gf2(self) -> bool:
        return self.p == 2 and self.degree == 1

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def from_int(self, k: int) -> int:
        return k % self.p

    def __repr__(self):
        return f"CoefficientRing({self.name})"


@lru_cache(maxsize=None)
def GF(p: int, degree: int = 1) -> CoefficientRing:
    """GF(p) or GF(p^2).

    GF(p^2) elements ``a + b*w`` are encoded as ``a + p*b`` with ``w`` a root of
    the lexicographically first monic irreducible quadratic; for p = 2 that is
    ``w^2 + w + 1``.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if degree == 1:
        idx = np.arange(p)
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
        name = f"GF({p})"
    elif degree == 2:
        # w^2 = c0 + c1*w, irreducible iff x^2 - c1 x - c0 has no root mod p
        c0, c1 = next(
            (c0, c1)
            for c1 in range(p)
            for c0 in range(p)
            if all((x * x - c1 * x - c0) % p for x in range(p))
        )
        q = p * p
        idx = np.arange(q)
        a, b = idx % p, idx // p
        add = ((a[:, None] + a[None, :]) % p) + p * ((b[:, None] + b[None, :]) % p)
        # (a + b w)(c + d w) = ac + bd c0 + (ad + bc + bd c1) w
        ac = a[:, None] * a[None, :]
        bd = b[:, None] * b[None, :]
        cross = a[:, None] * b[None, :] + b[:, None] * a[None, :]
        mul = (ac + bd * c0) % p + p * ((cross + bd * c1) % p)
        name = f"GF({p}^2)"
    else:
        raise ValueError("only GF(p) and GF(p^2) are provided")
    size = add.shape[0]
    neg = np.argmax(add == 0, axis=1)
    inv = np.zeros(size, dtype=np.int64)
    for x in range(1, size):
        inv[x] = int(np.argmax(mul[x] == 1))
    for arr in (add, mul, neg, inv):
        arr.setflags(write=False)
    return CoefficientRing(p, degree, add.astype(np.int64), mul.astype(np.int64), neg, inv, name)


def ring_from_flag(flag: str) -> CoefficientRing:
    """Parse ``"2"``, ``"3"``, ``"4"``, ``"2^2"``, ``"p2:3"`` style selectors."""
    flag = flag.strip().lower().replace("gf", "").strip("()")
    if flag.startswith("p2:"):
        return GF(int(flag[3:]), 2)
    if "^" in flag:
        base, _, exp = flag.partition("^")
        return GF(int(base), int(exp))
    n = int(flag)
    if _is_prime(n):
        return GF(n)
    r = int(round(n**0.5))
    if r * r == n and _is_prime(r):
        return GF(r, 2)
    raise ValueError(f"unsupported ring {flag!r}")

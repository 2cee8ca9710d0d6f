"""Finite groups stored as Cayley tables.

Elements are the integers ``0..order-1`` and element 0 is always the identity.
Every constructor runs an audit (Latin square, associativity, identity and
inverse consistency, generation) before returning.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import gcd
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORDER_CAP = 4096
FULL_ASSOC_LIMIT = 64


class GroupError(ValueError):
    """Raised for invalid group data or out-of-range family parameters."""


class OrderCapExceeded(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class Group:
    table: np.ndarray
    generators: tuple[tuple[str, int], ...] = ()
    label: str = ""
    audit: bool = field(default=True, repr=False)

    def __post_init__(self):
        table = np.ascontiguousarray(self.table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("Cayley table must be a non-empty square array")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "generators", tuple((str(n), int(i)) for n, i in self.generators))
        if self.audit:
            audit_group(self)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1)
        inv.setflags(write=False)
        return inv

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverses[g])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        result, base = 0, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def conj(self, g: int, h: int) -> int:
        """``g^h = h^-1 g h``."""
        return self.mul(self.mul(self.inv(h), g), h)

    def comm(self, g: int, h: int) -> int:
        """``[g, h] = g^-1 h^-1 g h``."""
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    @property
    def generator_indices(self) -> list[int]:
        return [i for _, i in self.generators]

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = int(self.table[x, g])
                k += 1
            orders[g] = k
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def translations(self) -> np.ndarray:
        """Row g holds ``g^-1 x`` for every x, so ``(g*b)[x] = b[row[x]]``."""
        t = self.table[self.inverses]
        t.setflags(write=False)
        return t

    @cached_property
    def squares(self) -> np.ndarray:
        return self.table[np.arange(self.order), np.arange(self.order)]

    @cached_property
    def element_names(self) -> list[str]:
        """Shortest words in the named generators (shortlex), or ``g<i>``."""
        names = [f"g{i}" for i in range(self.order)]
        names[0] = "1"
        if not self.generators:
            return names
        steps = []
        for name, idx in self.generators:
            steps.append((name, 1, idx))
            if self.inv(idx) != idx:
                steps.append((name, -1, self.inv(idx)))
        words: dict[int, list[tuple[str, int]]] = {0: []}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for name, e, s in steps:
                h = self.mul(g, s)
                if h not in words:
                    w = list(words[g])
                    if w and w[-1][0] == name:
                        w[-1] = (name, w[-1][1] + e)
                    else:
                        w.append((name, e))
                    words[h] = w
                    queue.append(h)
        for g, w in words.items():
            if w:
                names[g] = "*".join(n if e == 1 else f"{n}^{e}" for n, e in w)
        return names

    def generator(self, name: str) -> int:
        for n, i in self.generators:
            if n == name:
                return i
        raise KeyError(name)

    def __repr__(self):
        return f"Group({self.label or '?'}, order={self.order})"


def audit_group(G: Group) -> None:
    """Check every Group invariant; raise GroupError on the first failure."""
    t = G.table
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise GroupError("table entries out of range")
    full = np.arange(n)
    if not (np.all(np.sort(t, axis=1) == full) and np.all(np.sort(t, axis=0) == full[:, None])):
        raise GroupError("table is not a Latin square")
    if not (np.array_equal(t[0], full) and np.array_equal(t[:, 0], full)):
        raise GroupError("element 0 is not the identity")
    inv = G.inverses
    if not (np.all(t[full, inv] == 0) and np.all(t[inv, full] == 0)):
        raise GroupError("inverse table inconsistent")
    for name, g in G.generators:
        if not 0 <= g < n:
            raise GroupError(f"generator {name!r} out of range")
    if n <= FULL_ASSOC_LIMIT:
        # (ab)c == a(bc) for all triples
        if not np.array_equal(t[t[:, :, None], full[None, None, :]], t[full[:, None, None], t[None, :, :]]):
            raise GroupError("table is not associative")
    if G.generators:
        gens = G.generator_indices
    else:
        gens = list(range(n))
    if len(_closure(t, gens)) != n:
        raise GroupError("generators do not generate the group")
    if n > FULL_ASSOC_LIMIT:
        # Light's test: associativity on a generating set suffices.
        for g in gens:
            if not np.array_equal(t[t[:, g]], t[:, t[g]]):
                raise GroupError("table is not associative (Light's test)")


def _closure(table: np.ndarray, gens: Iterable[int]) -> list[int]:
    gens = [int(g) for g in gens]
    seen = {0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = int(table[g, s])
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen)


# ---------------------------------------------------------------------------
# subgroups and homomorphisms


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: Group
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", elems)
        if 0 not in elems:
            raise GroupError("subgroup must contain the identity")
        idx = np.asarray(elems)
        if not np.isin(self.parent.table[np.ix_(idx, idx)], idx).all():
            raise GroupError("subset is not closed")

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.element_set

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash(self.elements)

    @cached_property
    def is_abelian(self) -> bool:
        sub = self.parent.table[np.ix_(self.elements, self.elements)]
        return bool(np.array_equal(sub, sub.T))

    def as_group(self, generators: Sequence[int] | None = None, label: str = "") -> Group:
        """Reindex the subgroup as a standalone Group (parent indices kept in order)."""
        elems = self.elements
        pos = {g: i for i, g in enumerate(elems)}
        t = self.parent.table
        table = np.array([[pos[int(t[g, h])] for h in elems] for g in elems], dtype=np.int64)
        names = self.parent.element_names
        if generators is None:
            generators = minimal_generating_set(Group(table, audit=False))
            gens = [(names[elems[g]], g) for g in generators]
        else:
            gens = [(names[g], pos[g]) for g in generators]
        return Group(table, tuple(gens), label or f"subgroup of {self.parent.label}", audit=False)


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: Group
    target: Group
    images: np.ndarray

    def __post_init__(self):
        images = np.asarray(self.images, dtype=np.int64)
        images.setflags(write=False)
        object.__setattr__(self, "images", images)

    def is_homomorphism(self) -> bool:
        im = self.images
        return bool(np.array_equal(im[self.source.table], self.target.table[np.ix_(im, im)]))

    def is_isomorphism(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self.images.tolist())) == self.source.order
            and self.is_homomorphism()
        )

    def __call__(self, g: int) -> int:
        return int(self.images[g])


# ---------------------------------------------------------------------------
# constructors


def _metacyclic(n: int, k: int, r: int, s: int, names=("x", "y"), label="") -> Group:
    """Group of words x^i y^j with x^n = 1, y^k = x^s, y^-1 x y = x^r.

    Index of x^i y^j is ``i + n*j``.  Parameters must define a consistent
    extension; the audit rejects anything else.
    """
    if pow(r, k, n) != 1 % n or gcd(r, n) != 1 or (r * s - s) % n:
        raise GroupError("inconsistent metacyclic parameters")
    rinv = pow(r, -1, n) if n > 1 else 0
    # y^j x^c y^-j = x^(c * rinv^j)
    act = [pow(rinv, j, n) if n > 1 else 0 for j in range(k)]
    N = n * k
    table = np.empty((N, N), dtype=np.int64)
    for a in range(N):
        i, j = a % n, a // n
        for b in range(N):
            c, l = b % n, b // n
            e = i + c * act[j]
            jl = j + l
            if jl >= k:
                e += s
                jl -= k
            table[a, b] = (e % n) + n * jl
    gens = []
    if n > 1:
        gens.append((names[0], 1 % N))
    if k > 1:
        gens.append((names[1], n))
    return Group(table, tuple(gens), label)


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    _check_cap(n)
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return Group(table, (("x", 1),) if n > 1 else (), f"C{n}")


def elementary_abelian_2(k: int) -> Group:
    if k < 0:
        raise GroupError("elementary_abelian_2(k) needs k >= 0")
    n = 1 << k
    _check_cap(n)
    idx = np.arange(n)
    gens = tuple((f"e{i + 1}", 1 << i) for i in range(k))
    return Group(idx[:, None] ^ idx[None, :], gens, f"C2^{k}")


def dihedral(order: int) -> Group:
    if order < 2 or order % 2:
        raise GroupError("dihedral(2n) needs an even order >= 2")
    n = order // 2
    return _metacyclic(n, 2, -1 % n if n > 1 else 0, 0, ("r", "s"), f"D{order}")


def generalized_quaternion(order: int) -> Group:
    n = order.bit_length() - 1
    if order < 8 or order != 1 << n:
        raise GroupError("generalized_quaternion(2^n) needs n >= 3")
    _check_cap(order)
    h = order // 2
    label = "Q8" if order == 8 else f"Q{order}"
    G = _metacyclic(h, 2, h - 1, h // 2, ("x", "y"), label)
    if order == 8:
        return Group(G.table, (("i", G.generator("x")), ("j", G.generator("y"))), label)
    return G


def semidihedral(order: int) -> Group:
    n = order.bit_length() - 1
    if order < 16 or order != 1 << n:
        raise GroupError("semidihedral(2^n) needs n >= 4")
    h = order // 2
    return _metacyclic(h, 2, h // 2 - 1, 0, ("x", "y"), f"SD{order}")


def modular(order: int) -> Group:
    """M_{2^n} = <x, y | x^(2^(n-1)) = y^2 = 1, x^y = x^(1 + 2^(n-2))>."""
    n = order.bit_length() - 1
    if order < 16 or order != 1 << n:
        raise GroupError("modular(2^n) needs n >= 4")
    h = order // 2
    return _metacyclic(h, 2, h // 2 + 1, 0, ("x", "y"), f"M{order}")


def semidirect_c2m_c4(m: int) -> Group:
    """C_{2^m} x| C_4 = <x, y | x^(2^m) = y^4 = 1, x^y = x^-1>."""
    if m < 2:
        raise GroupError("semidirect_c2m_c4(m) needs m >= 2")
    n = 1 << m
    _check_cap(4 * n)
    return _metacyclic(n, 4, n - 1, 0, ("x", "y"), f"C{n}:C4")


def heisenberg_3() -> Group:
    """Extraspecial group of order 27 and exponent 3 (unitriangular 3x3 over GF(3))."""
    elems = list(product(range(3), repeat=3))
    pos = {e: i for i, e in enumerate(elems)}
    table = np.empty((27, 27), dtype=np.int64)
    for (a, b, c), i in pos.items():
        for (d, e, f), j in pos.items():
            table[i, j] = pos[((a + d) % 3, (b + e) % 3, (c + f + a * e) % 3)]
    return Group(table, (("x", pos[(1, 0, 0)]), ("y", pos[(0, 1, 0)])), "He3")


FAMILIES = {
    "cyclic": cyclic,
    "elementary_abelian_2": elementary_abelian_2,
    "dihedral": dihedral,
    "generalized_quaternion": generalized_quaternion,
    "semidihedral": semidihedral,
    "modular": modular,
    "semidirect_c2m_c4": semidirect_c2m_c4,
    "heisenberg_3": heisenberg_3,
}

_ALIASES = {
    "c": "cyclic",
    "e2": "elementary_abelian_2",
    "d": "dihedral",
    "dihedral": "dihedral",
    "q": "generalized_quaternion",
    "sd": "semidihedral",
    "m": "modular",
    "c2m_c4": "semidirect_c2m_c4",
    "he3": "heisenberg_3",
}


def make_family(spec: str, *args: int) -> Group:
    """Build a named family member.

    ``spec`` is either a family name with integer arguments passed separately,
    or a descriptor string such as ``"dihedral:8"``, ``"q8"``, ``"c2m_c4:3"``.

    >>> make_family("generalized_quaternion", 8).order
    8
    >>> make_family("dihedral:6").order
    6
    """
    spec = spec.strip().lower()
    if ":" in spec:
        name, _, rest = spec.partition(":")
        args = tuple(int(a) for a in rest.split(",") if a) + args
    else:
        name = spec
    if name == "q8":
        name, args = "generalized_quaternion", (8,)
    elif name == "d8":
        name, args = "dihedral", (8,)
    name = _ALIASES.get(name, name)
    try:
        ctor = FAMILIES[name]
    except KeyError:
        raise GroupError(f"unknown family {spec!r}") from None
    try:
        return ctor(*args)
    except TypeError as exc:
        raise GroupError(f"bad parameters for {name}: {exc}") from None


def _check_cap(n: int, cap: int = DEFAULT_ORDER_CAP) -> None:
    if n > cap:
        raise OrderCapExceeded(f"group order {n} exceeds cap {cap}")


def _merge_generators(a, b):
    names = {n for n, _ in a}
    out = list(a)
    for n, i in b:
        while n in names:
            n += "'"
        names.add(n)
        out.append((n, i))
    return out


def direct_product(G: Group, H: Group, cap: int = DEFAULT_ORDER_CAP, label: str = "") -> Group:
    """Componentwise product; element ``(g, h)`` has index ``g*|H| + h``."""
    n, m = G.order, H.order
    _check_cap(n * m, cap)
    table = (G.table[:, None, :, None] * m + H.table[None, :, None, :]).reshape(n * m, n * m)
    gens = _merge_generators(
        [(name, g * m) for name, g in G.generators],
        [(name, h) for name, h in H.generators],
    )
    return Group(table, tuple(gens), label or f"{G.label}x{H.label}")


def quotient(G: Group, normal: Iterable[int], label: str = "") -> Group:
    """Quotient by a normal subgroup; cosets numbered by least representative."""
    N = sorted(set(int(x) for x in normal))
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset[g] < 0:
            members = G.table[g, N]
            coset[members] = len(reps)
            reps.append(g)
    for g in range(G.order):
        for x in N:
            if coset[G.conj(x, g)] != 0:
                raise GroupError("subgroup is not normal")
    table = coset[G.table[np.ix_(reps, reps)]]
    gens = []
    seen = set()
    for name, g in G.generators:
        c = int(coset[g])
        if c != 0 and c not in seen:
            seen.add(c)
            gens.append((name, c))
    return Group(table, tuple(gens), label)


def central_product(G: Group, a: int, H: Group, b: int, label: str = "") -> Group:
    """Quotient of ``G x H`` by the cyclic subgroup generated by ``(a, b^-1)``."""
    if any(G.mul(a, g) != G.mul(g, a) for g in range(G.order)):
        raise GroupError("a is not central in G")
    if any(H.mul(b, h) != H.mul(h, b) for h in range(H.order)):
        raise GroupError("b is not central in H")
    if G.element_orders[a] != H.element_orders[b]:
        raise GroupError("amalgamated elements have different orders")
    P = direct_product(G, H)
    z = a * H.order + H.inv(b)
    N = _closure(P.table, [z])
    return quotient(P, N, label or f"{G.label}o{H.label}")


# ---------------------------------------------------------------------------
# interrogation


def element_order(G: Group, g: int) -> int:
    return int(G.element_orders[g])


def center(G: Group) -> Subgroup:
    t = G.table
    return Subgroup(G, tuple(np.nonzero(np.all(t == t.T, axis=1))[0].tolist()))


def subgroup_generated(G: Group, gens: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(_closure(G.table, gens)))


def exponent(G: Group) -> int:
    e = 1
    for o in set(G.element_orders.tolist()):
        e = e * o // gcd(e, o)
    return e


def is_p_group(G: Group, p: int | None = None) -> bool:
    n = G.order
    if n == 1:
        return True
    if p is None:
        p = next(q for q in range(2, n + 1) if n % q == 0)
    while n % p == 0:
        n //= p
    return n == 1


def involutions(G: Group) -> list[int]:
    return [g for g in range(1, G.order) if G.element_orders[g] == 2]


@dataclass(frozen=True)
class GroupInvariants:
    is_abelian: bool
    exponent: int
    center: Subgroup
    involutions: tuple[int, ...]
    is_2_group: bool
    unique_involution: bool


def group_invariants(G: Group) -> GroupInvariants:
    inv = involutions(G)
    return GroupInvariants(
        is_abelian=G.is_abelian,
        exponent=exponent(G),
        center=center(G),
        involutions=tuple(inv),
        is_2_group=is_p_group(G, 2),
        unique_involution=len(inv) == 1,
    )


def derived_subgroup(G: Group) -> Subgroup:
    comms = {G.comm(g, h) for g in range(G.order) for h in range(g + 1, G.order)}
    return subgroup_generated(G, comms)


def frattini_2group(G: Group) -> Subgroup:
    """Subgroup generated by all squares; for a 2-group this is the Frattini subgroup."""
    if not is_p_group(G, 2):
        raise GroupError(f"{G.label or 'group'} is not a 2-group")
    phi = subgroup_generated(G, set(G.squares.tolist()))
    t = G.table
    inv = G.inverses
    # all commutators must lie in <squares>
    comm = t[t[inv[:, None], inv[None, :]], t]
    assert np.all(np.isin(comm, phi.elements)), "commutator outside <squares>"
    return phi


def quotient_coordinates(G: Group, normal: Subgroup) -> tuple[np.ndarray, int]:
    """Coordinates of G/N for N containing all squares (so G/N is elementary abelian).

    Returns ``(coords, d)``: ``coords[g]`` is a d-bit integer, and the map is a
    group homomorphism onto ``GF(2)^d``.
    """
    coords = np.full(G.order, -1, dtype=np.int64)
    coords[list(normal.elements)] = 0
    span = list(normal.elements)
    d = 0
    for g in range(G.order):
        if coords[g] >= 0:
            continue
        bit = 1 << d
        new = []
        for x in span:
            y = G.mul(x, g)
            coords[y] = coords[x] | bit
            new.append(y)
        span += new
        d += 1
    return coords, d


def index2_subgroups(G: Group) -> list[Subgroup]:
    """All subgroups of index 2, as kernels of nonzero functionals on G/<squares>."""
    if G.order % 2:
        return []
    sq = subgroup_generated(G, set(G.squares.tolist()))
    coords, d = quotient_coordinates(G, sq)
    out = []
    for f in range(1, 1 << d):
        members = [g for g in range(G.order) if bin(int(coords[g]) & f).count("1") % 2 == 0]
        out.append(Subgroup(G, tuple(members)))
    return out


# ---------------------------------------------------------------------------
# recognizers


def recognize_generalized_quaternion(G: Group) -> bool:
    return (
        G.order >= 8
        and is_p_group(G, 2)
        and not G.is_abelian
        and len(involutions(G)) == 1
    )


def recognize_c2m_c4(G: Group) -> tuple[int, int] | None:
    """Return a witness ``(x, y)`` if G is C_{2^m} x| C_4 with y inverting x, else None."""
    n = G.order
    if n < 16 or n & (n - 1) or G.is_abelian:
        return None
    xo = n // 4
    orders = G.element_orders
    xs = [g for g in range(n) if orders[g] == xo]
    ys = [g for g in range(n) if orders[g] == 4]
    for x in xs:
        cyc_x = set(_closure(G.table, [x]))
        xinv = G.inv(x)
        for y in ys:
            if G.conj(x, y) != xinv:
                continue
            if len(cyc_x.intersection(_closure(G.table, [y]))) != 1:
                continue
            if len(_closure(G.table, [x, y])) == n:
                return x, y
    return None


def minimal_generating_set(G: Group) -> list[int]:
    """Greedy generating set: repeatedly add an element of largest order outside the span."""
    order_rank = sorted(range(1, G.order), key=lambda g: (-int(G.element_orders[g]), g))
    gens: list[int] = []
    span = {0}
    for g in order_rank:
        if len(span) == G.order:
            break
        if g not in span:
            gens.append(g)
            span = set(_closure(G.table, gens))
    # drop redundant generators
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if len(_closure(G.table, rest)) == G.order:
            gens = rest
    return gens


# ---------------------------------------------------------------------------
# isomorphism


def _element_fingerprints(G: Group) -> np.ndarray:
    """Per-element (order, centralizer size, number of square roots)."""
    t = G.table
    cent = np.sum(t == t.T, axis=1)
    roots = np.bincount(G.squares, minlength=G.order)
    return np.stack([G.element_orders, cent, roots], axis=1)


def fingerprint(G: Group) -> tuple:
    elem = _element_fingerprints(G)
    prof = tuple(sorted(map(tuple, elem.tolist())))
    sq = subgroup_generated(G, set(G.squares.tolist()))
    return (
        G.order,
        G.is_abelian,
        exponent(G),
        center(G).order,
        len(involutions(G)),
        sq.order,
        derived_subgroup(G).order,
        prof,
    )


def is_isomorphic(G: Group, H: Group, cap: int = 256) -> GroupHom | None:
    """Return an isomorphism G -> H, or None.

    Backtracks over images of a small generating set of G, pruned by
    per-element fingerprints, after a whole-group fingerprint prefilter.
    """
    if G.order > cap or H.order > cap:
        raise OrderCapExceeded(f"isomorphism test limited to order {cap}")
    if G.order != H.order:
        return None
    if G.order == 1:
        return GroupHom(G, H, np.zeros(1, dtype=np.int64))
    if fingerprint(G) != fingerprint(H):
        return None
    fg = [tuple(r) for r in _element_fingerprints(G).tolist()]
    fh = [tuple(r) for r in _element_fingerprints(H).tolist()]
    by_print: dict[tuple, list[int]] = {}
    for h, key in enumerate(fh):
        by_print.setdefault(key, []).append(h)
    gens = minimal_generating_set(G)
    gens.sort(key=lambda g: len(by_print.get(fg[g], ())))
    n = G.order
    Gt, Ht = G.table, H.table

    def extend(imgs):
        phi = np.full(n, -1, dtype=np.int64)
        used = np.zeros(n, dtype=bool)
        phi[0] = 0
        used[0] = True
        queue = [0]
        k = len(imgs)
        for u in queue:
            pu = phi[u]
            for s, t in zip(gens[:k], imgs):
                v = Gt[u, s]
                w = Ht[pu, t]
                if phi[v] >= 0:
                    if phi[v] != w:
                        return None
                elif used[w]:
                    return None
                else:
                    phi[v] = w
                    used[w] = True
                    queue.append(v)
        return phi

    def search(imgs):
        phi = extend(imgs)
        if phi is None:
            return None
        if len(imgs) == len(gens):
            return phi
        g = gens[len(imgs)]
        for h in by_print.get(fg[g], ()):
            if h in imgs:
                continue
            found = search(imgs + [h])
            if found is not None:
                return found
        return None

    phi = search([])
    if phi is None:
        return None
    hom = GroupHom(G, H, phi)
    assert hom.is_isomorphism()
    return hom


# ---------------------------------------------------------------------------
# serialization


def group_to_json(G: Group) -> str:
    return json.dumps(
        {
            "label": G.label,
            "order": G.order,
            "table": G.table.tolist(),
            "generators": [{"name": n, "index": i} for n, i in G.generators],
        }
    )


def group_from_json(text: str) -> Group:
    try:
        data = json.loads(text)
        table = np.asarray(data["table"], dtype=np.int64)
        gens = tuple((g["name"], int(g["index"])) for g in data.get("generators", []))
        label = str(data.get("label", ""))
        order = int(data["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"malformed group JSON: {exc}") from None
    if table.shape != (order, order):
        raise GroupError("table shape does not match order")
    return Group(table, gens, label)
